#include "hitbox/curves.hpp"

#include <algorithm>

#include "hitbox/errors.hpp"
#include "hitbox/factor.hpp"
#include "hitbox/parallel.hpp"

namespace hitbox {

PlaneCurve::PlaneCurve(BiPoly f) : f_(std::move(f)) {
    if (f_.is_zero()) throw DomainError("zero polynomial does not define a curve");
}

std::string PlanePoint::to_string() const { return "(" + t.to_string() + "," + x.to_string() + ")"; }

bool operator<(const PlanePoint& a, const PlanePoint& b) {
    if (a.t != b.t) return sweep_less(a.t, b.t);
    return a.x < b.x;
}

std::optional<PlanePoint> eval_map(const Parametrization& psi, const Rational& v) {
    auto t = eval(psi.t, v);
    auto x = eval(psi.x, v);
    if (!t || !x) return std::nullopt;
    return PlanePoint{*t, *x};
}

std::optional<Rational> eval_map(const BiFrac& phi, const PlanePoint& p) { return eval(phi, p.t, p.x); }

bool verify_parametrization(const PlaneCurve& c, const Parametrization& psi, const BiFrac& phi) {
    if (!substitute(c.equation(), psi.t, psi.x).is_zero()) return false;
    const QFrac den = substitute(phi.den(), psi.t, psi.x);
    if (den.is_zero()) return false;
    const QFrac num = substitute(phi.num(), psi.t, psi.x);
    return num == den * QFrac(QPoly::x());
}

std::vector<PlanePoint> bounded_point_search(const PlaneCurve& c, long height_bound) {
    const auto ts = rationals_up_to_height(height_bound);
    const Integer bound(height_bound);
    auto per_t = parallel_map<std::vector<PlanePoint>>(ts.size(), [&](std::size_t i) {
        const QPoly g = specialize(c.equation(), ts[i]);
        if (g.is_zero()) throw DomainError("curve contains the line T = " + ts[i].to_string());
        std::vector<PlanePoint> pts;
        if (g.degree() < 1) return pts;
        for (const auto& x : rational_roots(g))
            if (height(x) <= bound) pts.push_back({ts[i], x});
        return pts;
    });
    std::vector<PlanePoint> out;
    for (auto& v : per_t) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PlanePoint> pullback_fiber(const BiFrac& phi, const std::vector<Rational>& values, const PlaneCurve& c,
                                       long search_height) {
    std::vector<PlanePoint> out;
    for (const auto& p : bounded_point_search(c, search_height)) {
        const Rational n = eval2(phi.num(), p.t, p.x), d = eval2(phi.den(), p.t, p.x);
        if (std::any_of(values.begin(), values.end(), [&](const Rational& v) { return (n - v * d).is_zero(); }))
            out.push_back(p);
    }
    return out;
}

std::vector<CaseIdentity> verify_case_identities(const std::vector<BiPoly>& S) {
    if (S.size() != 4) throw DomainError("expected four auxiliary polynomials");
    const BiFrac T(bi_t()), X(bi_x());
    auto k = [](long v) { return BiFrac(BiPoly::constant(QPoly::constant(Rational(v)))); };
    const BiFrac one = k(1);
    const BiFrac m = (T - one) * (T + one) * (T * T - T + one) * (T * T + T + one);
    const BiFrac F1(S[0]), F2(S[1]), F3(S[2]), F4(S[3]);

    std::vector<CaseIdentity> out;
    {
        const BiFrac w = k(16 * 9) * m;
        const BiFrac v = X / w;
        out.push_back({1, "v = x/(2^4*3^2*m): v^2 - 3m = F1/(2^4*3^2*m)^2", v * v - k(3) * m - F1 / (w * w) == BiFrac()});
    }
    {
        const BiFrac u = k(24) * m;
        out.push_back({2, "u = 24m: x^2 + 3u^2 = F2", X * X + k(3) * u * u - F2 == BiFrac()});
    }
    {
        const BiFrac v = (X + k(6)) / k(3), u = -(T * T);
        out.push_back({3, "v = (x+6)/3, u = -t^2: v^2 - u^3 - 1 = F3/9", v * v - u * u * u - one - F3 / k(9) == BiFrac()});
    }
    {
        const BiFrac y = k(4) * T * T * T;
        const BiFrac cubic = X * X * X + k(12) * X * X + k(48) * X + k(72);
        out.push_back({4, "y = 4t^3: y^2 - 2(x^3+12x^2+48x+72) = -2 F4", y * y - k(2) * cubic + k(2) * F4 == BiFrac()});
    }
    return out;
}

}  // namespace hitbox
