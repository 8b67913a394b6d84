#include "hitbox/elliptic.hpp"

#include <algorithm>
#include <sstream>

#include "hitbox/errors.hpp"
#include "hitbox/factor.hpp"
#include "hitbox/primes.hpp"

namespace hitbox {

std::string CurvePoint::to_string() const {
    if (infinity) return "O";
    return "(" + x.to_string() + "," + y.to_string() + ")";
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity != b.infinity) return a.infinity;
    if (a.infinity) return false;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

EllipticCurve::EllipticCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
    if (discriminant().is_zero()) throw DomainError("singular Weierstrass model");
}

EllipticCurve EllipticCurve::short_form(const Rational& A, const Rational& B) { return {0, 0, 0, A, B}; }

Rational EllipticCurve::discriminant() const {
    const Rational b2 = a1_ * a1_ + Rational(4) * a2_;
    const Rational b4 = Rational(2) * a4_ + a1_ * a3_;
    const Rational b6 = a3_ * a3_ + Rational(4) * a6_;
    const Rational b8 = a1_ * a1_ * a6_ + Rational(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    return -b2 * b2 * b8 - Rational(8) * b4 * b4 * b4 - Rational(27) * b6 * b6 + Rational(9) * b2 * b4 * b6;
}

bool EllipticCurve::contains(const CurvePoint& p) const {
    if (p.infinity) return true;
    const Rational& x = p.x;
    const Rational& y = p.y;
    return y * y + a1_ * x * y + a3_ * y == x * x * x + a2_ * x * x + a4_ * x + a6_;
}

bool EllipticCurve::is_integral_short() const {
    return a1_.is_zero() && a2_.is_zero() && a3_.is_zero() && a4_.is_integer() && a6_.is_integer();
}

std::string EllipticCurve::to_string() const {
    std::ostringstream os;
    os << "[" << a1_ << "," << a2_ << "," << a3_ << "," << a4_ << "," << a6_ << "]";
    return os.str();
}

CurvePoint ec_neg(const EllipticCurve& e, const CurvePoint& p) {
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, -p.y - e.a1() * p.x - e.a3());
}

CurvePoint ec_add(const EllipticCurve& e, const CurvePoint& p, const CurvePoint& q) {
    if (!e.contains(p) || !e.contains(q)) throw DomainError("point not on curve");
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (q == ec_neg(e, p)) return CurvePoint::at_infinity();
    Rational lambda;
    if (p.x != q.x) {
        lambda = (q.y - p.y) / (q.x - p.x);
    } else {
        lambda = (Rational(3) * p.x * p.x + Rational(2) * e.a2() * p.x + e.a4() - e.a1() * p.y) /
                 (Rational(2) * p.y + e.a1() * p.x + e.a3());
    }
    const Rational nu = p.y - lambda * p.x;
    const Rational x3 = lambda * lambda + e.a1() * lambda - e.a2() - p.x - q.x;
    const Rational y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
    return CurvePoint::affine(x3, y3);
}

CurvePoint ec_mul(const EllipticCurve& e, long n, const CurvePoint& p) {
    CurvePoint base = n < 0 ? ec_neg(e, p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::at_infinity();
    while (k) {
        if (k & 1u) acc = ec_add(e, acc, base);
        k >>= 1u;
        if (k) base = ec_add(e, base, base);
    }
    return acc;
}

std::optional<int> ec_order(const EllipticCurve& e, const CurvePoint& p, int bound) {
    if (!e.contains(p)) throw DomainError("point not on curve");
    CurvePoint q = p;
    for (int n = 1; n <= bound; ++n) {
        if (q.infinity) return n;
        q = ec_add(e, q, p);
    }
    return std::nullopt;
}

std::vector<CurvePoint> ec_torsion_lutz_nagell(const EllipticCurve& e) {
    if (!e.is_integral_short()) throw DomainError("Lutz-Nagell needs an integral short Weierstrass model");
    const Integer A = e.a4().num(), B = e.a6().num();
    const Integer D = Integer(4) * A * A * A + Integer(27) * B * B;

    // y ranges over positive integers with y^2 | D.
    std::vector<Integer> ys{Integer(1)};
    for (const auto& [p, k] : factor_integer(D)) {
        std::vector<Integer> next;
        for (const auto& y : ys) {
            Integer pe = 1;
            for (unsigned i = 0; i <= k / 2; ++i) {
                next.push_back(y * pe);
                pe *= p;
            }
        }
        ys = std::move(next);
    }
    ys.insert(ys.begin(), Integer(0));

    std::vector<CurvePoint> out{CurvePoint::at_infinity()};
    for (const auto& y : ys) {
        const QPoly g({Rational(B - y * y), Rational(A), Rational(0), Rational(1)});
        for (const auto& x : rational_roots(g)) {
            if (!x.is_integer()) continue;
            std::vector<Integer> signs{y};
            if (y != 0) signs.push_back(-y);
            for (const auto& s : signs) {
                const CurvePoint pt = CurvePoint::affine(x, Rational(s));
                if (ec_order(e, pt)) out.push_back(pt);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool ScaledModel::on_source(const CurvePoint& p) const { return p.infinity || p.y * p.y == c * cubic.eval(p.x); }

CurvePoint ScaledModel::forward(const CurvePoint& p) const {
    if (!on_source(p)) throw DomainError("point not on the source model");
    if (p.infinity) return p;
    const Rational u2 = Rational(u * u), u3 = Rational(u * u * u);
    return CurvePoint::affine(u2 * (c * p.x + shift), u3 * c * p.y);
}

CurvePoint ScaledModel::backward(const CurvePoint& p) const {
    if (!curve.contains(p)) throw DomainError("point not on the target model");
    if (p.infinity) return p;
    const Rational u2 = Rational(u * u), u3 = Rational(u * u * u);
    return CurvePoint::affine((p.x / u2 - shift) / c, p.y / u3 / c);
}

ScaledModel transform_scaled_model(const Rational& c, const QPoly& cubic) {
    if (c.is_zero()) throw DomainError("scale factor must be nonzero");
    if (cubic.degree() != 3 || cubic.leading() != Rational(1)) throw DomainError("expected a monic cubic");
    // Y^2 = X^3 + c a X^2 + c^2 b X + c^3 e
    const Rational a2 = c * cubic.coeff(2), a4 = c * c * cubic.coeff(1), a6 = c * c * c * cubic.coeff(0);
    const Rational shift = a2 / Rational(3);
    // W = X + shift, X = W - shift
    const Rational A = a4 - a2 * a2 / Rational(3);
    const Rational B = a6 - a2 * a4 / Rational(3) + Rational(2) * a2 * a2 * a2 / Rational(27);
    Integer u = 1;
    auto integral = [&](const Integer& v) {
        const Integer v2 = v * v;
        return (A * Rational(v2 * v2)).is_integer() && (B * Rational(v2 * v2 * v2)).is_integer();
    };
    while (!integral(u)) ++u;
    const Integer u2 = u * u;
    EllipticCurve target = EllipticCurve::short_form(A * Rational(u2 * u2), B * Rational(u2 * u2 * u2));
    return ScaledModel{c, cubic, shift, u, target};
}

}  // namespace hitbox
