#include "hitbox/poly.hpp"

#include <sstream>

namespace hitbox {

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational lb_inv = b.leading().inverse();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = r[static_cast<std::size_t>(k)] * lb_inv;
        q[static_cast<std::size_t>(k - db)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(k - db + j)];
            slot = slot - c * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator/(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }
QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

QPoly monic(const QPoly& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.leading().inverse());
}

QPoly gcd(const QPoly& f, const QPoly& g) {
    QPoly a = monic(f), b = monic(g);
    while (!b.is_zero()) {
        QPoly r = monic(a % b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Rational discriminant(const QPoly& f) {
    const int n = f.degree();
    if (n < 1) throw DomainError("discriminant of a constant polynomial");
    if (n == 1) return Rational(1);
    Rational res = resultant(f, f.derivative());
    if (((n * (n - 1)) / 2) % 2) res = -res;
    return res / f.leading();
}

QPoly leading_coeff_in_x(const BiPoly& p) {
    if (p.is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return p.leading();
}

QPoly discriminant_in_x(const BiPoly& p) {
    const int n = p.degree();
    if (n < 1) throw DomainError("discriminant needs X-degree >= 1");
    if (n == 1) return QPoly::constant(Rational(1));
    QPoly res = resultant(p, p.derivative());
    if (((n * (n - 1)) / 2) % 2) res = -res;
    return exact_quotient(res, p.leading());
}

QPoly specialize(const BiPoly& p, const Rational& t) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& tc : p.coeffs()) c.push_back(tc.eval(t));
    return QPoly(std::move(c));
}

BiPoly swap_variables(const BiPoly& p) {
    int tdeg = -1;
    for (const auto& tc : p.coeffs()) tdeg = std::max(tdeg, tc.degree());
    std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(tdeg + 1), std::vector<Rational>(p.coeffs().size()));
    for (std::size_t j = 0; j < p.coeffs().size(); ++j)
        for (int i = 0; i <= p.coeffs()[j].degree(); ++i) grid[static_cast<std::size_t>(i)][j] = p.coeffs()[j].coeffs()[static_cast<std::size_t>(i)];
    std::vector<QPoly> out;
    for (auto& row : grid) out.emplace_back(std::move(row));
    return BiPoly(std::move(out));
}

QPoly squarefree_part(const QPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree part of zero");
    return monic(f / gcd(f, f.derivative()));
}

std::vector<QPoly> squarefree_decomposition(const QPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
    std::vector<QPoly> out;
    if (f.degree() == 0) return out;
    const QPoly g = monic(f);
    const QPoly gp = g.derivative();
    const QPoly a0 = gcd(g, gp);
    QPoly b = g / a0;
    QPoly d = gp / a0 - b.derivative();
    while (b.degree() > 0) {
        QPoly a = gcd(b, d);
        out.push_back(a);
        b = b / a;
        d = d / a - b.derivative();
    }
    return out;
}

ZPoly primitive_integer_part(const QPoly& f, Rational* content) {
    if (f.is_zero()) {
        if (content) *content = Rational(0);
        return ZPoly();
    }
    Integer l = 1;
    for (const auto& c : f.coeffs()) l = lcm(l, c.den());
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        z.push_back(c.num() * (l / c.den()));
        g = gcd(g, z.back());
    }
    if (z.back() < 0) g = -g;
    for (auto& v : z) v /= g;
    if (content) *content = Rational::normalize(g, l);
    return ZPoly(std::move(z));
}

QPoly to_qpoly(const ZPoly& f) {
    std::vector<Rational> c;
    for (const auto& v : f.coeffs()) c.emplace_back(v);
    return QPoly(std::move(c));
}

bool separable_over_qt(const BiPoly& p) {
    if (p.degree() < 1) return false;
    return !discriminant_in_x(p).is_zero();
}

namespace {

std::string monomial_text(const Rational& c, const std::string& vars, bool first) {
    std::string out;
    const bool neg = c.sign() < 0;
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    const Rational a = c.abs();
    if (vars.empty()) return out + a.to_string();
    if (a != Rational(1)) out += a.to_string() + "*";
    return out + vars;
}

std::string power_text(char var, int e) {
    if (e == 0) return "";
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const QPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const Rational& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        out += monomial_text(c, power_text(var, i), first);
        first = false;
    }
    return out;
}

std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int j = f.degree(); j >= 0; --j) {
        const QPoly& tc = f.coeffs()[static_cast<std::size_t>(j)];
        for (int i = tc.degree(); i >= 0; --i) {
            const Rational& c = tc.coeffs()[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            std::string vars = power_text('T', i);
            const std::string xs = power_text('X', j);
            if (!vars.empty() && !xs.empty()) vars += "*";
            vars += xs;
            out += monomial_text(c, vars, first);
            first = false;
        }
    }
    return out;
}

Rational eval2(const BiPoly& p, const Rational& t, const Rational& x) { return specialize(p, t).eval(x); }

BiPoly bipoly_from_t(const QPoly& t_poly) { return BiPoly::constant(t_poly); }

BiPoly bipoly_from_x(const QPoly& x_poly) {
    std::vector<QPoly> c;
    for (const auto& a : x_poly.coeffs()) c.push_back(QPoly::constant(a));
    return BiPoly(std::move(c));
}

Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant with a zero polynomial");
    const int m = f.degree(), n = g.degree();
    const int size = m + n;
    if (size == 0) return Rational(1);
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = g.coeff(n - j);
    Rational det(1);
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int r = col; r < size; ++r)
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const auto& prow = a[static_cast<std::size_t>(col)];
        det = det * prow[static_cast<std::size_t>(col)];
        for (int r = col + 1; r < size; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)].is_zero()) continue;
            const Rational factor = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
            for (int c = col; c < size; ++c) row[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c)] - factor * prow[static_cast<std::size_t>(c)];
        }
    }
    return det;
}

}  // namespace hitbox
