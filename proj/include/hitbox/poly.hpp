#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hitbox/errors.hpp"
#include "hitbox/rational.hpp"

namespace hitbox {

inline bool is_zero(const Integer& n) { return n == 0; }

template <class C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational one() { return Rational(1); }
    static Rational from_long(long v) { return Rational(v); }
    static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingTraits<Integer> {
    static Integer one() { return Integer(1); }
    static Integer from_long(long v) { return Integer(v); }
    static Integer exact_div(const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

/// Dense univariate polynomial; coefficient i multiplies X^i.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and degree() is size() - 1.
template <class C>
class Poly {
  public:
    using coeff_type = C;

    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(C value) { return Poly(std::vector<C>{std::move(value)}); }
    static Poly monomial(C value, int degree) {
        std::vector<C> c(static_cast<std::size_t>(degree) + 1);
        c.back() = std::move(value);
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(RingTraits<C>::one(), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<C>& coeffs() const { return c_; }
    C coeff(int i) const { return (i < 0 || i > degree()) ? C{} : c_[static_cast<std::size_t>(i)]; }
    const C& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Poly derivative() const {
        std::vector<C> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * RingTraits<C>::from_long(static_cast<long>(i)));
        return Poly(std::move(d));
    }

    C eval(const C& x) const {
        C acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly scaled(const C& s) const {
        std::vector<C> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(a * s);
        return Poly(std::move(out));
    }

    /// Multiplication by X^k.
    Poly shifted(int k) const {
        if (is_zero()) return *this;
        std::vector<C> out(static_cast<std::size_t>(k), C{});
        out.insert(out.end(), c_.begin(), c_.end());
        return Poly(std::move(out));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                out[i] = a.c_[i] + b.c_[i];
            else
                out[i] = i < a.c_.size() ? a.c_[i] : b.c_[i];
        }
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<C> out;
        out.reserve(a.c_.size());
        for (const auto& x : a.c_) out.push_back(-x);
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (hitbox_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(unsigned e) const {
        Poly result = constant(RingTraits<C>::one());
        Poly base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

  private:
    static bool hitbox_is_zero(const C& v) {
        using hitbox::is_zero;
        return is_zero(v);
    }
    void trim() {
        while (!c_.empty() && hitbox_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

template <class C>
bool is_zero(const Poly<C>& p) {
    return p.is_zero();
}

using QPoly = Poly<Rational>;
using ZPoly = Poly<Integer>;

/// Q[T][X]: coefficient j (a polynomial in T) multiplies X^j.
using BiPoly = Poly<QPoly>;

/// Quotient and remainder over Q.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);

/// Exact quotient in Q[T]; DomainError when b does not divide a.
QPoly exact_quotient(const QPoly& a, const QPoly& b);

template <>
struct RingTraits<QPoly> {
    static QPoly one() { return QPoly::constant(Rational(1)); }
    static QPoly from_long(long v) { return QPoly::constant(Rational(v)); }
    static QPoly exact_div(const QPoly& a, const QPoly& b) { return exact_quotient(a, b); }
};

QPoly monic(const QPoly& f);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
QPoly gcd(const QPoly& f, const QPoly& g);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over any integral domain.
template <class C>
Poly<C> pseudo_remainder(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    const C lb = b.leading();
    std::vector<C> r = a.coeffs();
    const int db = b.degree();
    // Exactly deg a - deg b + 1 multiplications by lc(b).
    for (int k = a.degree(); k >= db; --k) {
        const C lr = r[static_cast<std::size_t>(k)];
        for (auto& v : r) v = v * lb;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] = r[static_cast<std::size_t>(k - db + j)] - lr * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return Poly<C>(std::move(r));
}

template <class C>
C power(const C& base, unsigned e) {
    C result = RingTraits<C>::one();
    C b = base;
    while (e) {
        if (e & 1u) result = result * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return result;
}

/// f(g(X)) by Horner's rule.
template <class C>
Poly<C> compose(const Poly<C>& f, const Poly<C>& g) {
    Poly<C> out;
    for (int i = f.degree(); i >= 0; --i) out = out * g + Poly<C>::constant(f.coeff(i));
    return out;
}

/// Resultant by the subresultant polynomial remainder sequence; works over
/// any integral domain with exact division (Q, Z, Q[T]).
template <class C>
C resultant(Poly<C> a, Poly<C> b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant with a zero polynomial");
    C sign = RingTraits<C>::one();
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2) && (b.degree() % 2)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) return sign * power(b.leading(), static_cast<unsigned>(a.degree()));
    C g = RingTraits<C>::one();
    C h = RingTraits<C>::one();
    for (;;) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() % 2) && (b.degree() % 2)) sign = -sign;
        Poly<C> r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return C{};
        const C divisor = g * power(h, static_cast<unsigned>(delta));
        std::vector<C> rc;
        for (const auto& v : r.coeffs()) rc.push_back(RingTraits<C>::exact_div(v, divisor));
        b = Poly<C>(std::move(rc));
        g = a.leading();
        // h <- g^delta / h^(delta - 1); unchanged when delta == 0.
        if (delta > 0)
            h = RingTraits<C>::exact_div(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
        if (b.degree() == 0) {
            const int da = a.degree();
            C lbpow = power(b.leading(), static_cast<unsigned>(da));
            if (da == 0) return sign * lbpow * h;
            return sign * RingTraits<C>::exact_div(lbpow, power(h, static_cast<unsigned>(da - 1)));
        }
    }
}

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Rational discriminant(const QPoly& f);

/// Same convention, for f in Q[T][X] with respect to X.
QPoly discriminant_in_x(const BiPoly& p);

/// l(T): the X-leading coefficient.
QPoly leading_coeff_in_x(const BiPoly& p);

/// P(t, X).
QPoly specialize(const BiPoly& p, const Rational& t);

/// Swaps the roles of T and X.
BiPoly swap_variables(const BiPoly& p);

/// f / gcd(f, f'), monic.
QPoly squarefree_part(const QPoly& f);

/// Yun decomposition: f = lc * prod s_i^i with s_i monic, squarefree, pairwise coprime.
/// Entry i-1 holds s_i (possibly 1).
std::vector<QPoly> squarefree_decomposition(const QPoly& f);

/// Primitive integer model: f = content * primitive with positive leading coefficient.
ZPoly primitive_integer_part(const QPoly& f, Rational* content = nullptr);
QPoly to_qpoly(const ZPoly& f);

/// gcd over Q[T][X] regarded over Q(T) is trivial (X-degree 0 result).
bool separable_over_qt(const BiPoly& p);

std::string to_string(const QPoly& f, char var = 'X');
std::string to_string(const BiPoly& f);

/// Value of f at t, where the T-coefficients are evaluated first.
Rational eval2(const BiPoly& p, const Rational& t, const Rational& x);

/// Lift a univariate polynomial in T to Q[T][X] (X-degree 0), or in X.
BiPoly bipoly_from_t(const QPoly& t_poly);
BiPoly bipoly_from_x(const QPoly& x_poly);

/// Determinant of the Sylvester matrix by exact Gaussian elimination; a
/// resultant path independent of the remainder sequence.
Rational sylvester_resultant(const QPoly& f, const QPoly& g);

}  // namespace hitbox
