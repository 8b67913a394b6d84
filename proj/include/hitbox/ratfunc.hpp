#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hitbox/poly.hpp"

namespace hitbox {

/// Brings a fraction to a canonical form where the ring allows it.
inline void reduce_fraction(QPoly& num, QPoly& den) {
    const QPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_quotient(num, g);
        den = exact_quotient(den, g);
    }
    const Rational lc = den.leading();
    num = num.scaled(lc.inverse());
    den = den.scaled(lc.inverse());
}

inline void reduce_fraction(BiPoly&, BiPoly&) {}

/// Fraction num/den over a polynomial ring. Zero denominators are rejected.
template <class R>
class Frac {
  public:
    Frac() : num_(), den_(R::constant(RingTraits<typename R::coeff_type>::one())) {}
    Frac(R num) : num_(std::move(num)), den_(R::constant(RingTraits<typename R::coeff_type>::one())) {}  // NOLINT
    Frac(R num, R den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("zero denominator in rational function");
        if (num_.is_zero()) den_ = R::constant(RingTraits<typename R::coeff_type>::one());
        else reduce_fraction(num_, den_);
    }

    const R& num() const { return num_; }
    const R& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend Frac operator+(const Frac& a, const Frac& b) { return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
    friend Frac operator-(const Frac& a, const Frac& b) { return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
    friend Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num_ * b.num_, a.den_ * b.den_); }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw DomainError("division by the zero rational function");
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }
    Frac operator-() const { return Frac(-num_, den_); }
    Frac pow(unsigned e) const { return Frac(num_.pow(e), den_.pow(e)); }

    /// Identity of rational functions, by cross multiplication.
    friend bool operator==(const Frac& a, const Frac& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  private:
    R num_, den_;
};

using QFrac = Frac<QPoly>;
using BiFrac = Frac<BiPoly>;

/// Value at v, or nullopt where the denominator vanishes.
std::optional<Rational> eval(const QFrac& f, const Rational& v);

/// Value at (t, x), or nullopt where the denominator vanishes.
std::optional<Rational> eval(const BiFrac& f, const Rational& t, const Rational& x);

/// p(t(V), x(V)) as a rational function of V.
QFrac substitute(const BiPoly& p, const QFrac& t, const QFrac& x);

/// f(t(V), x(V)) for a bivariate rational function.
QFrac substitute(const BiFrac& f, const QFrac& t, const QFrac& x);

/// The bivariate generators T and X.
BiPoly bi_t();
BiPoly bi_x();

std::string to_string(const QFrac& f, char var = 'V');

}  // namespace hitbox
