#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hitbox {

using Integer = mpz_class;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Values are never mutated in place once built; every arithmetic operator
/// returns a fresh, canonical value.
class Rational {
  public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    /// num/den in lowest terms. Throws DomainError when den == 0.
    static Rational normalize(const Integer& num, const Integer& den);
    static Rational from_mpq(mpq_class value);

    /// Accepts "a" or "a/b" with optional sign and surrounding whitespace.
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const { return from_mpq(::abs(value_)); }
    Rational inverse() const;
    Rational pow(long exponent) const;

    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return from_mpq(-a.value_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// max(|num|, den); the height used for bounded sweeps.
Integer height(const Rational& q);

/// Canonical sweep order: height, then numerator, then denominator.
bool sweep_less(const Rational& a, const Rational& b);

/// Every rational of height <= bound, in canonical sweep order.
std::vector<Rational> rationals_up_to_height(long bound);

/// Rationals of height exactly h, ascending numerator then denominator.
std::vector<Rational> rationals_of_height(long h);

/// True iff q = r^2 for some rational r.
bool is_square(const Rational& q);

/// Exact square root when q is a rational square.
Rational sqrt_exact(const Rational& q);

/// Symmetric residue of a modulo m, in (-m/2, m/2].
Integer symmetric_mod(const Integer& a, const Integer& m);

/// Tries to recover n/d with |n|, d <= sqrt(m/2) from a residue modulo m.
bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out);

}  // namespace hitbox

template <>
struct std::hash<hitbox::Rational> {
    std::size_t operator()(const hitbox::Rational& q) const noexcept;
};
