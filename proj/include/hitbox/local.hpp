#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitbox/primes.hpp"
#include "hitbox/rational.hpp"

namespace hitbox {

/// A place of Q: the real place or a finite prime.
class Place {
  public:
    static Place real() { return Place(); }
    static Place finite(PrimeModulus p) { return Place(p.value()); }
    /// "real" or a prime number.
    static Place parse(const std::string& text);

    bool is_real() const { return p_ == 0; }
    std::uint64_t prime() const;
    std::string to_string() const;

    friend bool operator==(const Place&, const Place&) = default;

  private:
    Place() = default;
    explicit Place(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// (a,b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over Q_v.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Places where (a,b)_v can differ from +1: the real place, 2, and odd
/// primes dividing a numerator or denominator.
std::vector<Place> bad_places(const Rational& a, const Rational& b);

/// Solvability of y^2 = a x^2 + b x + c over Q_v, via the completed square
/// y^2 = a u^2 + d with d = c - b^2/(4a).
bool conic_solvable_local(const Rational& a, const Rational& b, const Rational& c, const Place& v);

/// Hasse-Minkowski over the bad places of (a, d).
bool conic_solvable_global(const Rational& a, const Rational& b, const Rational& c);

/// The completed-square constant d = c - b^2/(4a).
Rational conic_constant(const Rational& a, const Rational& b, const Rational& c);

}  // namespace hitbox
