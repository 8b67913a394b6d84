#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hitbox/rational.hpp"

namespace hitbox {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// A verified prime.
class PrimeModulus {
  public:
    /// Throws DomainError if p is not prime.
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const { return p_; }
    operator std::uint64_t() const { return p_; }  // NOLINT(google-explicit-constructor)

    friend bool operator==(PrimeModulus, PrimeModulus) = default;

  private:
    std::uint64_t p_;
};

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// p-adic valuation; +infinity for zero.
class Valuation {
  public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    /// Only meaningful when finite.
    long value() const { return value_; }

    friend bool operator==(const Valuation&, const Valuation&) = default;

  private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

Valuation padic_valuation(const Rational& q, PrimeModulus p);
long padic_valuation(const Integer& n, std::uint64_t p);

/// Prime factorization of |n| by trial division followed by Pollard rho.
/// Returns (prime, exponent) pairs in increasing prime order; n = 0 is a
/// DomainError.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace hitbox
