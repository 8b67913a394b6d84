#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hitbox/poly.hpp"
#include "hitbox/primes.hpp"

namespace hitbox {

/// Dense polynomial over F_p for a word-sized prime p < 2^32.
class PolyModP {
  public:
    using u64 = std::uint64_t;

    explicit PolyModP(PrimeModulus p) : p_(p.value()) { check_size(); }
    PolyModP(PrimeModulus p, std::vector<u64> coeffs);
    PolyModP(PrimeModulus p, std::initializer_list<u64> coeffs) : PolyModP(p, std::vector<u64>(coeffs)) {}
    /// Reduction of an integer polynomial.
    PolyModP(PrimeModulus p, const ZPoly& f);

    static PolyModP x(PrimeModulus p) { return PolyModP(p, {0, 1}); }

    u64 modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<u64>& coeffs() const { return c_; }
    u64 leading() const { return c_.back(); }

    PolyModP monic() const;
    PolyModP derivative() const;
    PolyModP operator+(const PolyModP& o) const;
    PolyModP operator-(const PolyModP& o) const;
    PolyModP operator*(const PolyModP& o) const;
    PolyModP scaled(u64 s) const;
    std::pair<PolyModP, PolyModP> divmod(const PolyModP& d) const;
    PolyModP operator%(const PolyModP& d) const { return divmod(d).second; }
    PolyModP operator/(const PolyModP& d) const { return divmod(d).first; }
    bool operator==(const PolyModP& o) const { return p_ == o.p_ && c_ == o.c_; }

    /// this^e mod m.
    PolyModP powmod(const Integer& e, const PolyModP& m) const;
    u64 eval(u64 x) const;

    u64 inverse(u64 a) const;

  private:
    void check_size() const;
    void trim();

    u64 p_;
    std::vector<u64> c_;
};

PolyModP gcd(PolyModP a, PolyModP b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
struct ExtendedGcd {
    PolyModP g, s, t;
};
ExtendedGcd extended_gcd(const PolyModP& a, const PolyModP& b);

bool is_squarefree(const PolyModP& f);

/// Distinct-degree factorization of a monic squarefree f: pairs
/// (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, PolyModP>> distinct_degree_factorization(const PolyModP& f);

/// Complete factorization into monic irreducibles, repeated according to
/// multiplicity, sorted. The leading coefficient of f is the unit left over.
std::vector<PolyModP> factor_mod_p(const PolyModP& f);

}  // namespace hitbox
