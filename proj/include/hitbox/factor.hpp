#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitbox/modp.hpp"
#include "hitbox/poly.hpp"

namespace hitbox {

/// Multiset of degrees of the irreducible factors, with multiplicity.
/// Stored sorted ascending; also used for cycle types (a partition of n).
class FactorizationType {
  public:
    FactorizationType() = default;
    explicit FactorizationType(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return d_; }
    int total() const;
    std::size_t size() const { return d_.size(); }

    /// Multiset union.
    FactorizationType merged(const FactorizationType& other) const;

    /// "{1,1,2}"
    std::string to_string() const;

    friend bool operator==(const FactorizationType&, const FactorizationType&) = default;
    friend auto operator<=>(const FactorizationType&, const FactorizationType&) = default;

  private:
    std::vector<int> d_;
};

struct Factor {
    QPoly poly;  ///< monic, irreducible over Q
    int multiplicity;
};

struct Factorization {
    Rational unit;
    std::vector<Factor> factors;

    /// unit * prod factor^multiplicity.
    QPoly expand() const;
    FactorizationType type() const;
    bool is_irreducible() const { return factors.size() == 1 && factors[0].multiplicity == 1; }
};

/// Complete factorization over Q: squarefree decomposition, a modular
/// factorization at a good prime, Hensel lifting past the coefficient bound,
/// then subset recombination.
Factorization factor_over_q(const QPoly& f);

/// Irreducible factors of a primitive squarefree integer polynomial.
std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f);

FactorizationType factorization_type(const QPoly& f);

bool is_irreducible_over_q(const QPoly& f);

/// All rational roots, ascending. Candidates come from the monic integral
/// model, whose integer roots divide its constant term; they are located
/// p-adically and confirmed by exact evaluation.
std::vector<Rational> rational_roots(const QPoly& f);

/// Frobenius cycle type of f at p, or nullopt when p is unusable (p divides
/// the leading coefficient of the primitive integer model or f is not
/// squarefree mod p).
std::optional<FactorizationType> cycle_type_mod_p(const QPoly& f, PrimeModulus p);

/// Lifts f = lc * prod factors (mod p), factors monic and pairwise coprime,
/// to the same shape modulo p^k. Exposed for testing.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<PolyModP>& factors, unsigned k);

}  // namespace hitbox
