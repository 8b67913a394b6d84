#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hitbox/curves.hpp"
#include "hitbox/factor.hpp"
#include "hitbox/galois.hpp"
#include "hitbox/poly.hpp"

namespace hitbox {

enum class Provenance { computed, fixture };

std::string to_string(Provenance p);

/// A rational parametrization of one auxiliary curve f_i(T, X) = 0.
struct CurveParametrization {
    std::size_t curve_index = 0;
    Parametrization psi;
    BiFrac phi;
};

/// The pair (D, S) for P, with the reference group when known.
struct HitData {
    std::string name;
    BiPoly P;
    std::set<Rational> D;
    std::vector<BiPoly> S;
    Provenance d_provenance = Provenance::computed;
    Provenance s_provenance = Provenance::computed;
    std::optional<std::string> group_label;
    std::optional<std::size_t> group_order;
    std::optional<CurveParametrization> parametrization;
    std::vector<std::string> notes;
};

/// Rational roots of the leading coefficient of P, of its discriminant,
/// and of disc_X f for every f in S. DomainError if P is not separable
/// over Q(T) or some f has X-degree < 1.
std::set<Rational> compute_exclusion_set(const BiPoly& P, const std::vector<BiPoly>& S);

/// HitData with D computed from P and S.
HitData make_hit_data(BiPoly P, std::vector<BiPoly> S);

/// Structural checks: P separable, each f monic in X of X-degree >= 2, and
/// the X-degrees of S equal to the maximal-class indices of the reference
/// group when both are present. ValidationError naming the offending part.
void validate_hit_data(const HitData& data);

struct GenericGroup {
    std::optional<std::string> label;
    std::optional<std::size_t> order;
    /// Labels that attain the maximal order.
    std::vector<std::string> candidates;
    std::vector<std::pair<Rational, GaloisId>> samples;
    std::string note = "derived reference, not a proof";
};

/// Largest transitive group order attained over the samples. DomainError
/// when fewer than 5 samples are given or one lies in D; ResourceError when
/// no sample yields a transitive group of known order.
GenericGroup generic_group(const BiPoly& P, const std::vector<Rational>& samples, const std::set<Rational>& D,
                           std::size_t prime_budget = 200);

struct Witness {
    std::size_t index;  ///< position in S
    Rational x;         ///< S[index](t, x) == 0
};

/// Rational root of minimal height over all f in S (ties: lower index,
/// then sweep order), or nullopt.
std::optional<Witness> find_witness(const std::vector<BiPoly>& S, const Rational& t);

enum class Verdict { excluded, exceptional, generic, indeterminate };

std::string to_string(Verdict v);

struct SpecializationRecord {
    Rational t;
    bool in_D = false;
    std::optional<Witness> witness;
    FactorizationType factorization_type;
    GaloisId galois;
    /// Comparison with the reference group, when one is known and t is not in D.
    std::optional<Match> match;
    Verdict verdict = Verdict::generic;
};

struct HitOptions {
    std::size_t prime_budget = 60;
};

/// Classifies P(t, X). Excluded if t is in D, exceptional if some f has a
/// rational root, otherwise generic; indeterminate when there is no witness
/// and the comparison with the reference group is undecided.
SpecializationRecord exceptional_test(const Rational& t, const HitData& data, const HitOptions& options = {});

struct EquivalenceReport {
    std::string kind;
    long height_bound = 0;
    std::map<Verdict, std::size_t> counts;
    std::vector<SpecializationRecord> records;
    std::vector<SpecializationRecord> violations;
    std::vector<SpecializationRecord> indeterminates;
    bool config_valid = true;
    std::vector<std::string> notes;

    bool passed() const { return config_valid && violations.empty(); }
    /// Share of records outside D whose comparison was decided.
    double determinate_fraction() const;
};

/// Checks, for every t outside D with height <= bound, that a witness exists
/// exactly when the specialized group differs from the reference.
EquivalenceReport verify_equivalence(const HitData& data, const TransitiveGroupEntry& reference, long height_bound,
                                     const HitOptions& options = {});

struct GenericFactorization {
    FactorizationType type;
    /// True when some specialization outside D is irreducible, which forces
    /// P to be irreducible over Q(T).
    bool certified = false;
    std::optional<Rational> certificate;
};

/// Factorization type of P over Q(T) from the coarsest specialization type
/// among small integers outside D.
GenericFactorization generic_factorization_type(const BiPoly& P, const std::set<Rational>& D);

/// Checks, for every t outside D with height <= bound, that a change of
/// factorization type comes with a witness.
EquivalenceReport verify_factorization_implication(const HitData& data, long height_bound,
                                                   const HitOptions& options = {});

/// Every exceptional t of height <= bound with its witness, in sweep order.
std::vector<SpecializationRecord> enumerate_exceptional(const HitData& data, long height_bound,
                                                        const HitOptions& options = {});

struct ParametrizationCrossCheck {
    std::vector<Rational> image;       ///< psi_t(v) for v of height <= bound, t of height <= bound, outside D
    std::vector<Rational> missing;     ///< in the image but not enumerated
    std::vector<Rational> unexpected;  ///< enumerated but not in the image
    bool agrees() const { return missing.empty() && unexpected.empty(); }
};

/// Compares the exceptional parameters with the image of the fixture's
/// parametrization. DomainError if the data carries none.
ParametrizationCrossCheck cross_check_parametrization(const std::vector<SpecializationRecord>& exceptional,
                                                      const HitData& data, long height_bound);

}  // namespace hitbox
