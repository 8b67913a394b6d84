#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hitbox/factor.hpp"
#include "hitbox/perm.hpp"
#include "hitbox/poly.hpp"

namespace hitbox {

struct TransitiveGroupEntry {
    int degree;
    std::string label;  ///< "nTk"
    std::string name;
    std::vector<Permutation> generators;
    std::size_t order;
    std::set<Partition> cycle_types;
    bool in_alternating;
    PermGroup group;
    /// Fraction of elements with each cycle type.
    std::vector<std::pair<Partition, double>> type_density;
};

/// Transitive groups of degree n in the standard nTk order, validated
/// against their stated orders on first use. DomainError unless 2 <= n <= 6.
const std::vector<TransitiveGroupEntry>& transitive_table(int n);

/// Entry by label, or nullptr.
const TransitiveGroupEntry* find_transitive(const std::string& label);

/// Table entry conjugate to g in S_n. DomainError if g is not transitive
/// or its degree lies outside 2..6.
const TransitiveGroupEntry& identify_transitive(const PermGroup& g);

/// Cubic with roots x1x2+x3x4, x1x3+x2x4, x1x4+x2x3. Non-monic quartics are
/// made monic first.
QPoly resolvent_cubic(const QPoly& f);

enum class GaloisMode {
    definitive,
    sieved,
    factor_types  ///< reducible degree 5 or 6 input: only the factorization type is reported
};

struct GaloisEvidence {
    std::vector<std::uint64_t> primes;
    std::set<Partition> observed;
    bool disc_square = false;
};

struct GaloisId {
    GaloisMode mode = GaloisMode::definitive;
    int degree = 0;
    bool transitive = false;
    FactorizationType factor_type;
    /// Definitive: the group label. Transitive groups use "nTk"; splitting
    /// fields of reducible polynomials use abstract names ("1", "C2", "C2xC2", "C3", "S3").
    std::string label;
    /// Sieved: surviving labels in table order.
    std::vector<std::string> candidates;
    /// Definitive order, or the order shared by every sieved candidate.
    std::optional<std::size_t> order;
    GaloisEvidence evidence;

    std::string to_string() const;
};

/// Exact classification for degree 2..4. A non-squarefree input is
/// classified through its squarefree part, which has the same splitting field.
GaloisId classify_degree_le4(const QPoly& f);

struct SieveOptions {
    std::size_t budget = 60;
    /// A candidate is dropped once some cycle type it realizes with density d
    /// is still unobserved after k primes with k*d >= this threshold.
    double unseen_threshold = 8.0;
    /// When set, only these labels are considered (e.g. the transitive
    /// subgroups of a known ambient group).
    std::optional<std::set<std::string>> within;
};

/// Labels of table entries conjugate in S_n to a subgroup of `ambient`.
std::set<std::string> transitive_subgroup_labels(const PermGroup& ambient);

/// Dedekind cycle-type sieve for degree 5 or 6 against the transitive table.
GaloisId sieve_degree_5_6(const QPoly& f, const SieveOptions& options = {});

/// Dispatch on degree: degree 1 is trivial, 2..4 exact, 5..6 sieved.
GaloisId identify_galois(const QPoly& f, const SieveOptions& options = {});

enum class Match { yes, no, indeterminate };

std::string to_string(Match m);

/// Compares a specialized group with a transitive reference group. Orders
/// decide, because a good specialization embeds into the generic group.
Match groups_match(const GaloisId& id, const PermGroup& reference);

}  // namespace hitbox
