#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hitbox/factor.hpp"

namespace hitbox {

/// Cycle types are partitions of the degree, stored like factorization types.
using Partition = FactorizationType;

/// Bijection of {1..n}, n <= 16. Stored 0-based.
///
/// Products compose left to right: (a * b)(i) = b(a(i)).
class Permutation {
  public:
    static constexpr int kMaxDegree = 16;

    Permutation() = default;
    static Permutation identity(int degree);
    /// images[i-1] = image of i (1-based). Throws DomainError unless a bijection.
    static Permutation from_images(const std::vector<int>& images);
    /// Disjoint-cycle literal such as "(1,2,3)(4,5)"; "()" is the identity.
    static Permutation parse(std::string_view text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    /// 0-based image.
    int operator()(int point) const { return img_[static_cast<std::size_t>(point)]; }

    Permutation inverse() const;
    Permutation pow(int k) const;
    int order() const;
    bool is_identity() const;
    bool is_even() const;
    Partition cycle_type() const;

    /// 4 bits per point.
    std::uint64_t code() const;
    static Permutation from_code(std::uint64_t code, int degree);

    std::string to_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<std::uint8_t> img_;
};

constexpr std::size_t kDefaultOrderBound = 10080;

/// A finite permutation group with its elements listed explicitly.
class PermGroup {
  public:
    /// Breadth-first product closure. Throws ResourceError past `bound` elements.
    static PermGroup closure(int degree, const std::vector<Permutation>& generators,
                             std::size_t bound = kDefaultOrderBound);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return gens_; }
    /// Sorted by code.
    const std::vector<Permutation>& elements() const { return elements_; }

    bool contains(const Permutation& p) const;
    bool is_transitive() const;
    bool is_subgroup_of(const PermGroup& other) const;
    bool is_solvable() const;
    bool all_even() const;

  private:
    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elements_;
    std::vector<std::uint64_t> codes_;
};

/// One conjugacy class of subgroups of a parent group.
struct SubgroupClass {
    PermGroup representative;
    std::size_t index;
    bool is_maximal;
};

/// Derived subgroup as the normal closure of generator commutators.
PermGroup derived_subgroup(const PermGroup& g);

/// True iff c H c^-1 = K for some c in G.
bool are_conjugate_in(const PermGroup& g, const PermGroup& h, const PermGroup& k);

/// True iff some conjugate of H lies in K.
bool is_conjugate_contained_in(const PermGroup& g, const PermGroup& h, const PermGroup& k);

/// Representatives of every conjugacy class of subgroups, ascending order.
///
/// Solvable subgroups are reached by cyclic extension: from a class
/// representative H, every g in N_G(H) with g^p in H (p prime) gives <H, g>.
/// Non-solvable parents are additionally seeded with their perfect
/// subgroups, found as the perfect groups generated by an involution and one
/// further element.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, std::size_t bound = kDefaultOrderBound);

/// The classes flagged maximal. DomainError for the trivial group.
std::vector<SubgroupClass> maximal_classes(const PermGroup& g, std::size_t bound = kDefaultOrderBound);

std::set<Partition> cycle_type_set(const PermGroup& g);

/// Symmetric group S_n on n points (n <= 7 within the default bound).
PermGroup symmetric_group(int n);

}  // namespace hitbox
