#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hitbox/errors.hpp"
#include "hitbox/perm.hpp"

using namespace hitbox;

namespace {

Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

PermGroup group(int n, std::initializer_list<const char*> gens) {
    std::vector<Permutation> g;
    for (auto s : gens) g.push_back(P(s, n));
    return PermGroup::closure(n, g);
}

using ElementSet = std::set<std::uint64_t>;

ElementSet codes(const PermGroup& g) {
    ElementSet s;
    for (const auto& e : g.elements()) s.insert(e.code());
    return s;
}

// Every subgroup generated by at most two elements, as element sets.
std::vector<ElementSet> brute_subgroups(const PermGroup& g) {
    std::set<ElementSet> all;
    const auto& el = g.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i; j < el.size(); ++j)
            all.insert(codes(PermGroup::closure(g.degree(), {el[i], el[j]})));
    return {all.begin(), all.end()};
}

ElementSet conjugate_set(const ElementSet& s, const Permutation& c, int n) {
    ElementSet out;
    for (auto x : s) out.insert((c.inverse() * Permutation::from_code(x, n) * c).code());
    return out;
}

struct BruteSummary {
    std::size_t classes;
    std::multiset<std::size_t> maximal_indices;
};

BruteSummary brute_summary(const PermGroup& g) {
    auto subs = brute_subgroups(g);
    const int n = g.degree();
    std::vector<int> cls(subs.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next;
        for (const auto& c : g.elements()) {
            auto conj = conjugate_set(subs[i], c, n);
            auto it = std::find(subs.begin(), subs.end(), conj);
            cls[static_cast<std::size_t>(it - subs.begin())] = next;
        }
        ++next;
    }
    std::multiset<std::size_t> idx;
    std::set<int> counted;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].size() == g.order() || counted.count(cls[i])) continue;
        bool maximal = true;
        for (const auto& k : subs)
            if (k.size() > subs[i].size() && k.size() < g.order() &&
                std::includes(k.begin(), k.end(), subs[i].begin(), subs[i].end()))
                maximal = false;
        if (maximal) {
            idx.insert(g.order() / subs[i].size());
            counted.insert(cls[i]);
        }
    }
    return {static_cast<std::size_t>(next), idx};
}

std::multiset<std::size_t> maximal_indices(const PermGroup& g) {
    std::multiset<std::size_t> out;
    for (const auto& c : maximal_classes(g)) out.insert(c.index);
    return out;
}

}  // namespace

TEST_CASE("permutation literals and cycle types") {
    CHECK(P("(1,2,3)", 4).cycle_type().to_string() == "{1,3}");
    CHECK(Permutation::identity(6).cycle_type().to_string() == "{1,1,1,1,1,1}");
    CHECK(P("(1,2)(3,4,5,6)", 6).cycle_type().to_string() == "{2,4}");
    CHECK(P("(1 2 3)", 3) == P("(1,2,3)", 3));
    CHECK(P("()", 3).is_identity());
    CHECK(P("(1,2,3)(4,5)", 5).to_string() == "(1,2,3)(4,5)");
    CHECK(P("(1,2,3)(4,5)", 5).order() == 6);
    CHECK_FALSE(P("(1,2)", 3).is_even());
    CHECK_THROWS_AS(P("(1,2,2)", 3), ParseError);
    CHECK_THROWS_AS(P("(1,4)", 3), ParseError);
    CHECK_THROWS_AS(P("1,2", 3), ParseError);
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), DomainError);
    auto a = P("(1,2,3)", 3), b = P("(1,2)", 3);
    CHECK((a * b)(0) == b(a(0)));
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.pow(3).is_identity());
    CHECK(Permutation::from_code(a.code(), 3) == a);
}

TEST_CASE("closure") {
    CHECK(group(4, {"(1,2,3)", "(1,2)(3,4)"}).order() == 12);
    CHECK(group(2, {"(1,2)"}).order() == 2);
    CHECK(PermGroup::closure(3, {Permutation::identity(3)}).order() == 1);
    CHECK(symmetric_group(5).order() == 120);
    CHECK(group(4, {"(1,2,3,4)"}).is_transitive());
    CHECK_FALSE(group(4, {"(1,2)", "(3,4)"}).is_transitive());
    CHECK_THROWS_AS(PermGroup::closure(6, symmetric_group(6).generators(), 100), ResourceError);
    auto a4 = group(4, {"(1,2,3)", "(1,2)(3,4)"});
    CHECK(a4.is_subgroup_of(symmetric_group(4)));
    CHECK(a4.all_even());
    CHECK(a4.is_solvable());
    CHECK_FALSE(symmetric_group(5).is_solvable());
    CHECK(derived_subgroup(a4).order() == 4);
}

TEST_CASE("cycle type sets") {
    auto a4 = group(4, {"(1,2,3)", "(1,2)(3,4)"});
    std::set<Partition> want{Partition({1, 1, 1, 1}), Partition({2, 2}), Partition({1, 3})};
    CHECK(cycle_type_set(a4) == want);
    CHECK(cycle_type_set(symmetric_group(4)).size() == 5);
    CHECK(cycle_type_set(group(2, {"(1,2)"})).size() == 2);
}

TEST_CASE("subgroup classes of A4") {
    auto a4 = group(4, {"(1,2,3)", "(1,2)(3,4)"});
    auto cls = subgroup_classes(a4);
    REQUIRE(cls.size() == 5);
    std::vector<std::size_t> orders;
    for (const auto& c : cls) orders.push_back(c.representative.order());
    CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 12});
    CHECK(maximal_indices(a4) == std::multiset<std::size_t>{3, 4});
}

TEST_CASE("maximal classes of small groups") {
    CHECK(maximal_indices(group(2, {"(1,2)"})) == std::multiset<std::size_t>{2});
    CHECK(maximal_indices(symmetric_group(3)) == std::multiset<std::size_t>{2, 3});
    CHECK(maximal_indices(group(6, {"(1,2,3,4,5,6)"})) == std::multiset<std::size_t>{2, 3});
    auto d6 = group(6, {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"});
    CHECK(d6.order() == 12);
    CHECK(maximal_indices(d6) == std::multiset<std::size_t>{2, 2, 2, 3});
    CHECK_THROWS_AS(maximal_classes(PermGroup::closure(3, {})), DomainError);
}

TEST_CASE("subgroup classes agree with brute force") {
    std::vector<PermGroup> groups{
        group(4, {"(1,2,3)", "(1,2)(3,4)"}),
        symmetric_group(4),
        group(6, {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"}),
        group(5, {"(1,2,3,4,5)", "(2,3,5,4)"}),
        group(5, {"(1,2,3)", "(3,4,5)"}),
        symmetric_group(5),
    };
    for (const auto& g : groups) {
        auto want = brute_summary(g);
        auto cls = subgroup_classes(g);
        CHECK(cls.size() == want.classes);
        CHECK(maximal_indices(g) == want.maximal_indices);
    }
}

TEST_CASE("S6 lattice properties") {
    auto s6 = symmetric_group(6);
    auto cls = subgroup_classes(s6);
    CHECK(cls.size() == 56);
    std::size_t transitive = 0;
    for (const auto& c : cls) {
        CHECK(s6.order() % c.representative.order() == 0);
        CHECK(c.index * c.representative.order() == s6.order());
        if (c.representative.is_transitive()) ++transitive;
    }
    CHECK(transitive == 16);

    std::mt19937_64 rng(7);
    for (const auto& c : cls) {
        if (c.representative.order() != 8 && c.representative.order() != 60) continue;
        for (int r = 0; r < 20; ++r) {
            const auto& x = s6.elements()[rng() % s6.order()];
            std::vector<Permutation> gens;
            for (const auto& s : c.representative.generators()) gens.push_back(x.inverse() * s * x);
            auto h = PermGroup::closure(6, gens);
            int matches = 0;
            for (const auto& d : cls)
                if (are_conjugate_in(s6, h, d.representative)) ++matches;
            CHECK(matches == 1);
        }
    }
    for (const auto& c : cls) {
        auto sub = cycle_type_set(c.representative), all = cycle_type_set(s6);
        CHECK(std::includes(all.begin(), all.end(), sub.begin(), sub.end()));
    }
}
