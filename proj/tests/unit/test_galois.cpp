#include <doctest.h>

#include <complex>
#include <random>

#include "hitbox/errors.hpp"
#include "hitbox/galois.hpp"
#include "hitbox/parse.hpp"
#include "hitbox/primes.hpp"

using namespace hitbox;

namespace {

QPoly X(const char* s) { return parse_xpoly(s); }

QPoly random_poly(std::mt19937_64& rng, int degree, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(d(rng));
    int lead = 0;
    while (lead == 0) lead = d(rng);
    c.emplace_back(lead);
    return QPoly(c);
}

// Every Frobenius cycle type over primes below the limit.
std::set<Partition> chebotarev_types(const QPoly& f, std::uint64_t limit) {
    std::set<Partition> out;
    for (std::uint64_t p = 3; p < limit; p = next_prime(p))
        if (auto t = cycle_type_mod_p(f, PrimeModulus(p))) out.insert(*t);
    return out;
}

std::vector<std::complex<double>> numeric_roots(const QPoly& f) {
    const QPoly m = monic(f);
    const int n = m.degree();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n + 1)), z(static_cast<std::size_t>(n));
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = m.coeff(i).mpq().get_d();
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(std::complex<double>(0.4, 0.9), i);
    for (int it = 0; it < 2000; ++it) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> num = 0, den = 1;
            for (int k = n; k >= 0; --k) num = num * z[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(k)];
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            z[static_cast<std::size_t>(i)] -= num / den;
        }
    }
    return z;
}

}  // namespace

TEST_CASE("transitive tables") {
    CHECK(transitive_table(2).size() == 1);
    CHECK(transitive_table(3).size() == 2);
    CHECK(transitive_table(4).size() == 5);
    CHECK(transitive_table(5).size() == 5);
    CHECK(transitive_table(6).size() == 16);
    std::multiset<std::size_t> orders4;
    for (const auto& e : transitive_table(4)) orders4.insert(e.order);
    CHECK(orders4 == std::multiset<std::size_t>{4, 4, 8, 12, 24});
    CHECK(transitive_table(2).front().order == 2);
    CHECK_THROWS_AS(transitive_table(7), DomainError);
    CHECK_THROWS_AS(transitive_table(1), DomainError);

    for (int n = 2; n <= 6; ++n) {
        for (const auto& e : transitive_table(n)) {
            bool all_even = true;
            for (const auto& g : e.group.elements()) all_even = all_even && g.is_even();
            CHECK(all_even == e.in_alternating);
            CHECK(cycle_type_set(e.group) == e.cycle_types);
        }
        // The table is exactly the transitive subgroup classes of S_n.
        const auto sn = symmetric_group(n);
        std::set<std::string> hit;
        std::size_t transitive = 0;
        for (const auto& c : subgroup_classes(sn)) {
            if (!c.representative.is_transitive()) continue;
            ++transitive;
            int matches = 0;
            for (const auto& e : transitive_table(n))
                if (are_conjugate_in(sn, c.representative, e.group)) {
                    ++matches;
                    hit.insert(e.label);
                }
            CHECK(matches == 1);
        }
        CHECK(transitive == transitive_table(n).size());
        CHECK(hit.size() == transitive_table(n).size());
    }

    std::multiset<std::size_t> idx;
    for (const auto& c : maximal_classes(find_transitive("6T3")->group)) idx.insert(c.index);
    CHECK(idx == std::multiset<std::size_t>{2, 2, 2, 3});
    CHECK(identify_transitive(find_transitive("6T7")->group).label == "6T7");
    CHECK(transitive_subgroup_labels(find_transitive("6T3")->group) == std::set<std::string>{"6T1", "6T2", "6T3"});
}

TEST_CASE("square test") {
    CHECK(is_square(Rational::normalize(4, 9)));
    CHECK_FALSE(is_square(Rational(-1)));
    CHECK(is_square(discriminant(X("3*X^4 - 4*X^3 + 4"))));
}

TEST_CASE("resolvent cubic") {
    CHECK(resolvent_cubic(X("X^4 + X + 1")) == X("X^3 - 4*X - 1"));
    CHECK(resolvent_cubic(X("X^4 - 1")) == X("X^3 + 4*X"));
    CHECK_THROWS_AS(resolvent_cubic(X("X^3 + 1")), DomainError);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        QPoly f = random_poly(rng, 4, 12);
        if (discriminant(f).is_zero()) continue;
        CHECK(discriminant(resolvent_cubic(f)) == discriminant(monic(f)));
    }
    for (int i = 0; i < 10; ++i) {
        QPoly f = monic(random_poly(rng, 4, 5));
        if (discriminant(f).is_zero()) continue;
        auto z = numeric_roots(f);
        std::complex<double> r[3] = {z[0] * z[1] + z[2] * z[3], z[0] * z[2] + z[1] * z[3], z[0] * z[3] + z[1] * z[2]};
        QPoly cubic = resolvent_cubic(f);
        CHECK(std::abs(-(r[0] + r[1] + r[2]) - cubic.coeff(2).mpq().get_d()) < 1e-6);
        CHECK(std::abs((r[0] * r[1] + r[0] * r[2] + r[1] * r[2]) - cubic.coeff(1).mpq().get_d()) < 1e-6);
        CHECK(std::abs(-(r[0] * r[1] * r[2]) - cubic.coeff(0).mpq().get_d()) < 1e-6);
    }
}

TEST_CASE("quartic classification of the A4 family") {
    auto g0 = classify_degree_le4(X("3*X^4 - 4*X^3 + 1"));
    CHECK(g0.order == std::optional<std::size_t>(2));
    CHECK_FALSE(g0.transitive);

    auto g1 = classify_degree_le4(X("3*X^4 - 4*X^3 + 4"));
    CHECK(g1.label == "4T4");
    CHECK(g1.evidence.disc_square);

    const Rational t = Rational::normalize(10, 27);
    QPoly p = X("3*X^4 - 4*X^3 + 1") + QPoly::constant(Rational(3) * t * t);
    auto gt = classify_degree_le4(p);
    CHECK(gt.mode == GaloisMode::definitive);
    CHECK(gt.label != "4T4");

    CHECK_THROWS_AS(classify_degree_le4(X("X^5 + 1")), DomainError);
    CHECK_THROWS_AS(classify_degree_le4(X("X + 1")), DomainError);
}

TEST_CASE("classification agrees with Chebotarev type sets") {
    std::vector<const char*> known{"X^4 + 1", "X^4 - 2", "X^4 + X + 1", "X^4 + 8*X + 12",
                                   "X^4 - 4*X^2 + 2", "X^4 + 5*X^2 + 5", "X^3 - 2", "X^3 - 3*X + 1", "X^2 + 1"};
    for (auto s : known) {
        auto id = classify_degree_le4(X(s));
        REQUIRE(id.transitive);
        CHECK(chebotarev_types(X(s), 3000) == find_transitive(id.label)->cycle_types);
    }

    std::mt19937_64 rng(5);
    int checked = 0;
    std::set<std::string> labels;
    for (int i = 0; i < 400 && checked < 60; ++i) {
        QPoly f = random_poly(rng, 3 + static_cast<int>(i % 2), 6);
        if (!is_irreducible_over_q(f)) continue;
        auto id = classify_degree_le4(f);
        CHECK(chebotarev_types(f, 3000) == find_transitive(id.label)->cycle_types);
        labels.insert(id.label);
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("reducible quartics") {
    CHECK(classify_degree_le4(X("(X^2 + 1)*(X^2 + 4)")).order == std::optional<std::size_t>(2));
    CHECK(classify_degree_le4(X("(X^2 + 1)*(X^2 - 2)")).order == std::optional<std::size_t>(4));
    CHECK(classify_degree_le4(X("(X^3 - 2)*(X - 5)")).order == std::optional<std::size_t>(6));
    CHECK(classify_degree_le4(X("(X^3 - 3*X + 1)*X")).order == std::optional<std::size_t>(3));
    CHECK(classify_degree_le4(X("X*(X - 1)*(X + 1)")).order == std::optional<std::size_t>(1));
    CHECK(classify_degree_le4(X("(X^2 + 3)^2")).order == std::optional<std::size_t>(2));
    CHECK(classify_degree_le4(X("X^4 - 1")).order == std::optional<std::size_t>(2));
}

TEST_CASE("classification properties") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> c(-20, 20);
    int done = 0, dedekind = 0;
    for (int i = 0; i < 300 && done < 50; ++i) {
        QPoly f = random_poly(rng, 2 + static_cast<int>(i % 3), 8);
        if (discriminant(f).is_zero()) continue;
        auto id = classify_degree_le4(f);
        ++done;
        const Rational shift = Rational::normalize(c(rng), 1 + (i % 5));
        auto moved = classify_degree_le4(compose(f, QPoly({shift, Rational(1)})));
        CHECK(moved.label == id.label);
        if (!id.transitive) continue;
        const auto* e = find_transitive(id.label);
        CHECK(id.evidence.disc_square == e->in_alternating);
        std::uint64_t p = next_prime(2 + static_cast<std::uint64_t>(rng() % 500));
        if (auto t = cycle_type_mod_p(f, PrimeModulus(p))) {
            CHECK(e->cycle_types.count(*t) == 1);
            ++dedekind;
        }
    }
    CHECK(done == 50);
    CHECK(dedekind > 20);
}

TEST_CASE("degree 5 and 6 sieve") {
    SieveOptions o;
    o.budget = 200;
    auto x6 = sieve_degree_5_6(X("X^6 + 63"), o);
    REQUIRE_FALSE(x6.candidates.empty());
    for (const auto& l : x6.candidates) CHECK(find_transitive(l)->order == 12);
    CHECK(std::find(x6.candidates.begin(), x6.candidates.end(), "6T16") == x6.candidates.end());
    for (const auto& l : x6.candidates)
        for (const auto& t : x6.evidence.observed) CHECK(find_transitive(l)->cycle_types.count(t) == 1);

    auto s5 = sieve_degree_5_6(X("X^5 - X - 1"), o);
    CHECK(s5.mode == GaloisMode::definitive);
    CHECK(s5.label == "5T5");

    auto red = sieve_degree_5_6(X("X^6 - 1"), o);
    CHECK(red.mode == GaloisMode::factor_types);
    CHECK(red.factor_type.to_string() == "{1,1,2,2}");

    o.budget = 0;
    CHECK_THROWS_AS(sieve_degree_5_6(X("X^5 - X - 1"), o), DomainError);

    SieveOptions within;
    within.budget = 40;
    within.within = transitive_subgroup_labels(find_transitive("6T3")->group);
    auto w = sieve_degree_5_6(X("X^6 + 63"), within);
    CHECK(w.label == "6T3");
}

TEST_CASE("sieve monotonicity") {
    for (auto s : {"X^6 + 63", "X^6 - 2", "X^5 - 2", "X^6 + 3", "X^6 - 3*X^2 - 1", "X^6 + X + 1"}) {
        std::vector<std::string> prev;
        for (std::size_t b = 5; b <= 200; b += 15) {
            SieveOptions o;
            o.budget = b;
            auto id = sieve_degree_5_6(X(s), o);
            if (b > 5)
                for (const auto& l : id.candidates)
                    CHECK(std::find(prev.begin(), prev.end(), l) != prev.end());
            prev = id.candidates;
        }
    }
}

TEST_CASE("groups_match") {
    const auto& a4 = find_transitive("4T4")->group;
    CHECK(groups_match(classify_degree_le4(X("3*X^4 - 4*X^3 + 4")), a4) == Match::yes);
    CHECK(groups_match(classify_degree_le4(X("3*X^4 - 4*X^3 + 1")), a4) == Match::no);
    SieveOptions o;
    o.budget = 200;
    const auto& d6 = find_transitive("6T3")->group;
    CHECK(groups_match(sieve_degree_5_6(X("X^6 + 63"), o), d6) == Match::yes);
    CHECK(groups_match(sieve_degree_5_6(X("X^6 - 1"), o), d6) == Match::no);
    GaloisId mixed;
    mixed.mode = GaloisMode::sieved;
    mixed.transitive = true;
    mixed.candidates = {"6T3", "6T6"};
    CHECK(groups_match(mixed, d6) == Match::indeterminate);
    mixed.candidates = {"6T6", "6T9"};
    CHECK(groups_match(mixed, d6) == Match::no);
}
