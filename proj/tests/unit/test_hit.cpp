#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "hitbox/errors.hpp"
#include "hitbox/fixture.hpp"
#include "hitbox/parse.hpp"
#include "hitbox/primes.hpp"
#include "hitbox/report.hpp"

using namespace hitbox;

namespace {

Rational q(long n, long d = 1) { return Rational::normalize(n, d); }
BiPoly B(const char* s) { return parse_bipoly(s); }

const HitData& serre() {
    static const HitData d = load_fixture(bundled_fixture("serre-a4"));
    return d;
}
const HitData& fermat() {
    static const HitData d = load_fixture(bundled_fixture("fermat-x6"));
    return d;
}
const HitData& toy() {
    static const HitData d = load_fixture(bundled_fixture("toy-square"));
    return d;
}

bool squarefree(const QPoly& f) { return f.degree() < 1 || gcd(f, f.derivative()).degree() < 1; }

// t is degenerate when the X-degree drops or P(t, X) or some f(t, X) acquires a repeated root.
bool degenerate(const BiPoly& P, const std::vector<BiPoly>& S, const Rational& t) {
    const QPoly pt = specialize(P, t);
    if (pt.degree() != P.degree() || !squarefree(pt)) return true;
    return std::any_of(S.begin(), S.end(), [&](const BiPoly& f) { return !squarefree(specialize(f, t)); });
}

// Cycle types of the quartic's Frobenius over the primes below a bound.
std::set<FactorizationType> frobenius_types(const QPoly& f, std::uint64_t bound) {
    std::set<FactorizationType> out;
    for (std::uint64_t p = 3; p < bound; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (auto c = cycle_type_mod_p(f, PrimeModulus(p))) out.insert(*c);
    }
    return out;
}

std::string fixture_text(const std::string& P, const std::string& D, const std::string& S, const std::string& extra = "") {
    return "{\"P\": \"" + P + "\", \"D\": " + D + ", \"S\": " + S + extra + "}";
}

}  // namespace

TEST_CASE("exclusion sets") {
    CHECK(serre().D == std::set<Rational>{0});
    CHECK(fermat().D == std::set<Rational>{-1, 1});
    CHECK(toy().D == std::set<Rational>{0});
    CHECK(compute_exclusion_set(B("X^2 - T"), {B("X^2 - T")}) == std::set<Rational>{0});
    CHECK_THROWS_AS(compute_exclusion_set(B("(X - T)^2"), {}), DomainError);

    auto S = fermat().S;
    std::mt19937 rng(4);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(S.begin(), S.end(), rng);
        CHECK(compute_exclusion_set(fermat().P, S) == fermat().D);
    }

    // Every element of D is degenerate, and nothing else of small height is.
    for (const HitData* d : {&serre(), &fermat(), &toy()}) {
        for (const auto& t : d->D) CHECK(degenerate(d->P, d->S, t));
        for (const auto& t : rationals_up_to_height(40)) {
            if (d->D.count(t)) continue;
            INFO(d->name << " t=" << t);
            CHECK_FALSE(degenerate(d->P, d->S, t));
        }
    }
}

TEST_CASE("generic group by sampling") {
    auto g = generic_group(serre().P, {1, 2, 3, q(1, 2), 5}, serre().D);
    CHECK(g.label == std::optional<std::string>("4T4"));
    CHECK(g.order == std::optional<std::size_t>(12));
    CHECK(g.note == "derived reference, not a proof");
    // No sample is exceptional: F2(t, X) has no rational root.
    for (const auto& [t, id] : g.samples) CHECK_FALSE(find_witness({serre().S[1]}, t));

    auto h = generic_group(fermat().P, {2, 3, q(1, 2), 5, 7}, fermat().D);
    CHECK(h.order == std::optional<std::size_t>(12));
    CHECK(h.label == std::optional<std::string>("6T3"));

    CHECK(generic_group(B("X^2 - T"), {2, 3, 5, 6, 7}, {0}).order == std::optional<std::size_t>(2));
    CHECK_THROWS_AS(generic_group(serre().P, {1, 2, 3, 5}, serre().D), DomainError);
    CHECK_THROWS_AS(generic_group(serre().P, {0, 1, 2, 3, 5}, serre().D), DomainError);
    CHECK_THROWS_AS(generic_group(B("X^2 - T"), {1, 4, 9, 16, 25}, {0}), ResourceError);
}

TEST_CASE("exceptional test") {
    auto r = exceptional_test(q(10, 27), serre());
    CHECK(r.verdict == Verdict::exceptional);
    REQUIRE(r.witness);
    CHECK(r.witness->index == 1);
    CHECK(r.witness->x == q(8, 3));
    CHECK(eval2(serre().S[1], q(10, 27), q(8, 3)).is_zero());
    CHECK(r.match == Match::no);

    auto one = exceptional_test(1, serre());
    CHECK(one.verdict == Verdict::generic);
    CHECK(one.galois.label == "4T4");
    CHECK(one.factorization_type == FactorizationType({4}));
    CHECK(rational_roots(specialize(serre().S[0], 1)).empty());
    CHECK(rational_roots(specialize(serre().S[1], 1)).empty());

    auto zero = exceptional_test(0, serre());
    CHECK(zero.verdict == Verdict::excluded);
    CHECK(zero.in_D);
    CHECK_FALSE(zero.witness);
    CHECK(zero.factorization_type == FactorizationType({1, 1, 2}));

    // The fermat fixture notes: t = 0 is outside D and exceptional.
    auto f0 = exceptional_test(0, fermat());
    CHECK(f0.verdict == Verdict::exceptional);
    CHECK(f0.factorization_type == FactorizationType({1, 1, 2, 2}));
    CHECK(rational_roots(specialize(fermat().S[0], 0)).empty());
    CHECK(rational_roots(specialize(fermat().S[1], 0)).empty());
    CHECK(rational_roots(specialize(fermat().S[2], 0)) == std::vector<Rational>{-9, -3});
    CHECK(rational_roots(specialize(fermat().S[3], 0)) == std::vector<Rational>{-6});
    REQUIRE(f0.witness);
    CHECK(f0.witness->index == 2);
    CHECK(f0.witness->x == Rational(-3));
}

TEST_CASE("equivalence on the degree-4 fixture against an independent classification") {
    const auto& ref = *find_transitive("4T4");
    auto rep = verify_equivalence(serre(), ref, 30);
    CHECK(rep.passed());
    CHECK(rep.violations.empty());
    CHECK(rep.indeterminates.empty());
    CHECK(rep.determinate_fraction() == 1.0);
    CHECK(rep.records.size() == rationals_up_to_height(30).size());
    CHECK(std::is_sorted(rep.records.begin(), rep.records.end(),
                         [](const auto& a, const auto& b) { return sweep_less(a.t, b.t); }));

    // A4 is the group whose Frobenius types are exactly {1111, 13, 22}.
    const std::set<FactorizationType> a4{FactorizationType({1, 1, 1, 1}), FactorizationType({1, 3}),
                                         FactorizationType({2, 2})};
    for (const auto& r : rep.records) {
        if (r.in_D || height(r.t) > 12) continue;
        const QPoly pt = specialize(serre().P, r.t);
        const bool is_a4 = is_irreducible_over_q(pt) && frobenius_types(pt, 1500) == a4;
        INFO("t=" << r.t);
        CHECK(is_a4 == (r.match == Match::yes));
        if (r.witness) CHECK(eval2(serre().S[r.witness->index], r.t, r.witness->x).is_zero());
    }
}

TEST_CASE("equivalence on the degree-6 fixture") {
    auto rep = verify_equivalence(fermat(), *find_transitive("6T3"), 30);
    CHECK(rep.violations.empty());
    CHECK(rep.passed());
    for (const auto& r : rep.indeterminates) CHECK(r.galois.mode == GaloisMode::sieved);
    for (const auto& r : rep.records) {
        if (!r.witness) continue;
        CHECK(eval2(fermat().S[r.witness->index], r.t, r.witness->x).is_zero());
        CHECK(r.t == Rational(0));
    }
}

TEST_CASE("vacuous configuration") {
    HitData d = make_hit_data(B("3*X^4 - 4*X^3 + 1 + 3*T^2"), {});
    CHECK(std::find(d.notes.begin(), d.notes.end(), "no maximal subgroup data") != d.notes.end());
    auto rep = verify_equivalence(d, *find_transitive("4T4"), 5);
    CHECK_FALSE(rep.config_valid);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("factorization implication") {
    auto rep = verify_factorization_implication(fermat(), 40);
    CHECK(rep.violations.empty());
    std::set<Rational> reducible;
    for (const auto& r : rep.records)
        if (r.factorization_type != FactorizationType({6})) reducible.insert(r.t);
    CHECK(reducible == std::set<Rational>{-1, 0, 1});
    for (const auto& r : rep.records)
        if (r.in_D) CHECK(r.verdict == Verdict::excluded);

    auto s = verify_factorization_implication(serre(), 30);
    CHECK(s.violations.empty());
    for (const auto& r : s.records)
        if (!r.in_D && r.factorization_type != FactorizationType({4})) CHECK(r.witness);

    auto gf = generic_factorization_type(fermat().P, fermat().D);
    CHECK(gf.certified);
    CHECK(gf.type == FactorizationType({6}));
    CHECK_FALSE(generic_factorization_type(B("X^2 - T^2"), {0}).certified);
}

TEST_CASE("enumerating exceptional parameters") {
    auto ex = enumerate_exceptional(serre(), 27);
    auto has = [&](const Rational& t) {
        return std::any_of(ex.begin(), ex.end(), [&](const auto& r) { return r.t == t; });
    };
    CHECK(has(q(10, 27)));
    for (const auto& r : ex) {
        REQUIRE(r.witness);
        CHECK(r.verdict == Verdict::exceptional);
        CHECK(eval2(serre().S[r.witness->index], r.t, r.witness->x).is_zero());
    }

    // Oracle: psi over a wider parameter range.
    std::set<Rational> image;
    for (const auto& v : rationals_up_to_height(81)) {
        auto p = eval_map(serre().parametrization->psi, v);
        if (p && height(p->t) <= 27 && !p->t.is_zero()) image.insert(p->t);
    }
    std::set<Rational> found;
    for (const auto& r : ex) found.insert(r.t);
    CHECK(found == image);
    auto cc = cross_check_parametrization(ex, serre(), 27);
    CHECK(cc.agrees());
    CHECK(std::set<Rational>(cc.image.begin(), cc.image.end()) == image);
    CHECK_THROWS_AS(cross_check_parametrization(ex, fermat(), 27), DomainError);

    auto fx = enumerate_exceptional(fermat(), 100);
    REQUIRE(fx.size() == 1);
    CHECK(fx[0].t == Rational(0));

    auto sq = enumerate_exceptional(toy(), 30);
    std::vector<Rational> squares;
    for (const auto& t : rationals_up_to_height(30))
        if (!t.is_zero() && is_square(t)) squares.push_back(t);
    std::vector<Rational> got;
    for (const auto& r : sq) got.push_back(r.t);
    CHECK(got == squares);

    auto small = enumerate_exceptional(serre(), 20);
    REQUIRE(small.size() <= ex.size());
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i].t == ex[i].t);
}

TEST_CASE("parallel sweeps are deterministic") {
    const auto& ref = *find_transitive("6T3");
    setenv("HITBOX_THREADS", "1", 1);
    const std::string serial = to_json(verify_equivalence(fermat(), ref, 12)).dump();
    setenv("HITBOX_THREADS", "4", 1);
    const std::string parallel = to_json(verify_equivalence(fermat(), ref, 12)).dump();
    unsetenv("HITBOX_THREADS");
    CHECK(serial == parallel);
}

TEST_CASE("fixture loading and validation") {
    CHECK(serre().s_provenance == Provenance::fixture);
    CHECK(serre().d_provenance == Provenance::computed);
    std::vector<int> degs;
    for (const auto& f : serre().S) degs.push_back(f.degree());
    CHECK(degs == std::vector<int>{4, 3});
    degs.clear();
    for (const auto& f : fermat().S) degs.push_back(f.degree());
    CHECK(degs == std::vector<int>{2, 2, 2, 3});
    REQUIRE(serre().parametrization);
    CHECK(verify_parametrization(PlaneCurve(serre().S[1]), serre().parametrization->psi, serre().parametrization->phi));
    CHECK(load_fixture(std::string(HITBOX_FIXTURE_DIR) + "/serre-a4").name == "serre-a4");

    auto rejects = [](const std::string& text, const std::string& needle) {
        try {
            parse_fixture(text, "case.json");
        } catch (const ValidationError& e) {
            const std::string what = e.what();
            INFO(what);
            CHECK(what.find("case.json") != std::string::npos);
            CHECK(what.find(needle) != std::string::npos);
            return;
        }
        FAIL("accepted: " << text);
    };
    rejects(fixture_text("X^2 - T", "[\"0\"]", "[\"2*X^2 - T\"]"), "S[0]: not monic");
    rejects(fixture_text("X^2 - T", "[\"1\"]", "[\"X^2 - T\"]"), "D: declared set differs");
    rejects(fixture_text("X^2 - T", "[\"0\"]", "[\"X^2 - \"]"), "S[0]");
    rejects(fixture_text("X^2 - T", "[\"0/0\"]", "[]"), "D[0]");
    rejects("{\"P\": ", "malformed JSON");
    rejects("{\"P\": \"X^2 - T\", \"S\": []}", "D: missing");
    rejects(fixture_text("X^2 - T", "[\"0\"]", "[\"X\"]"), "X-degree");
    rejects(fixture_text("X^2 - T", "[\"0\"]", "[\"X^2 - T\"]", ", \"G_label\": \"4T4\""), "G_label");
    rejects(fixture_text("X^2 - T", "[\"0\"]", "[\"X^2 - T\"]", ", \"G_label\": \"2T1\", \"G_order\": 3"), "G_order");
    rejects(fixture_text("X^4 - T", "[\"0\"]", "[\"X^2 - T\"]", ", \"G_label\": \"4T3\""), "maximal-class");
    rejects(fixture_text("(X - T)^2", "[]", "[]"), "separable");

    auto empty = parse_fixture(fixture_text("X^2 - T", "[\"0\"]", "[]"), "case.json");
    CHECK(empty.S.empty());
    CHECK(std::find(empty.notes.begin(), empty.notes.end(), "no maximal subgroup data") != empty.notes.end());
    CHECK_THROWS_AS(load_fixture("/nonexistent/fixture.json"), ValidationError);
}

TEST_CASE("report rendering") {
    auto rep = verify_equivalence(serre(), *find_transitive("4T4"), 3);
    auto j = to_json(rep);
    CHECK(j["summary"]["passed"] == true);
    CHECK(j["summary"]["violations"] == 0);
    CHECK(j["records"].size() == rep.records.size());
    CHECK(j["records"][0]["t"] == "-1");
    const std::string table = render_table(rep);
    CHECK(table.find("result: pass") != std::string::npos);
    auto r = to_json(exceptional_test(q(10, 27), serre()));
    CHECK(r["witness"]["x"] == "8/3");
    CHECK(r["verdict"] == "exceptional");
}
