#include <doctest.h>

#include <random>
#include <set>

#include "hitbox/curves.hpp"
#include "hitbox/elliptic.hpp"
#include "hitbox/errors.hpp"
#include "hitbox/factor.hpp"
#include "hitbox/parse.hpp"

using namespace hitbox;

namespace {

Rational q(long n, long d = 1) { return Rational::normalize(n, d); }
QPoly V(const char* s) { return parse_xpoly(s); }  // X plays the role of V
BiPoly B(const char* s) { return parse_bipoly(s); }

const char* kF2 = "X^3 + 48*X^2 + (336 - 1296*T^2)*X - 10368*T^2 + 640";

Parametrization psi() { return {QFrac(V("X^3 - 9*X"), V("9 - 9*X^2")), QFrac(V("8*X^2 - 40"), V("1 - X^2"))}; }
BiFrac phi() { return BiFrac(B("X^2 - 1296*T^2 + 44*X + 160"), B("144*T")); }

std::vector<BiPoly> fermat_S() {
    return {B("X^2 - 62208*((T - 1)*(T + 1)*(T^2 - T + 1)*(T^2 + T + 1))^3"),
            B("X^2 + 1728*((T - 1)*(T + 1)*(T^2 - T + 1)*(T^2 + T + 1))^2"), B("X^2 + 12*X + 27 + 9*T^6"),
            B("X^3 + 12*X^2 + 48*X + 72 - 8*T^6")};
}

// Common rational zeros of f and g by eliminating X.
std::set<std::pair<Rational, Rational>> common_zeros(const BiPoly& f, const BiPoly& g) {
    std::set<std::pair<Rational, Rational>> out;
    const QPoly r = resultant(f, g);
    if (r.is_zero()) throw std::logic_error("common component");
    for (const auto& t : rational_roots(r)) {
        const QPoly h = gcd(specialize(f, t), specialize(g, t));
        if (h.degree() < 1) continue;
        for (const auto& x : rational_roots(h)) out.insert({t, x});
    }
    return out;
}

}  // namespace

TEST_CASE("evaluating the parametrization") {
    auto p = eval_map(psi(), 2);
    REQUIRE(p);
    CHECK(p->t == q(10, 27));
    CHECK(p->x == q(8, 3));
    CHECK_FALSE(eval_map(psi(), 1));
    CHECK_FALSE(eval_map(psi(), -1));
    auto z = eval_map(psi(), 0);
    REQUIRE(z);
    CHECK(*z == PlanePoint{0, -40});
    CHECK(eval2(B(kF2), q(10, 27), q(8, 3)).is_zero());
    CHECK_FALSE(eval_map(phi(), PlanePoint{0, -4}));
    CHECK(eval_map(phi(), PlanePoint{q(10, 27), q(8, 3)}) == std::optional<Rational>(2));
}

TEST_CASE("verifying parametrizations") {
    const PlaneCurve c(B(kF2));
    CHECK(verify_parametrization(c, psi(), phi()));
    const BiFrac broken(B("X^2 - 1296*T^2 + 44*X + 161"), B("144*T"));
    CHECK_FALSE(verify_parametrization(c, psi(), broken));
    const PlaneCurve line(B("X - T"));
    CHECK(verify_parametrization(line, {QFrac(V("X")), QFrac(V("X"))}, BiFrac(B("T"))));

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> n(-500, 500), d(1, 300);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        auto pt = eval_map(psi(), q(n(rng), d(rng)));
        if (!pt) continue;
        CHECK(c.contains(pt->t, pt->x));
        ++checked;
    }
    CHECK(checked >= 95);
}

TEST_CASE("pullback fibers") {
    const PlaneCurve c(B(kF2));
    auto fiber = pullback_fiber(phi(), {1, -1}, c, 200);
    CHECK(fiber == std::vector<PlanePoint>{{0, -40}, {0, -4}});

    // Exact elimination oracle over all heights.
    std::set<std::pair<Rational, Rational>> exact;
    for (long v : {1L, -1L}) {
        const BiPoly g = phi().num() - phi().den() * BiPoly::constant(QPoly::constant(v));
        for (const auto& z : common_zeros(c.equation(), g)) exact.insert(z);
    }
    CHECK(exact == std::set<std::pair<Rational, Rational>>{{0, -40}, {0, -4}});

    auto two = pullback_fiber(phi(), {2}, c, 30);
    CHECK(std::find(two.begin(), two.end(), PlanePoint{q(10, 27), q(8, 3)}) != two.end());

    const PlaneCurve circle(B("T^2 + X^2 + 1"));
    CHECK(pullback_fiber(BiFrac(B("X")), {3}, circle, 40).empty());
}

TEST_CASE("bounded point search") {
    const PlaneCurve genus2(B("X^2 - 3*(T^6 - 1)"));
    CHECK(bounded_point_search(genus2, 300) == std::vector<PlanePoint>{{-1, 0}, {1, 0}});

    const PlaneCurve c(B(kF2));
    auto pts = bounded_point_search(c, 50);
    for (const auto& p : {PlanePoint{0, -40}, PlanePoint{0, -4}, PlanePoint{q(10, 27), q(8, 3)}})
        CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
    for (const auto& p : pts) CHECK(c.contains(p.t, p.x));

    CHECK(bounded_point_search(PlaneCurve(B("T^2 + X^2 + 1")), 50).empty());

    auto small = bounded_point_search(c, 20), large = bounded_point_search(c, 40);
    std::vector<PlanePoint> filtered;
    for (const auto& p : large)
        if (height(p.t) <= 20 && height(p.x) <= 20) filtered.push_back(p);
    CHECK(small == filtered);

    CHECK_THROWS_AS(bounded_point_search(PlaneCurve(B("T*X - T")), 3), DomainError);
}

TEST_CASE("case identities") {
    auto ids = verify_case_identities(fermat_S());
    REQUIRE(ids.size() == 4);
    for (const auto& c : ids) {
        INFO(c.claim);
        CHECK(c.holds);
    }
    auto broken = fermat_S();
    broken[2] = broken[2] + B("1");
    CHECK_FALSE(verify_case_identities(broken)[2].holds);
    CHECK(64 * 27 == 3 * 24 * 24);
}

TEST_CASE("elliptic group law") {
    const auto e = EllipticCurve::short_form(0, 1);
    CHECK(ec_add(e, CurvePoint::affine(2, 3), CurvePoint::affine(2, 3)) == CurvePoint::affine(0, 1));
    CHECK(ec_add(e, CurvePoint::affine(2, 3), CurvePoint::at_infinity()) == CurvePoint::affine(2, 3));
    CHECK(ec_add(e, CurvePoint::affine(-1, 0), CurvePoint::affine(-1, 0)).infinity);
    CHECK_THROWS_AS(ec_add(e, CurvePoint::affine(1, 1), CurvePoint::affine(2, 3)), DomainError);
    CHECK_THROWS_AS(EllipticCurve::short_form(0, 0), DomainError);

    auto t = ec_torsion_lutz_nagell(e);
    for (const auto& a : t)
        for (const auto& b : t) {
            CHECK(ec_add(e, a, b) == ec_add(e, b, a));
            CHECK(std::find(t.begin(), t.end(), ec_add(e, a, b)) != t.end());
            for (const auto& c : t) CHECK(ec_add(e, ec_add(e, a, b), c) == ec_add(e, a, ec_add(e, b, c)));
        }
    CHECK(ec_mul(e, 6, CurvePoint::affine(2, 3)).infinity);
    CHECK(ec_order(e, CurvePoint::affine(2, 3)) == std::optional<int>(6));

    // Long Weierstrass model: y^2 + y = x^3 - x^2, 5-torsion.
    const EllipticCurve e11(0, -1, 1, 0, 0);
    CHECK(ec_order(e11, CurvePoint::affine(0, 0)) == std::optional<int>(5));
}

TEST_CASE("Lutz-Nagell torsion") {
    auto t = ec_torsion_lutz_nagell(EllipticCurve::short_form(0, 1));
    CHECK(t == std::vector<CurvePoint>{CurvePoint::at_infinity(), CurvePoint::affine(-1, 0), CurvePoint::affine(0, -1),
                                       CurvePoint::affine(0, 1), CurvePoint::affine(2, -3), CurvePoint::affine(2, 3)});
    CHECK(ec_torsion_lutz_nagell(EllipticCurve::short_form(-1, 0)).size() == 4);

    const auto e2 = EllipticCurve::short_form(0, 2);
    CHECK(ec_torsion_lutz_nagell(e2) == std::vector<CurvePoint>{CurvePoint::at_infinity()});
    // Every integral point of small height has infinite order.
    for (long x = -2; x <= 1000; ++x) {
        const Integer r = Integer(x) * x * x + 2;
        if (r < 0 || !mpz_perfect_square_p(r.get_mpz_t())) continue;
        Integer y;
        mpz_sqrt(y.get_mpz_t(), r.get_mpz_t());
        CHECK_FALSE(ec_order(e2, CurvePoint::affine(x, Rational(y))));
    }
    CHECK_THROWS_AS(ec_torsion_lutz_nagell(EllipticCurve::short_form(q(1, 2), 1)), DomainError);

    for (const auto& p : t) {
        auto n = ec_order(EllipticCurve::short_form(0, 1), p);
        REQUIRE(n);
        CHECK(*n <= kMazurBound);
    }
}

TEST_CASE("scaled models") {
    const QPoly cubic = V("X^3 + 12*X^2 + 48*X + 72");
    auto m = transform_scaled_model(2, cubic);
    CHECK(m.curve.a4() == Rational(0));
    CHECK(m.curve.a6() == Rational(64));
    std::set<std::pair<Rational, Rational>> back;
    for (const auto& p : ec_torsion_lutz_nagell(m.curve)) {
        if (p.infinity) continue;
        auto s = m.backward(p);
        CHECK(m.on_source(s));
        CHECK(m.forward(s) == p);
        back.insert({s.x, s.y});
    }
    CHECK(back == std::set<std::pair<Rational, Rational>>{{0, 12}, {0, -12}, {-4, 4}, {-4, -4}, {-6, 0}});

    auto id = transform_scaled_model(1, V("X^3 + 1"));
    CHECK(id.shift == Rational(0));
    CHECK(id.u == 1);
    CHECK(id.forward(CurvePoint::affine(2, 3)) == CurvePoint::affine(2, 3));

    for (const auto& [c, g] : {std::pair<Rational, const char*>{3, "X^3 - 2*X^2 - X + 5"}, {q(1, 2), "X^3 + 3*X^2 + 2*X + 2"}, {q(5, 3), "X^3 - 2*X^2 - 3*X"}}) {
        auto sm = transform_scaled_model(c, V(g));
        CHECK(sm.curve.is_integral_short());
        int found = 0;
        for (const auto& x : rationals_up_to_height(20)) {
            const Rational r = c * V(g).eval(x);
            if (r.sign() < 0 || !is_square(r)) continue;
            const CurvePoint p = CurvePoint::affine(x, sqrt_exact(r));
            CHECK(sm.curve.contains(sm.forward(p)));
            CHECK(sm.backward(sm.forward(p)) == p);
            ++found;
        }
        CHECK(found >= 4);
    }
}
