#include <doctest.h>

#include <random>

#include "hitbox/errors.hpp"
#include "hitbox/local.hpp"

using namespace hitbox;

namespace {

long vp(long n, long p) {
    if (n == 0) return 99;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// z^2 = a x^2 + b y^2 over Q_p, a and b integers with valuations 0 or 1:
// look for a primitive solution mod p^k whose gradient valuation m satisfies
// 2m + 1 <= k, which Hensel lifts.
bool padic_oracle(long a, long b, long p) {
    const long k = p == 2 ? 6 : 3;
    long mod = 1;
    for (long i = 0; i < k; ++i) mod *= p;
    for (long x = 0; x < mod; ++x)
        for (long y = 0; y < mod; ++y)
            for (long z = 0; z < mod; ++z) {
                if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                const long f = ((a * x % mod) * x + (b * y % mod) * y - z * z) % mod;
                if (f != 0) continue;
                const long m = std::min({vp(2 * a * x % mod, p), vp(2 * b * y % mod, p), vp(2 * z % mod, p)});
                if (2 * m + 1 <= k) return true;
            }
    return false;
}

bool homogeneous_search(const Rational& a, const Rational& d, long bound) {
    const Integer A = a.num() * a.den(), D = d.num() * d.den();
    for (long x = 0; x <= bound; ++x)
        for (long w = 0; w <= bound; ++w) {
            if (x == 0 && w == 0) continue;
            const Integer r = A * x * x + D * w * w;
            if (r < 0) continue;
            if (mpz_perfect_square_p(r.get_mpz_t())) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("places") {
    CHECK(Place::parse("real").is_real());
    CHECK(Place::parse("7").prime() == 7);
    CHECK(Place::parse("7").to_string() == "7");
    CHECK_THROWS(Place::parse("9"));
    CHECK_THROWS_AS(Place::parse("x"), ParseError);
    CHECK_THROWS_AS(Place::real().prime(), DomainError);
}

TEST_CASE("Hilbert symbol examples") {
    CHECK(hilbert_symbol(-1, -1, Place::real()) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::parse("2")) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::parse("3")) == 1);
    for (long a : {2L, -3L, 5L, 6L, -7L})
        for (auto v : {Place::real(), Place::parse("2"), Place::parse("3"), Place::parse("7")})
            CHECK(hilbert_symbol(a, -a, v) == 1);
    CHECK_THROWS_AS(hilbert_symbol(0, 1, Place::real()), DomainError);
}

TEST_CASE("Hilbert symbol against the p-adic search oracle") {
    const std::vector<long> classes2{1, 3, 5, 7, 2, 6, 10, 14};
    for (long a : classes2)
        for (long b : classes2) {
            INFO("a=" << a << " b=" << b);
            CHECK((hilbert_symbol(a, b, Place::parse("2")) == 1) == padic_oracle(a, b, 2));
        }
    for (long p : {3L, 5L}) {
        const long n = 2;  // non-residue mod 3 and mod 5
        const std::vector<long> cls{1, n, p, n * p, -1, -p};
        for (long a : cls)
            for (long b : cls) {
                INFO("p=" << p << " a=" << a << " b=" << b);
                CHECK((hilbert_symbol(a, b, Place::finite(PrimeModulus(static_cast<std::uint64_t>(p)))) == 1) ==
                      padic_oracle(a, b, p));
            }
    }
}

TEST_CASE("Hilbert symbol is bilinear and satisfies the product formula") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-300, 300), den(1, 40);
    auto random_q = [&] {
        long n = 0;
        while (n == 0) n = num(rng);
        return Rational::normalize(n, den(rng));
    };
    for (int i = 0; i < 100; ++i) {
        const Rational a = random_q(), b = random_q(), a2 = random_q();
        int product = 1;
        for (const auto& v : bad_places(a, b)) product *= hilbert_symbol(a, b, v);
        CHECK(product == 1);
        for (const auto& v : bad_places(a * a2, b)) {
            CHECK(hilbert_symbol(a * a2, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v));
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
        }
    }
}

TEST_CASE("conics") {
    const Place two = Place::parse("2");
    CHECK(conic_constant(-1, 2, -3) == Rational(-2));
    CHECK_FALSE(conic_solvable_local(-1, 2, -3, two));
    CHECK_FALSE(conic_solvable_local(-1, 2, -3, Place::real()));
    CHECK(conic_solvable_local(-1, 2, -3, Place::parse("3")));
    CHECK_FALSE(conic_solvable_global(-1, 2, -3));
    for (auto v : {Place::real(), two, Place::parse("5")}) CHECK(conic_solvable_local(1, 0, 1, v));
    CHECK(conic_solvable_global(2, 0, -1));
    CHECK_FALSE(conic_solvable_local(3, 0, 2, Place::parse("3")));
    CHECK_FALSE(conic_solvable_global(3, 0, 2));
    CHECK_FALSE(homogeneous_search(3, 2, 100));
    CHECK(conic_solvable_global(1, 2, 1));  // perfect square
    CHECK_THROWS_AS(conic_solvable_global(0, 1, 1), DomainError);
}

TEST_CASE("global verdict agrees with bounded search") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> c(-8, 8);
    int solvable = 0, unsolvable = 0;
    for (int i = 0; i < 200; ++i) {
        long a = 0;
        while (a == 0) a = c(rng);
        const Rational ra(a), rb(c(rng)), rc(c(rng));
        const Rational d = conic_constant(ra, rb, rc);
        if (d.is_zero()) continue;
        const bool verdict = conic_solvable_global(ra, rb, rc);
        INFO("a=" << ra << " b=" << rb << " c=" << rc);
        CHECK(verdict == homogeneous_search(ra, d, 150));
        (verdict ? solvable : unsolvable)++;
    }
    CHECK(solvable > 20);
    CHECK(unsolvable > 20);
}
