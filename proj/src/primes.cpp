#include "hitbox/primes.hpp"

#include <algorithm>
#include <random>

#include "hitbox/errors.hpp"

namespace hitbox {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

Integer pollard_rho(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::mt19937_64 rng(0x5eed);
    for (;;) {
        Integer c = static_cast<unsigned long>(rng() % 1000 + 1);
        Integer x = 2, y = 2, d = 1;
        auto step = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Integer diff = ::abs(Integer(x - y));
            d = gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void split(const Integer& n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    Integer d = pollard_rho(n);
    split(d, primes);
    split(Integer(n / d), primes);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime_u64(c)) ++c;
    return c;
}

long padic_valuation(const Integer& n, std::uint64_t p) {
    if (n == 0) throw DomainError("valuation of zero integer");
    Integer m = ::abs(n);
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

Valuation padic_valuation(const Rational& q, PrimeModulus p) {
    if (q.is_zero()) return Valuation::infinity();
    return Valuation::finite(padic_valuation(q.num(), p.value()) - padic_valuation(q.den(), p.value()));
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
    if (n == 0) throw DomainError("factorization of zero");
    Integer m = ::abs(n);
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    split(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace hitbox
