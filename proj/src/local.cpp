#include "hitbox/local.hpp"

#include <algorithm>
#include <set>

#include "hitbox/errors.hpp"

namespace hitbox {

namespace {

struct UnitSplit {
    long valuation;
    Integer num;  ///< p-unit numerator
    Integer den;  ///< p-unit denominator
};

UnitSplit split(const Rational& q, std::uint64_t p) {
    UnitSplit s{0, q.num(), q.den()};
    const Integer pz(static_cast<unsigned long>(p));
    while (mpz_divisible_ui_p(s.num.get_mpz_t(), p)) {
        s.num /= pz;
        ++s.valuation;
    }
    while (mpz_divisible_ui_p(s.den.get_mpz_t(), p)) {
        s.den /= pz;
        --s.valuation;
    }
    return s;
}

/// Legendre symbol of the p-unit num/den.
int legendre(const UnitSplit& u, std::uint64_t p) {
    const Integer pz(static_cast<unsigned long>(p));
    return mpz_legendre(u.num.get_mpz_t(), pz.get_mpz_t()) * mpz_legendre(u.den.get_mpz_t(), pz.get_mpz_t());
}

/// Residue of the 2-adic unit num/den modulo 8.
unsigned mod8(const UnitSplit& u) {
    const unsigned n = static_cast<unsigned>(mpz_fdiv_ui(u.num.get_mpz_t(), 8));
    const unsigned d = static_cast<unsigned>(mpz_fdiv_ui(u.den.get_mpz_t(), 8));
    return (n * d) % 8;  // odd d is its own inverse mod 8
}

unsigned epsilon(unsigned u) { return ((u - 1) / 2) % 2; }
unsigned omega(unsigned u) { return ((u * u - 1) / 8) % 2; }

void add_primes(std::set<std::uint64_t>& out, const Integer& n) {
    if (n == 0) return;
    for (const auto& [q, e] : factor_integer(n)) {
        (void)e;
        if (!q.fits_ulong_p()) throw ResourceError("prime factor too large for a place");
        out.insert(q.get_ui());
    }
}

}  // namespace

Place Place::parse(const std::string& text) {
    if (text == "real" || text == "inf" || text == "infinity") return real();
    std::size_t pos = 0;
    unsigned long long p = 0;
    try {
        p = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected a prime or 'real'", 0);
    }
    if (pos != text.size()) throw ParseError("expected a prime or 'real'", pos);
    return finite(PrimeModulus(p));
}

std::uint64_t Place::prime() const {
    if (is_real()) throw DomainError("real place has no prime");
    return p_;
}

std::string Place::to_string() const { return is_real() ? "real" : std::to_string(p_); }

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw DomainError("Hilbert symbol of zero");
    if (v.is_real()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
    const std::uint64_t p = v.prime();
    const UnitSplit sa = split(a, p), sb = split(b, p);
    const long alpha = sa.valuation, beta = sb.valuation;
    if (p == 2) {
        const unsigned u = mod8(sa), w = mod8(sb);
        unsigned e = epsilon(u) * epsilon(w);
        if (alpha % 2 != 0) e += omega(w);
        if (beta % 2 != 0) e += omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta % 2 != 0) s *= legendre(sa, p);
    if (alpha % 2 != 0) s *= legendre(sb, p);
    return s;
}

std::vector<Place> bad_places(const Rational& a, const Rational& b) {
    std::set<std::uint64_t> primes{2};
    for (const auto& q : {a, b}) {
        add_primes(primes, q.num());
        add_primes(primes, q.den());
    }
    std::vector<Place> out{Place::real()};
    for (auto p : primes) out.push_back(Place::finite(PrimeModulus(p)));
    return out;
}

Rational conic_constant(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero()) throw DomainError("conic needs a nonzero quadratic coefficient");
    return c - b * b / (Rational(4) * a);
}

bool conic_solvable_local(const Rational& a, const Rational& b, const Rational& c, const Place& v) {
    const Rational d = conic_constant(a, b, c);
    if (d.is_zero()) return true;
    return hilbert_symbol(a, d, v) == 1;
}

bool conic_solvable_global(const Rational& a, const Rational& b, const Rational& c) {
    const Rational d = conic_constant(a, b, c);
    if (d.is_zero()) return true;
    const auto places = bad_places(a, d);
    return std::all_of(places.begin(), places.end(), [&](const Place& v) { return hilbert_symbol(a, d, v) == 1; });
}

}  // namespace hitbox
