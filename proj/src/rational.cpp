#include "hitbox/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

#include "hitbox/errors.hpp"

namespace hitbox {

Rational Rational::normalize(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_class v(num, den);
    v.canonicalize();
    return from_mpq(std::move(v));
}

Rational Rational::from_mpq(mpq_class value) {
    Rational r;
    r.value_ = std::move(value);
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](bool allow_sign) {
        skip();
        std::string digits;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
            if (text[i] == '-') digits.push_back('-');
            ++i;
            skip();
        }
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
        if (i == start) throw ParseError("expected digits in rational literal", i);
        return Integer(digits);
    };
    Integer num = read_int(true);
    Integer den = 1;
    skip();
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int(false);
        if (den == 0) throw ParseError("zero denominator in rational literal", i);
    }
    skip();
    if (i != text.size()) throw ParseError("trailing characters in rational literal", i);
    return normalize(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return from_mpq(1 / value_);
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return from_mpq(mpq_class(n, d));
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational::from_mpq(a.value_ / b.value_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Integer height(const Rational& q) {
    Integer n = ::abs(q.num());
    Integer d = q.den();
    return n > d ? n : d;
}

bool sweep_less(const Rational& a, const Rational& b) {
    const Integer ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    if (a.num() != b.num()) return a.num() < b.num();
    return a.den() < b.den();
}

std::vector<Rational> rationals_of_height(long h) {
    std::vector<Rational> out;
    if (h < 1) return out;
    if (h == 1) return {Rational(-1), Rational(0), Rational(1)};
    for (long a = -h; a <= h; ++a) {
        if (a == -h || a == h) {
            for (long b = 1; b < h; ++b)
                if (std::gcd(h, b) == 1) out.push_back(Rational::normalize(a, b));
        } else if (std::gcd(a < 0 ? -a : a, h) == 1) {
            out.push_back(Rational::normalize(a, h));
        }
    }
    std::sort(out.begin(), out.end(), sweep_less);
    return out;
}

std::vector<Rational> rationals_up_to_height(long bound) {
    std::vector<Rational> out;
    for (long h = 1; h <= bound; ++h) {
        auto layer = rationals_of_height(h);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

bool is_square(const Rational& q) {
    if (q.sign() < 0) return false;
    return mpz_perfect_square_p(q.mpq().get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.mpq().get_den_mpz_t()) != 0;
}

Rational sqrt_exact(const Rational& q) {
    if (!is_square(q)) throw DomainError("sqrt_exact of a non-square");
    Integer n = sqrt(q.num());
    Integer d = sqrt(q.den());
    return Rational::normalize(n, d);
}

Integer symmetric_mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
    // Extended Euclid stopped at the first remainder below sqrt(m/2).
    Integer bound = sqrt(Integer(m / 2));
    Integer r0 = m, r1, t0 = 0, t1 = 1;
    mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || ::abs(t1) > bound) return false;
    Integer g = gcd(r1, t1);
    if (g != 1) return false;
    out = Rational::normalize(r1, t1);
    return true;
}

}  // namespace hitbox

std::size_t std::hash<hitbox::Rational>::operator()(const hitbox::Rational& q) const noexcept {
    const std::size_t h1 = mpz_get_ui(q.mpq().get_num_mpz_t()) * 1000003u + static_cast<std::size_t>(mpz_sgn(q.mpq().get_num_mpz_t()) + 1);
    return h1 ^ (mpz_get_ui(q.mpq().get_den_mpz_t()) * 0x9e3779b97f4a7c15ull);
}
