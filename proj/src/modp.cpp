#include "hitbox/modp.hpp"

#include <algorithm>
#include <random>

namespace hitbox {

using u64 = std::uint64_t;

void PolyModP::check_size() const {
    if (p_ >= (1ull << 32)) throw DomainError("modulus too large for word-sized F_p arithmetic");
}

void PolyModP::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP::PolyModP(PrimeModulus p, std::vector<u64> coeffs) : p_(p.value()), c_(std::move(coeffs)) {
    check_size();
    for (auto& v : c_) v %= p_;
    trim();
}

PolyModP::PolyModP(PrimeModulus p, const ZPoly& f) : p_(p.value()) {
    check_size();
    for (const auto& a : f.coeffs()) {
        c_.push_back(mpz_fdiv_ui(a.get_mpz_t(), p_));
    }
    trim();
}

u64 PolyModP::inverse(u64 a) const {
    // Fermat; p prime.
    u64 result = 1, base = a % p_, e = p_ - 2;
    if (base == 0) throw DomainError("inverse of zero mod p");
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return result;
}

PolyModP PolyModP::monic() const {
    if (is_zero()) return *this;
    return scaled(inverse(leading()));
}

PolyModP PolyModP::derivative() const {
    PolyModP out(*this);
    out.c_.clear();
    for (std::size_t i = 1; i < c_.size(); ++i) out.c_.push_back(c_[i] * (i % p_) % p_);
    out.trim();
    return out;
}

PolyModP PolyModP::operator+(const PolyModP& o) const {
    PolyModP out(*this);
    out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) out.c_[i] = (out.c_[i] + o.c_[i]) % p_;
    out.trim();
    return out;
}

PolyModP PolyModP::operator-(const PolyModP& o) const {
    PolyModP out(*this);
    out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) out.c_[i] = (out.c_[i] + p_ - o.c_[i]) % p_;
    out.trim();
    return out;
}

PolyModP PolyModP::operator*(const PolyModP& o) const {
    PolyModP out(*this);
    out.c_.clear();
    if (is_zero() || o.is_zero()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] = (out.c_[i + j] + c_[i] * o.c_[j]) % p_;
    }
    out.trim();
    return out;
}

PolyModP PolyModP::scaled(u64 s) const {
    PolyModP out(*this);
    for (auto& v : out.c_) v = v * (s % p_) % p_;
    out.trim();
    return out;
}

std::pair<PolyModP, PolyModP> PolyModP::divmod(const PolyModP& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial mod p");
    PolyModP q(*this), r(*this);
    q.c_.clear();
    if (degree() < d.degree()) return {q, r};
    const int dd = d.degree();
    q.c_.assign(static_cast<std::size_t>(degree() - dd + 1), 0);
    const u64 inv = inverse(d.leading());
    for (int k = degree(); k >= dd; --k) {
        const u64 c = r.c_[static_cast<std::size_t>(k)] * inv % p_;
        q.c_[static_cast<std::size_t>(k - dd)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            u64& slot = r.c_[static_cast<std::size_t>(k - dd + j)];
            slot = (slot + p_ - c * d.c_[static_cast<std::size_t>(j)] % p_) % p_;
        }
    }
    r.c_.resize(static_cast<std::size_t>(dd));
    r.trim();
    q.trim();
    return {q, r};
}

PolyModP PolyModP::powmod(const Integer& e, const PolyModP& m) const {
    PolyModP result(PrimeModulus(p_), {1});
    result = result % m;
    PolyModP base = *this % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
    }
    return result;
}

u64 PolyModP::eval(u64 x) const {
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    return acc;
}

PolyModP gcd(PolyModP a, PolyModP b) {
    while (!b.is_zero()) {
        PolyModP r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const PolyModP& a, const PolyModP& b) {
    const PrimeModulus p(a.modulus());
    PolyModP r0 = a, r1 = b;
    PolyModP s0(p, {1}), s1(p), t0(p), t1(p, {1});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        PolyModP s2 = s0 - q * s1;
        PolyModP t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const u64 inv = r0.inverse(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

bool is_squarefree(const PolyModP& f) {
    if (f.degree() < 1) return true;
    const PolyModP d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

std::vector<std::pair<int, PolyModP>> distinct_degree_factorization(const PolyModP& f) {
    std::vector<std::pair<int, PolyModP>> out;
    PolyModP rest = f.monic();
    const PrimeModulus p(f.modulus());
    const PolyModP x = PolyModP::x(p);
    PolyModP h = x % rest;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = h.powmod(Integer(static_cast<unsigned long>(p.value())), rest);
        PolyModP g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest.degree(), rest);
    return out;
}

namespace {

void equal_degree_split(const PolyModP& g, int d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const PrimeModulus p(g.modulus());
    const u64 pv = p.value();
    for (;;) {
        std::vector<u64> coeffs(static_cast<std::size_t>(g.degree()));
        for (auto& c : coeffs) c = rng() % pv;
        PolyModP a(p, coeffs);
        if (a.degree() < 1) continue;
        PolyModP candidate(p);
        if (pv == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            PolyModP term = a % g;
            PolyModP trace = term;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                trace = trace + term;
            }
            candidate = gcd(g, trace);
        } else {
            Integer e;
            mpz_ui_pow_ui(e.get_mpz_t(), pv, static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            PolyModP b = a.powmod(e, g) - PolyModP(p, {1});
            candidate = gcd(g, b);
        }
        if (candidate.degree() > 0 && candidate.degree() < g.degree()) {
            equal_degree_split(candidate, d, rng, out);
            equal_degree_split(g / candidate, d, rng, out);
            return;
        }
    }
}

std::vector<PolyModP> factor_squarefree(const PolyModP& f, std::mt19937_64& rng) {
    std::vector<PolyModP> out;
    for (const auto& [d, g] : distinct_degree_factorization(f)) equal_degree_split(g, d, rng, out);
    return out;
}

/// f = h(X^p) = h^(1/p)(X)^p over F_p.
PolyModP pth_root(const PolyModP& f) {
    const u64 p = f.modulus();
    std::vector<u64> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
    return PolyModP(PrimeModulus(p), c);
}

void factor_monic(const PolyModP& f, std::mt19937_64& rng, std::vector<PolyModP>& out) {
    if (f.degree() < 1) return;
    const PolyModP d = f.derivative();
    if (d.is_zero()) {
        std::vector<PolyModP> root_factors;
        factor_monic(pth_root(f), rng, root_factors);
        for (const auto& q : root_factors)
            for (u64 k = 0; k < f.modulus(); ++k) out.push_back(q);
        return;
    }
    const PolyModP radical = f / gcd(f, d);
    PolyModP rest = f;
    for (const auto& q : factor_squarefree(radical.monic(), rng)) {
        for (;;) {
            auto [quo, rem] = rest.divmod(q);
            if (!rem.is_zero()) break;
            out.push_back(q);
            rest = quo;
        }
    }
    factor_monic(rest.monic(), rng, out);
}

}  // namespace

std::vector<PolyModP> factor_mod_p(const PolyModP& f) {
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial mod p");
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ f.modulus());
    std::vector<PolyModP> out;
    factor_monic(f.monic(), rng, out);
    std::sort(out.begin(), out.end(), [](const PolyModP& a, const PolyModP& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return out;
}

}  // namespace hitbox
