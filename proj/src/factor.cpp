#include "hitbox/factor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hitbox {

FactorizationType::FactorizationType(std::vector<int> degrees) : d_(std::move(degrees)) {
    std::sort(d_.begin(), d_.end());
}

int FactorizationType::total() const { return std::accumulate(d_.begin(), d_.end(), 0); }

FactorizationType FactorizationType::merged(const FactorizationType& other) const {
    std::vector<int> all = d_;
    all.insert(all.end(), other.d_.begin(), other.d_.end());
    return FactorizationType(std::move(all));
}

std::string FactorizationType::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < d_.size(); ++i) os << (i ? "," : "") << d_[i];
    os << '}';
    return os.str();
}

QPoly Factorization::expand() const {
    QPoly acc = QPoly::constant(unit);
    for (const auto& f : factors) acc = acc * f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return acc;
}

FactorizationType Factorization::type() const {
    std::vector<int> d;
    for (const auto& f : factors)
        for (int k = 0; k < f.multiplicity; ++k) d.push_back(f.poly.degree());
    return FactorizationType(std::move(d));
}

namespace {

ZPoly reduce(const ZPoly& f, const Integer& m) {
    std::vector<Integer> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
        c.push_back(std::move(r));
    }
    return ZPoly(std::move(c));
}

ZPoly symmetric(const ZPoly& f, const Integer& m) {
    std::vector<Integer> c;
    for (const auto& a : f.coeffs()) c.push_back(symmetric_mod(a, m));
    return ZPoly(std::move(c));
}

ZPoly from_modp(const PolyModP& f) {
    std::vector<Integer> c;
    for (auto v : f.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
    return ZPoly(std::move(c));
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw DomainError("non-invertible residue");
    return inv;
}

/// Division by a monic polynomial with coefficients reduced modulo m.
std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.degree() < b.degree()) return {ZPoly(), reduce(a, m)};
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        Integer c;
        mpz_fdiv_r(c.get_mpz_t(), r[static_cast<std::size_t>(k)].get_mpz_t(), m.get_mpz_t());
        q[static_cast<std::size_t>(k - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {reduce(ZPoly(std::move(q)), m), reduce(ZPoly(std::move(r)), m)};
}

ZPoly constant_z(long v) { return ZPoly::constant(Integer(v)); }

/// Quadratic Hensel lifting of f = g*h (mod p) to modulus `target`; h monic.
std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t, const Integer& p, const Integer& target) {
    Integer m = p;
    while (m < target) {
        Integer m2 = m * m;
        if (m2 > target) m2 = target;
        const ZPoly e = reduce(f - g * h, m2);
        auto [q, r] = divmod_monic(reduce(s * e, m2), h, m2);
        g = reduce(g + t * e + q * g, m2);
        h = reduce(h + r, m2);
        const ZPoly b = reduce(s * g + t * h - constant_z(1), m2);
        auto [c, d] = divmod_monic(reduce(s * b, m2), h, m2);
        s = reduce(s - d, m2);
        t = reduce(t - t * b - c * g, m2);
        m = m2;
    }
    return {reduce(g, target), reduce(h, target)};
}

std::vector<ZPoly> lift_rec(const ZPoly& f, const std::vector<PolyModP>& fs, const Integer& p, const Integer& target) {
    const Integer lc_inv = inverse_mod(f.leading(), target);
    if (fs.size() == 1) return {reduce(f.scaled(lc_inv), target)};
    const PrimeModulus pm(fs.front().modulus());
    const std::size_t half = fs.size() / 2;
    PolyModP a(pm, {1}), b(pm, {1});
    for (std::size_t i = 0; i < fs.size(); ++i) (i < half ? a : b) = (i < half ? a : b) * fs[i];
    const PolyModP g0 = a.scaled(mpz_fdiv_ui(f.leading().get_mpz_t(), pm.value()));
    const ExtendedGcd eg = extended_gcd(g0, b);
    if (eg.g.degree() != 0) throw DomainError("Hensel lifting needs coprime modular factors");
    auto [g, h] = hensel_two(f, from_modp(g0), from_modp(b), from_modp(eg.s), from_modp(eg.t), p, target);
    const ZPoly a_lifted = reduce(g.scaled(lc_inv), target);
    std::vector<PolyModP> left(fs.begin(), fs.begin() + static_cast<long>(half));
    std::vector<PolyModP> right(fs.begin() + static_cast<long>(half), fs.end());
    std::vector<ZPoly> out = lift_rec(a_lifted, left, p, target);
    std::vector<ZPoly> more = lift_rec(h, right, p, target);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

ZPoly primitive(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f.coeffs()) g = gcd(g, c);
    if (g == 0) return f;
    if (f.leading() < 0) g = -g;
    std::vector<Integer> c;
    for (const auto& v : f.coeffs()) c.push_back(v / g);
    return ZPoly(std::move(c));
}

/// Exact quotient a / b over Z, if it exists.
std::optional<ZPoly> divide_over_z(const ZPoly& a, const ZPoly& b) {
    if (b.degree() > a.degree()) return std::nullopt;
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    const Integer& lb = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Integer& top = r[static_cast<std::size_t>(k)];
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[static_cast<std::size_t>(k - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
    return ZPoly(std::move(q));
}

Integer coefficient_bound(const ZPoly& f) {
    Integer norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Integer b = sqrt(norm2) + 1;
    b <<= static_cast<unsigned long>(f.degree());
    return b * ::abs(f.leading());
}

struct ModularChoice {
    std::uint64_t p = 0;
    std::size_t count = 0;
};

std::size_t modular_factor_count(const PolyModP& fp) {
    std::size_t n = 0;
    for (const auto& [d, g] : distinct_degree_factorization(fp)) n += static_cast<std::size_t>(g.degree() / d);
    return n;
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto& x = a.coeffs()[static_cast<std::size_t>(i)];
        const auto& y = b.coeffs()[static_cast<std::size_t>(i)];
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<PolyModP>& factors, unsigned k) {
    if (factors.empty()) throw DomainError("nothing to lift");
    const Integer p(static_cast<unsigned long>(factors.front().modulus()));
    Integer target;
    mpz_pow_ui(target.get_mpz_t(), p.get_mpz_t(), k);
    return lift_rec(f, factors, p, target);
}

std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f_in) {
    ZPoly f = primitive(f_in);
    if (f.degree() <= 1) return {f};
    const int n = f.degree();

    // Good prime: f squarefree mod p, p not dividing lc; fewest modular factors among 25 tries.
    ModularChoice best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 25; p = next_prime(p)) {
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
        const PolyModP fp(PrimeModulus(p), f);
        if (!is_squarefree(fp)) continue;
        ++tried;
        const std::size_t count = modular_factor_count(fp);
        if (best.p == 0 || count < best.count) best = {p, count};
        if (count == 1) break;
    }
    if (best.count <= 1) return {f};

    const PrimeModulus p(best.p);
    const std::vector<PolyModP> modular = factor_mod_p(PolyModP(p, f));
    const Integer bound = coefficient_bound(f);
    unsigned k = 1;
    Integer pk(static_cast<unsigned long>(best.p));
    while (pk <= 2 * bound) {
        pk *= static_cast<unsigned long>(best.p);
        ++k;
    }
    std::vector<ZPoly> lifted = hensel_lift(f, modular, k);

    std::vector<ZPoly> found;
    ZPoly rest = f;
    std::vector<std::size_t> live(lifted.size());
    std::iota(live.begin(), live.end(), 0);
    std::size_t s = 1;
    while (2 * s <= live.size()) {
        bool split = false;
        std::vector<std::size_t> pick(s);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            ZPoly g = ZPoly::constant(rest.leading());
            for (auto idx : pick) g = reduce(g * lifted[live[idx]], pk);
            g = primitive(symmetric(g, pk));
            if (auto q = divide_over_z(rest, g)) {
                found.push_back(g);
                rest = *q;
                std::vector<std::size_t> next;
                for (std::size_t i = 0; i < live.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(live[i]);
                live = std::move(next);
                split = true;
                break;
            }
            // Next s-subset of {0..live.size()-1} in lexicographic order.
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == live.size() - s + static_cast<std::size_t>(i)) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!split) ++s;
    }
    found.push_back(primitive(rest));
    (void)n;
    return found;
}

Factorization factor_over_q(const QPoly& f) {
    if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
    Factorization out;
    out.unit = f.leading();
    const auto parts = squarefree_decomposition(f);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() < 1) continue;
        for (const auto& z : factor_squarefree_integer(primitive_integer_part(parts[i])))
            out.factors.push_back({monic(to_qpoly(z)), static_cast<int>(i + 1)});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
        return qpoly_less(a.poly, b.poly);
    });
    return out;
}

FactorizationType factorization_type(const QPoly& f) {
    if (f.degree() < 1) throw DomainError("factorization type needs degree >= 1");
    return factor_over_q(f).type();
}

bool is_irreducible_over_q(const QPoly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (squarefree_part(f).degree() != f.degree()) return false;
    return factor_squarefree_integer(primitive_integer_part(f)).size() == 1;
}

std::vector<Rational> rational_roots(const QPoly& f) {
    if (f.is_zero()) throw DomainError("rational roots of the zero polynomial");
    const ZPoly g = primitive_integer_part(squarefree_part(f));
    const int n = g.degree();
    std::vector<Rational> roots;
    if (n < 1) return roots;
    if (n == 1) {
        roots.push_back(Rational::normalize(-g.coeffs()[0], g.coeffs()[1]));
    } else if (n == 2) {
        const Integer& a = g.coeffs()[2];
        const Integer& b = g.coeffs()[1];
        const Integer& c = g.coeffs()[0];
        const Integer disc = b * b - 4 * a * c;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            const Integer s = sqrt(disc);
            roots.push_back(Rational::normalize(-b - s, 2 * a));
            if (s != 0) roots.push_back(Rational::normalize(-b + s, 2 * a));
        }
    } else {
        // h(Y) = a^(n-1) g(Y/a) is monic with integer coefficients; rational
        // roots of g are the integer roots of h divided by a.
        const Integer a = g.leading();
        std::vector<Integer> hc(static_cast<std::size_t>(n + 1));
        Integer apow = 1;
        for (int i = n - 1; i >= 0; --i) {
            hc[static_cast<std::size_t>(i)] = g.coeffs()[static_cast<std::size_t>(i)] * apow;
            apow *= a;
        }
        hc[static_cast<std::size_t>(n)] = 1;
        const ZPoly h(hc);
        Integer cauchy = 0;
        for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, Integer(::abs(hc[static_cast<std::size_t>(i)])));
        cauchy += 1;

        std::uint64_t p = 3;
        for (;; p = next_prime(p)) {
            if (is_squarefree(PolyModP(PrimeModulus(p), h))) break;
        }
        const PrimeModulus pm(p);
        const PolyModP hp(pm, h);
        const PolyModP x = PolyModP::x(pm);
        const PolyModP linear_part = gcd(hp, x.powmod(Integer(static_cast<unsigned long>(p)), hp) - x);
        if (linear_part.degree() > 0) {
            Integer target = 2 * cauchy + 1;
            const ZPoly dh = h.derivative();
            for (const auto& lin : factor_mod_p(linear_part)) {
                // lin = X - r0.
                Integer r = static_cast<unsigned long>((p - lin.coeffs()[0]) % p);
                Integer m = static_cast<unsigned long>(p);
                while (m <= target) {
                    m = m * m;
                    Integer val = h.eval(r), der = dh.eval(r);
                    Integer inv;
                    mpz_fdiv_r(der.get_mpz_t(), der.get_mpz_t(), m.get_mpz_t());
                    mpz_invert(inv.get_mpz_t(), der.get_mpz_t(), m.get_mpz_t());
                    r = r - val * inv;
                    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
                }
                const Integer cand = symmetric_mod(r, m);
                if (h.eval(cand) == 0) roots.push_back(Rational::normalize(cand, a));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& r : roots)
        if (!f.eval(r).is_zero()) throw DomainError("internal: rational root failed verification");
    return roots;
}

std::optional<FactorizationType> cycle_type_mod_p(const QPoly& f, PrimeModulus p) {
    if (f.degree() < 1) throw DomainError("cycle type of a constant polynomial");
    const ZPoly g = primitive_integer_part(f);
    if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p.value())) return std::nullopt;
    const PolyModP fp(p, g);
    if (!is_squarefree(fp)) return std::nullopt;
    std::vector<int> degrees;
    for (const auto& [d, prod] : distinct_degree_factorization(fp))
        for (int k = 0; k < prod.degree() / d; ++k) degrees.push_back(d);
    return FactorizationType(std::move(degrees));
}

}  // namespace hitbox
