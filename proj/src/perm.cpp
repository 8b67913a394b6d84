#include "hitbox/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "hitbox/errors.hpp"

namespace hitbox {

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(int degree) {
    if (degree < 1 || degree > kMaxDegree) throw DomainError("permutation degree out of range");
    Permutation p;
    p.img_.resize(static_cast<std::size_t>(degree));
    std::iota(p.img_.begin(), p.img_.end(), std::uint8_t{0});
    return p;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    if (n < 1 || n > kMaxDegree) throw DomainError("permutation degree out of range");
    std::vector<bool> seen(images.size(), false);
    Permutation p;
    p.img_.reserve(images.size());
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw DomainError("images do not form a bijection");
        seen[static_cast<std::size_t>(v - 1)] = true;
        p.img_.push_back(static_cast<std::uint8_t>(v - 1));
    }
    return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
    Permutation p = identity(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty permutation", i);
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i < text.size() && text[i] == ',' && !cycle.empty()) {
                ++i;
                skip_ws();
            }
            const std::size_t start = i;
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000) throw ParseError("point out of range", start);
                ++i;
            }
            if (i == start) throw ParseError("expected point", i);
            if (v < 1 || v > degree) throw ParseError("point out of range", start);
            if (used[static_cast<std::size_t>(v - 1)]) throw ParseError("repeated point", start);
            used[static_cast<std::size_t>(v - 1)] = true;
            cycle.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            p.img_[static_cast<std::size_t>(cycle[k])] =
                static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
        skip_ws();
    }
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DomainError("degree mismatch in product");
    Permutation r;
    r.img_.resize(a.img_.size());
    for (std::size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = b.img_[a.img_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Permutation Permutation::pow(int k) const {
    Permutation base = k < 0 ? inverse() : *this;
    long e = k < 0 ? -static_cast<long>(k) : k;
    Permutation r = identity(degree());
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

int Permutation::order() const {
    int r = 1;
    const Partition t = cycle_type();
    for (int len : t.degrees()) r = std::lcm(r, len);
    return r;
}

bool Permutation::is_even() const {
    const Partition t = cycle_type();
    int transpositions = 0;
    for (int len : t.degrees()) transpositions += len - 1;
    return transpositions % 2 == 0;
}

std::uint64_t Permutation::code() const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) c |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
    return c;
}

Permutation Permutation::from_code(std::uint64_t code, int degree) {
    Permutation p;
    p.img_.resize(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) p.img_[static_cast<std::size_t>(i)] = (code >> (4 * i)) & 0xF;
    return p;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        out += '(';
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            if (j != i) out += ',';
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------- PermGroup

PermGroup PermGroup::closure(int degree, const std::vector<Permutation>& generators, std::size_t bound) {
    PermGroup g;
    g.degree_ = degree;
    const Permutation id = Permutation::identity(degree);
    for (const auto& s : generators) {
        if (s.degree() != degree) throw DomainError("generator degree mismatch");
        if (!s.is_identity()) g.gens_.push_back(s);
    }
    std::unordered_set<std::uint64_t> seen{id.code()};
    std::vector<Permutation> elems{id};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& s : g.gens_) {
            Permutation q = elems[head] * s;
            if (seen.insert(q.code()).second) {
                if (seen.size() > bound) throw ResourceError("group order exceeds bound " + std::to_string(bound));
                elems.push_back(std::move(q));
            }
        }
    }
    std::sort(elems.begin(), elems.end(),
              [](const Permutation& a, const Permutation& b) { return a.code() < b.code(); });
    g.codes_.reserve(elems.size());
    for (const auto& e : elems) g.codes_.push_back(e.code());
    g.elements_ = std::move(elems);
    return g;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return std::binary_search(codes_.begin(), codes_.end(), p.code());
}

bool PermGroup::is_transitive() const {
    std::vector<bool> reached(static_cast<std::size_t>(degree_), false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const auto& s : gens_) {
            const int y = s(x);
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    if (other.degree_ != degree_) return false;
    return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& s) { return other.contains(s); });
}

bool PermGroup::all_even() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Permutation& s) { return s.is_even(); });
}

PermGroup derived_subgroup(const PermGroup& g) {
    const auto& gens = g.generators();
    std::vector<Permutation> dgens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            dgens.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    PermGroup d = PermGroup::closure(g.degree(), dgens);
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& s : gens) {
            for (const auto& k : d.generators()) {
                Permutation c = s.inverse() * k * s;
                if (!d.contains(c)) {
                    dgens.push_back(std::move(c));
                    grew = true;
                    break;
                }
            }
            if (grew) break;
        }
        if (grew) d = PermGroup::closure(g.degree(), dgens);
    }
    return d;
}

bool PermGroup::is_solvable() const {
    PermGroup cur = *this;
    while (cur.order() > 1) {
        PermGroup d = derived_subgroup(cur);
        if (d.order() == cur.order()) return false;
        cur = std::move(d);
    }
    return true;
}

bool is_conjugate_contained_in(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
    if (k.order() % h.order() != 0) return false;
    for (const auto& c : g.elements()) {
        const Permutation ci = c.inverse();
        bool ok = true;
        for (const auto& s : h.generators()) {
            if (!k.contains(ci * s * c)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool are_conjugate_in(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
    return h.order() == k.order() && is_conjugate_contained_in(g, h, k);
}

std::set<Partition> cycle_type_set(const PermGroup& g) {
    std::set<Partition> out;
    for (const auto& e : g.elements()) out.insert(e.cycle_type());
    return out;
}

PermGroup symmetric_group(int n) {
    if (n == 1) return PermGroup::closure(1, {});
    std::vector<int> cyc(static_cast<std::size_t>(n)), tr(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cyc[static_cast<std::size_t>(i)] = (i + 1) % n + 1;
        tr[static_cast<std::size_t>(i)] = i + 1;
    }
    std::swap(tr[0], tr[1]);
    return PermGroup::closure(n, {Permutation::from_images(cyc), Permutation::from_images(tr)});
}

// ---------------------------------------------------------------- subgroup lattice

namespace {

/// Subgroups of a fixed parent, elements addressed by index into the parent.
class Lattice {
  public:
    explicit Lattice(const PermGroup& g) : g_(g), n_(g.order()), words_((n_ + 63) / 64) {
        const auto& el = g.elements();
        index_.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) index_.emplace(el[i].code(), static_cast<std::uint32_t>(i));
        inv_.resize(n_);
        type_id_.resize(n_);
        std::map<Partition, std::uint32_t> types;
        for (std::size_t i = 0; i < n_; ++i) {
            inv_[i] = idx(el[i].inverse());
            auto [it, fresh] = types.emplace(el[i].cycle_type(), static_cast<std::uint32_t>(types.size()));
            type_id_[i] = it->second;
        }
        ntypes_ = types.size();
        identity_ = idx(Permutation::identity(g.degree()));
        if (n_ <= 2048) {
            table_.resize(n_ * n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = idx(el[i] * el[j]);
        }
    }

    struct Sub {
        std::vector<std::uint64_t> bits;
        std::size_t order = 0;
        std::vector<std::uint32_t> gens;
        std::vector<std::uint32_t> signature;
    };

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!table_.empty()) return table_[a * n_ + b];
        const auto& el = g_.elements();
        return idx(el[a] * el[b]);
    }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t conj(std::uint32_t c, std::uint32_t x) const { return mul(mul(inv_[c], x), c); }

    static bool has(const Sub& s, std::uint32_t i) { return (s.bits[i >> 6] >> (i & 63)) & 1u; }

    Sub make(std::vector<std::uint32_t> gens) const {
        Sub s;
        s.bits.assign(words_, 0);
        std::vector<std::uint32_t> list{identity_};
        set(s.bits, identity_);
        for (std::size_t head = 0; head < list.size(); ++head) {
            for (auto t : gens) {
                const auto q = mul(list[head], t);
                if (!test(s.bits, q)) {
                    set(s.bits, q);
                    list.push_back(q);
                }
            }
        }
        s.order = list.size();
        s.gens = std::move(gens);
        finish(s, list);
        return s;
    }

    /// <H, g> for g normalizing H with g^p in H.
    Sub extend(const Sub& h, std::uint32_t g, int p) const {
        Sub s;
        s.bits = h.bits;
        std::vector<std::uint32_t> hl = members(h), list = hl;
        std::uint32_t gi = identity_;
        for (int i = 1; i < p; ++i) {
            gi = mul(gi, g);
            for (auto x : hl) {
                const auto q = mul(gi, x);
                set(s.bits, q);
                list.push_back(q);
            }
        }
        s.order = list.size();
        s.gens = h.gens;
        s.gens.push_back(g);
        finish(s, list);
        return s;
    }

    std::vector<std::uint32_t> members(const Sub& s) const {
        std::vector<std::uint32_t> out;
        out.reserve(s.order);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = s.bits[w];
            while (bits) {
                out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool normalizes(std::uint32_t g, const Sub& h) const {
        return std::all_of(h.gens.begin(), h.gens.end(), [&](std::uint32_t x) { return has(h, conj(g, x)); });
    }

    /// Some conjugate of a lies inside b.
    bool conj_contained(const Sub& a, const Sub& b) const {
        if (b.order % a.order != 0) return false;
        for (std::uint32_t c = 0; c < n_; ++c) {
            bool ok = true;
            for (auto x : a.gens)
                if (!has(b, conj(c, x))) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
        return false;
    }

    bool conjugate(const Sub& a, const Sub& b) const {
        return a.order == b.order && a.signature == b.signature && conj_contained(a, b);
    }

    bool perfect(const Sub& k) const {
        std::vector<std::uint32_t> dg;
        for (std::size_t i = 0; i < k.gens.size(); ++i)
            for (std::size_t j = i + 1; j < k.gens.size(); ++j) {
                const auto a = k.gens[i], b = k.gens[j];
                dg.push_back(mul(mul(inv_[a], inv_[b]), mul(a, b)));
            }
        Sub d = make(dg);
        for (bool grew = true; grew && d.order < k.order;) {
            grew = false;
            for (auto s : k.gens) {
                for (auto x : d.gens) {
                    const auto c = conj(s, x);
                    if (!has(d, c)) {
                        dg.push_back(c);
                        grew = true;
                        break;
                    }
                }
                if (grew) break;
            }
            if (grew) d = make(dg);
        }
        return d.order == k.order;
    }

    std::uint32_t identity() const { return identity_; }
    std::size_t size() const { return n_; }

    PermGroup to_group(const Sub& s) const {
        std::vector<Permutation> gens;
        for (auto x : s.gens) gens.push_back(g_.elements()[x]);
        return PermGroup::closure(g_.degree(), gens);
    }

  private:
    std::uint32_t idx(const Permutation& p) const { return index_.at(p.code()); }
    static void set(std::vector<std::uint64_t>& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
    static bool test(const std::vector<std::uint64_t>& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }

    void finish(Sub& s, const std::vector<std::uint32_t>& list) const {
        s.signature.assign(ntypes_, 0);
        for (auto x : list) ++s.signature[type_id_[x]];
    }

    const PermGroup& g_;
    std::size_t n_;
    std::size_t words_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> inv_, type_id_, table_;
    std::size_t ntypes_ = 0;
    std::uint32_t identity_ = 0;
};

bool is_small_prime(std::size_t k) {
    if (k < 2) return false;
    for (std::size_t d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, std::size_t bound) {
    if (g.order() > bound) throw ResourceError("group order exceeds bound " + std::to_string(bound));
    Lattice lat(g);
    const std::size_t n = lat.size();
    std::vector<Lattice::Sub> classes;
    std::deque<std::size_t> queue;

    auto add = [&](Lattice::Sub s) {
        for (const auto& c : classes)
            if (lat.conjugate(s, c)) return;
        classes.push_back(std::move(s));
        queue.push_back(classes.size() - 1);
    };

    add(lat.make({}));

    if (!g.is_solvable()) {
        std::vector<std::uint32_t> involution_reps;
        std::vector<bool> assigned(n, false);
        for (std::uint32_t x = 0; x < n; ++x) {
            if (assigned[x] || x == lat.identity() || lat.mul(x, x) != lat.identity()) continue;
            involution_reps.push_back(x);
            for (std::uint32_t c = 0; c < n; ++c) assigned[lat.conj(c, x)] = true;
        }
        std::unordered_set<std::string> tried;
        for (auto x : involution_reps) {
            for (std::uint32_t y = 0; y < n; ++y) {
                Lattice::Sub k = lat.make({x, y});
                if (k.order < 60) continue;
                std::string key(reinterpret_cast<const char*>(k.bits.data()), k.bits.size() * sizeof(std::uint64_t));
                if (!tried.insert(std::move(key)).second) continue;
                if (lat.perfect(k)) add(std::move(k));
            }
        }
    }

    while (!queue.empty()) {
        const Lattice::Sub h = classes[queue.front()];
        queue.pop_front();
        std::vector<bool> covered(n, false);
        for (std::uint32_t gi = 0; gi < n; ++gi) {
            if (covered[gi] || Lattice::has(h, gi) || !lat.normalizes(gi, h)) continue;
            std::size_t k = 1;
            for (std::uint32_t x = gi; !Lattice::has(h, x); x = lat.mul(x, gi)) ++k;
            for (std::size_t i = 1; i < k; ++i) {
                std::uint32_t gp = gi;
                for (std::size_t j = 1; j < i; ++j) gp = lat.mul(gp, gi);
                if (std::gcd(i, k) == 1)
                    for (auto y : lat.members(h)) covered[lat.mul(gp, y)] = true;
            }
            if (is_small_prime(k)) add(lat.extend(h, gi, static_cast<int>(k)));
        }
    }

    std::stable_sort(classes.begin(), classes.end(), [](const Lattice::Sub& a, const Lattice::Sub& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.signature < b.signature;
    });

    std::vector<SubgroupClass> out;
    out.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& h = classes[i];
        bool maximal = h.order < n;
        for (std::size_t j = 0; maximal && j < classes.size(); ++j) {
            const auto& k = classes[j];
            if (k.order > h.order && k.order < n && lat.conj_contained(h, k)) maximal = false;
        }
        out.push_back({lat.to_group(h), n / h.order, maximal});
    }
    return out;
}

std::vector<SubgroupClass> maximal_classes(const PermGroup& g, std::size_t bound) {
    if (g.order() < 2) throw DomainError("trivial group has no maximal subgroups");
    std::vector<SubgroupClass> out;
    for (auto& c : subgroup_classes(g, bound))
        if (c.is_maximal) out.push_back(std::move(c));
    return out;
}

}  // namespace hitbox
