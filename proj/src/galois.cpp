#include "hitbox/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hitbox/errors.hpp"
#include "hitbox/primes.hpp"

namespace hitbox {

namespace {

struct RawEntry {
    int degree;
    const char* label;
    const char* name;
    std::size_t order;
    std::vector<const char*> gens;
};

// Standard transitive-group numbering, degrees 2 to 6.
const std::vector<RawEntry>& raw_entries() {
    static const std::vector<RawEntry> raw{
        {2, "2T1", "C2", 2, {"(1,2)"}},
        {3, "3T1", "A3", 3, {"(1,2,3)"}},
        {3, "3T2", "S3", 6, {"(1,2,3)", "(1,2)"}},
        {4, "4T1", "C4", 4, {"(1,2,3,4)"}},
        {4, "4T2", "C2xC2", 4, {"(1,2)(3,4)", "(1,3)(2,4)"}},
        {4, "4T3", "D4", 8, {"(1,2,3,4)", "(1,3)"}},
        {4, "4T4", "A4", 12, {"(1,2,3)", "(1,2)(3,4)"}},
        {4, "4T5", "S4", 24, {"(1,2,3,4)", "(1,2)"}},
        {5, "5T1", "C5", 5, {"(1,2,3,4,5)"}},
        {5, "5T2", "D5", 10, {"(1,2,3,4,5)", "(2,5)(3,4)"}},
        {5, "5T3", "F20", 20, {"(1,2,3,4,5)", "(2,3,5,4)"}},
        {5, "5T4", "A5", 60, {"(1,2,3,4,5)", "(1,2,3)"}},
        {5, "5T5", "S5", 120, {"(1,2,3,4,5)", "(1,2)"}},
        {6, "6T1", "C6", 6, {"(1,2,3,4,5,6)"}},
        {6, "6T2", "S3", 6, {"(1,3,5)(2,4,6)", "(1,4)(2,3)(5,6)"}},
        {6, "6T3", "D6", 12, {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"}},
        {6, "6T4", "A4", 12, {"(1,6)(2,5)", "(1,6)(3,4)", "(1,5,3)(2,4,6)"}},
        {6, "6T5", "C3xS3", 18, {"(1,3,6)(2,4,5)", "(1,3,6)(2,5,4)", "(1,5)(2,6)(3,4)"}},
        {6, "6T6", "C2xA4", 24, {"(1,6)(2,5)(3,4)", "(1,6)(2,5)", "(1,6)(3,4)", "(1,5,3,6,2,4)"}},
        {6, "6T7", "S4+", 24, {"(1,6)(2,5)", "(1,6)(3,4)", "(1,5,3)(2,4,6)", "(1,6)(2,4,5,3)"}},
        {6, "6T8", "S4-", 24, {"(1,6)(2,5)", "(1,6)(3,4)", "(1,5,3)(2,4,6)", "(1,6)(2,4)(3,5)"}},
        {6, "6T9", "S3xS3", 36, {"(1,3,6)(2,4,5)", "(1,3,6)(2,5,4)", "(1,6)(2,5)", "(1,5)(2,6)(3,4)"}},
        {6, "6T10", "3^2:4", 36, {"(1,3,6)(2,4,5)", "(1,3,6)(2,5,4)", "(1,6)(2,5)", "(1,4,3,5)(2,6)"}},
        {6, "6T11", "C2xS4", 48, {"(1,6)(2,5)(3,4)", "(1,6)(2,5)", "(1,5,3,6,2,4)", "(1,6)(2,4)(3,5)"}},
        {6, "6T12", "PSL(2,5)", 60, {"(1,6)(2,5)", "(1,2,6)(3,4,5)"}},
        {6, "6T13", "3^2:D4", 72, {"(1,3,6)(2,4,5)", "(1,3,6)(2,5,4)", "(1,6)(2,5)", "(1,3,6)(2,5)", "(1,5)(2,6)(3,4)"}},
        {6, "6T14", "PGL(2,5)", 120, {"(1,6)(2,5)", "(1,2,6)(3,4,5)", "(1,4,3,5,2,6)"}},
        {6, "6T15", "A6", 360, {"(1,6)(2,5)", "(1,4,2,6)(3,5)"}},
        {6, "6T16", "S6", 720, {"(1,2,3,4,5,6)", "(1,2)"}},
    };
    return raw;
}

std::vector<std::vector<TransitiveGroupEntry>> build_tables() {
    std::vector<std::vector<TransitiveGroupEntry>> tables(7);
    for (const auto& r : raw_entries()) {
        std::vector<Permutation> gens;
        for (const char* s : r.gens) gens.push_back(Permutation::parse(s, r.degree));
        PermGroup g = PermGroup::closure(r.degree, gens);
        if (g.order() != r.order || !g.is_transitive())
            throw std::logic_error(std::string("transitive table entry ") + r.label + " fails validation");
        std::map<Partition, std::size_t> counts;
        for (const auto& e : g.elements()) ++counts[e.cycle_type()];
        TransitiveGroupEntry e{r.degree, r.label, r.name, gens, g.order(), {}, g.all_even(), g, {}};
        for (const auto& [t, c] : counts) {
            e.cycle_types.insert(t);
            e.type_density.emplace_back(t, static_cast<double>(c) / static_cast<double>(g.order()));
        }
        tables[static_cast<std::size_t>(r.degree)].push_back(std::move(e));
    }
    return tables;
}

const std::vector<std::vector<TransitiveGroupEntry>>& tables() {
    static const auto t = build_tables();
    return t;
}

GaloisId transitive_result(const std::string& label, const QPoly& f, bool disc_square) {
    const auto* e = find_transitive(label);
    GaloisId id;
    id.mode = GaloisMode::definitive;
    id.degree = f.degree();
    id.transitive = true;
    id.factor_type = FactorizationType({f.degree()});
    id.label = label;
    id.order = e->order;
    id.evidence.disc_square = disc_square;
    return id;
}

/// Kappe-Warren: both quadratics split over Q(sqrt(disc)).
bool splits_over(const Rational& quad_disc, const Rational& delta) {
    return is_square(quad_disc) || is_square(quad_disc * delta);
}

std::string abstract_name(std::size_t order, bool cyclic) {
    switch (order) {
        case 1: return "1";
        case 2: return "C2";
        case 3: return "C3";
        case 4: return cyclic ? "C4" : "C2xC2";
        case 6: return "S3";
        default: return "order " + std::to_string(order);
    }
}

}  // namespace

const std::vector<TransitiveGroupEntry>& transitive_table(int n) {
    if (n < 2 || n > 6) throw DomainError("transitive tables cover degrees 2 to 6");
    return tables()[static_cast<std::size_t>(n)];
}

const TransitiveGroupEntry* find_transitive(const std::string& label) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& e : transitive_table(n))
            if (e.label == label) return &e;
    return nullptr;
}

const TransitiveGroupEntry& identify_transitive(const PermGroup& g) {
    if (!g.is_transitive()) throw DomainError("group is not transitive");
    const auto& table = transitive_table(g.degree());
    const auto types = cycle_type_set(g);
    std::vector<const TransitiveGroupEntry*> same;
    for (const auto& e : table)
        if (e.order == g.order() && e.cycle_types == types) same.push_back(&e);
    if (same.size() == 1) return *same.front();
    static std::once_flag flag;
    static PermGroup s6;
    std::call_once(flag, [] { s6 = symmetric_group(6); });
    const PermGroup sn = g.degree() == 6 ? s6 : symmetric_group(g.degree());
    for (const auto* e : same)
        if (are_conjugate_in(sn, g, e->group)) return *e;
    throw std::logic_error("transitive group missing from table");
}

std::set<std::string> transitive_subgroup_labels(const PermGroup& ambient) {
    const PermGroup sn = symmetric_group(ambient.degree());
    std::set<std::string> out;
    for (const auto& e : transitive_table(ambient.degree()))
        if (is_conjugate_contained_in(sn, e.group, ambient)) out.insert(e.label);
    return out;
}

QPoly resolvent_cubic(const QPoly& f) {
    if (f.degree() != 4) throw DomainError("resolvent cubic needs a quartic");
    const QPoly m = monic(f);
    const Rational a = m.coeff(3), b = m.coeff(2), c = m.coeff(1), d = m.coeff(0);
    const Rational four(4);
    return QPoly({-(a * a * d - four * b * d + c * c), a * c - four * d, -b, Rational(1)});
}

GaloisId classify_degree_le4(const QPoly& f) {
    if (f.degree() < 2 || f.degree() > 4) throw DomainError("exact classification covers degrees 2 to 4");
    const QPoly g = monic(squarefree_part(f));
    const Factorization fac = factor_over_q(g);
    const bool sqfree = g.degree() == f.degree();
    const bool disc_square = g.degree() >= 2 && is_square(discriminant(g));

    if (sqfree && fac.factors.size() == 1) {
        switch (g.degree()) {
            case 2: return transitive_result("2T1", f, disc_square);
            case 3: return transitive_result(disc_square ? "3T1" : "3T2", f, disc_square);
            default: break;
        }
        const QPoly r = resolvent_cubic(g);
        const auto roots = rational_roots(r);
        if (roots.empty()) return transitive_result(disc_square ? "4T4" : "4T5", f, disc_square);
        if (roots.size() == 3) return transitive_result("4T2", f, disc_square);
        const Rational& t = roots.front();
        const Rational delta = discriminant(g);
        const Rational a = g.coeff(3), b = g.coeff(2), d = g.coeff(0);
        const bool c4 = splits_over(t * t - Rational(4) * d, delta) &&
                        splits_over(a * a - Rational(4) * (b - t), delta);
        return transitive_result(c4 ? "4T1" : "4T3", f, disc_square);
    }

    GaloisId id;
    id.mode = GaloisMode::definitive;
    id.degree = f.degree();
    id.transitive = false;
    id.factor_type = factorization_type(f);
    id.evidence.disc_square = disc_square;
    std::vector<QPoly> nonlinear;
    for (const auto& fc : fac.factors)
        if (fc.poly.degree() >= 2) nonlinear.push_back(fc.poly);
    std::size_t order = 1;
    if (nonlinear.size() == 1) {
        const QPoly& h = nonlinear.front();
        if (h.degree() == 2) order = 2;
        else order = is_square(discriminant(h)) ? 3 : 6;
    } else if (nonlinear.size() == 2) {
        order = is_square(discriminant(nonlinear[0]) * discriminant(nonlinear[1])) ? 2 : 4;
    }
    id.order = order;
    id.label = abstract_name(order, false);
    return id;
}

GaloisId sieve_degree_5_6(const QPoly& f, const SieveOptions& options) {
    if (options.budget == 0) throw DomainError("sieve budget must be positive");
    if (f.degree() < 5 || f.degree() > 6) throw DomainError("sieve covers degrees 5 and 6");
    GaloisId id;
    id.degree = f.degree();
    id.factor_type = factorization_type(f);
    if (id.factor_type.size() != 1) {
        id.mode = GaloisMode::factor_types;
        id.transitive = false;
        return id;
    }
    id.mode = GaloisMode::sieved;
    id.transitive = true;
    id.evidence.disc_square = is_square(discriminant(f));

    std::vector<const TransitiveGroupEntry*> alive;
    for (const auto& e : transitive_table(f.degree()))
        if (e.in_alternating == id.evidence.disc_square && (!options.within || options.within->count(e.label)))
            alive.push_back(&e);

    std::uint64_t p = 2;
    while (id.evidence.primes.size() < options.budget) {
        p = next_prime(p);
        const auto type = cycle_type_mod_p(f, PrimeModulus(p));
        if (!type) continue;
        id.evidence.primes.push_back(p);
        id.evidence.observed.insert(*type);
        const double k = static_cast<double>(id.evidence.primes.size());
        std::erase_if(alive, [&](const TransitiveGroupEntry* e) {
            if (!e->cycle_types.count(*type)) return true;
            for (const auto& [t, density] : e->type_density)
                if (!id.evidence.observed.count(t) && k * density >= options.unseen_threshold) return true;
            return false;
        });
    }

    for (const auto* e : alive) id.candidates.push_back(e->label);
    if (alive.size() == 1) {
        id.mode = GaloisMode::definitive;
        id.label = alive.front()->label;
        id.order = alive.front()->order;
    } else if (!alive.empty() &&
               std::all_of(alive.begin(), alive.end(), [&](const auto* e) { return e->order == alive.front()->order; })) {
        id.order = alive.front()->order;
    }
    return id;
}

GaloisId identify_galois(const QPoly& f, const SieveOptions& options) {
    if (f.degree() < 1) throw DomainError("Galois group of a constant");
    if (f.degree() == 1) {
        GaloisId id;
        id.degree = 1;
        id.transitive = true;
        id.factor_type = FactorizationType({1});
        id.label = "1";
        id.order = 1;
        return id;
    }
    if (f.degree() <= 4) return classify_degree_le4(f);
    if (f.degree() <= 6) return sieve_degree_5_6(f, options);
    throw DomainError("Galois identification covers degrees up to 6");
}

std::string GaloisId::to_string() const {
    std::ostringstream os;
    switch (mode) {
        case GaloisMode::definitive:
            os << label << " (order " << order.value_or(0) << ")";
            break;
        case GaloisMode::sieved: {
            os << "sieved {";
            for (std::size_t i = 0; i < candidates.size(); ++i) os << (i ? "," : "") << candidates[i];
            os << "}";
            if (order) os << " order " << *order;
            break;
        }
        case GaloisMode::factor_types:
            os << "reducible " << factor_type.to_string();
            break;
    }
    return os.str();
}

std::string to_string(Match m) {
    switch (m) {
        case Match::yes: return "yes";
        case Match::no: return "no";
        default: return "indeterminate";
    }
}

Match groups_match(const GaloisId& id, const PermGroup& reference) {
    if (!id.transitive || id.mode == GaloisMode::factor_types) return reference.is_transitive() ? Match::no : Match::indeterminate;
    if (id.order) return *id.order == reference.order() ? Match::yes : Match::no;
    if (id.candidates.empty()) return Match::indeterminate;
    bool any_equal = false, any_different = false;
    for (const auto& label : id.candidates) {
        const auto* e = find_transitive(label);
        (e->order == reference.order() ? any_equal : any_different) = true;
    }
    if (any_equal && any_different) return Match::indeterminate;
    return any_equal ? Match::yes : Match::no;
}

}  // namespace hitbox
