#include "hitbox/hit.hpp"

#include <algorithm>
#include <functional>

#include "hitbox/errors.hpp"
#include "hitbox/parallel.hpp"

namespace hitbox {

namespace {

/// Read-only state shared by every specialization in a sweep.
struct Context {
    const HitData& data;
    const TransitiveGroupEntry* reference = nullptr;
    SieveOptions sieve;
};

Context make_context(const HitData& data, const TransitiveGroupEntry* reference, const HitOptions& options) {
    Context ctx{data, reference, {}};
    ctx.sieve.budget = options.prime_budget;
    if (reference) ctx.sieve.within = transitive_subgroup_labels(reference->group);
    return ctx;
}

const TransitiveGroupEntry* fixture_reference(const HitData& data) {
    if (!data.group_label) return nullptr;
    const TransitiveGroupEntry* e = find_transitive(*data.group_label);
    if (!e) throw ValidationError("unknown group label " + *data.group_label);
    return e;
}

bool better_witness(const Witness& a, const Witness& b) {
    const Integer ha = height(a.x), hb = height(b.x);
    if (ha != hb) return ha < hb;
    if (a.index != b.index) return a.index < b.index;
    return sweep_less(a.x, b.x);
}

SpecializationRecord classify(const Rational& t, const Context& ctx) {
    SpecializationRecord r;
    r.t = t;
    r.in_D = ctx.data.D.count(t) > 0;
    const QPoly pt = specialize(ctx.data.P, t);
    if (pt.degree() >= 1) {
        r.factorization_type = factorization_type(pt);
        // A good specialization embeds into the generic group, so the
        // candidate list may be narrowed only outside D.
        try {
            r.galois = identify_galois(pt, r.in_D ? SieveOptions{ctx.sieve.budget, ctx.sieve.unseen_threshold, {}}
                                                  : ctx.sieve);
        } catch (const DomainError&) {
            if (!r.in_D) throw;
        }
    }
    if (r.in_D) {
        r.verdict = Verdict::excluded;
        return r;
    }
    r.witness = find_witness(ctx.data.S, t);
    if (ctx.reference) r.match = groups_match(r.galois, ctx.reference->group);
    if (r.witness)
        r.verdict = Verdict::exceptional;
    else if (r.match == Match::indeterminate)
        r.verdict = Verdict::indeterminate;
    else
        r.verdict = Verdict::generic;
    return r;
}

std::vector<SpecializationRecord> sweep(const std::vector<Rational>& ts, const Context& ctx) {
    return parallel_map<SpecializationRecord>(ts.size(), [&](std::size_t i) { return classify(ts[i], ctx); });
}

void tally(EquivalenceReport& rep) {
    for (const auto& r : rep.records) ++rep.counts[r.verdict];
}

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::computed ? "computed" : "fixture"; }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::excluded: return "excluded";
        case Verdict::exceptional: return "exceptional";
        case Verdict::generic: return "generic";
        default: return "indeterminate";
    }
}

std::set<Rational> compute_exclusion_set(const BiPoly& P, const std::vector<BiPoly>& S) {
    if (!separable_over_qt(P)) throw DomainError("P is not separable over Q(T)");
    std::set<Rational> D;
    auto add_roots = [&](const QPoly& g) {
        if (g.is_zero()) throw DomainError("vanishing exclusion polynomial");
        for (const auto& r : rational_roots(g)) D.insert(r);
    };
    add_roots(leading_coeff_in_x(P));
    add_roots(discriminant_in_x(P));
    for (const auto& f : S) {
        if (f.degree() < 1) throw DomainError("auxiliary polynomial of X-degree < 1");
        add_roots(discriminant_in_x(f));
    }
    return D;
}

HitData make_hit_data(BiPoly P, std::vector<BiPoly> S) {
    HitData data;
    data.D = compute_exclusion_set(P, S);
    data.P = std::move(P);
    data.S = std::move(S);
    if (data.S.empty()) data.notes.push_back("no maximal subgroup data");
    return data;
}

void validate_hit_data(const HitData& data) {
    if (data.P.degree() < 1) throw ValidationError("P: X-degree must be at least 1");
    if (!separable_over_qt(data.P)) throw ValidationError("P: not separable over Q(T)");
    for (std::size_t i = 0; i < data.S.size(); ++i) {
        const BiPoly& f = data.S[i];
        const std::string where = "S[" + std::to_string(i) + "]";
        if (f.degree() < 2) throw ValidationError(where + ": X-degree must be at least 2");
        if (f.leading() != QPoly::constant(Rational(1))) throw ValidationError(where + ": not monic in X");
    }
    const TransitiveGroupEntry* ref = fixture_reference(data);
    if (!ref) return;
    if (ref->degree != data.P.degree())
        throw ValidationError("G_label: degree " + std::to_string(ref->degree) + " differs from the X-degree of P");
    if (data.group_order && *data.group_order != ref->order)
        throw ValidationError("G_order: " + std::to_string(*data.group_order) + " differs from the order of " +
                              ref->label);
    if (data.S.empty()) return;
    std::vector<std::size_t> indices, degrees;
    for (const auto& c : maximal_classes(ref->group)) indices.push_back(c.index);
    for (const auto& f : data.S) degrees.push_back(static_cast<std::size_t>(f.degree()));
    std::sort(indices.begin(), indices.end());
    std::sort(degrees.begin(), degrees.end());
    if (indices != degrees) throw ValidationError("S: X-degrees do not match the maximal-class indices of " + ref->label);
}

GenericGroup generic_group(const BiPoly& P, const std::vector<Rational>& samples, const std::set<Rational>& D,
                           std::size_t prime_budget) {
    if (samples.size() < 5) throw DomainError("generic group needs at least 5 samples");
    for (const auto& t : samples)
        if (D.count(t)) throw DomainError("sample " + t.to_string() + " lies in D");
    SieveOptions opts;
    opts.budget = prime_budget;
    auto ids = parallel_map<GaloisId>(samples.size(),
                                      [&](std::size_t i) { return identify_galois(specialize(P, samples[i]), opts); });
    GenericGroup g;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        g.samples.emplace_back(samples[i], ids[i]);
        if (ids[i].transitive && ids[i].order && (!g.order || *ids[i].order > *g.order)) g.order = ids[i].order;
    }
    if (!g.order) throw ResourceError("generic group inconclusive: no sample has a transitive group of known order");
    std::set<std::string> labels;
    for (const auto& id : ids) {
        if (!id.transitive || id.order != g.order) continue;
        if (id.mode == GaloisMode::definitive) {
            g.label = id.label;
            labels.insert(id.label);
        } else {
            labels.insert(id.candidates.begin(), id.candidates.end());
        }
    }
    if (g.label) labels = {*g.label};
    g.candidates.assign(labels.begin(), labels.end());
    return g;
}

std::optional<Witness> find_witness(const std::vector<BiPoly>& S, const Rational& t) {
    std::optional<Witness> best;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const QPoly ft = specialize(S[i], t);
        if (ft.degree() < 1) continue;
        for (const auto& x : rational_roots(ft)) {
            Witness w{i, x};
            if (!best || better_witness(w, *best)) best = w;
        }
    }
    return best;
}

SpecializationRecord exceptional_test(const Rational& t, const HitData& data, const HitOptions& options) {
    return classify(t, make_context(data, fixture_reference(data), options));
}

double EquivalenceReport::determinate_fraction() const {
    std::size_t outside = 0;
    for (const auto& r : records)
        if (!r.in_D) ++outside;
    if (outside == 0) return 1.0;
    return 1.0 - static_cast<double>(indeterminates.size()) / static_cast<double>(outside);
}

EquivalenceReport verify_equivalence(const HitData& data, const TransitiveGroupEntry& reference, long height_bound,
                                     const HitOptions& options) {
    if (height_bound < 1) throw DomainError("height bound must be at least 1");
    EquivalenceReport rep;
    rep.kind = "equivalence";
    rep.height_bound = height_bound;
    if (data.S.empty() && reference.order > 1) {
        rep.config_valid = false;
        rep.notes.push_back("no f to witness: S is empty but the reference group is nontrivial");
    }
    const Context ctx = make_context(data, &reference, options);
    rep.records = sweep(rationals_up_to_height(height_bound), ctx);
    for (const auto& r : rep.records) {
        if (r.in_D) continue;
        if (r.match == Match::indeterminate) {
            rep.indeterminates.push_back(r);
            continue;
        }
        if (r.witness.has_value() != (r.match == Match::no)) rep.violations.push_back(r);
    }
    tally(rep);
    return rep;
}

GenericFactorization generic_factorization_type(const BiPoly& P, const std::set<Rational>& D) {
    GenericFactorization out;
    int tried = 0;
    for (long k = 1; tried < 40; ++k) {
        for (long t : {k, -k}) {
            if (D.count(Rational(t))) continue;
            const QPoly pt = specialize(P, t);
            if (pt.degree() != P.degree()) continue;
            ++tried;
            const FactorizationType ft = factorization_type(pt);
            if (out.type.size() == 0 || ft.size() < out.type.size()) out.type = ft;
            if (ft.size() == 1 && ft.degrees()[0] == P.degree()) {
                out.certified = true;
                out.certificate = Rational(t);
                return out;
            }
        }
    }
    return out;
}

EquivalenceReport verify_factorization_implication(const HitData& data, long height_bound,
                                                   const HitOptions& options) {
    if (height_bound < 1) throw DomainError("height bound must be at least 1");
    EquivalenceReport rep;
    rep.kind = "factorization";
    rep.height_bound = height_bound;
    const GenericFactorization gf = generic_factorization_type(data.P, data.D);
    rep.notes.push_back("F(P) = " + gf.type.to_string() +
                        (gf.certified ? " (irreducible, certified at t = " + gf.certificate->to_string() + ")"
                                      : " (coarsest specialization type, not certified)"));
    const Context ctx = make_context(data, fixture_reference(data), options);
    rep.records = sweep(rationals_up_to_height(height_bound), ctx);
    for (const auto& r : rep.records) {
        if (r.in_D) continue;
        if (r.factorization_type != gf.type && !r.witness) rep.violations.push_back(r);
    }
    tally(rep);
    return rep;
}

std::vector<SpecializationRecord> enumerate_exceptional(const HitData& data, long height_bound,
                                                        const HitOptions& options) {
    if (height_bound < 1) throw DomainError("height bound must be at least 1");
    const auto ts = rationals_up_to_height(height_bound);
    struct Hit {
        bool found = false;
    };
    const auto hits = parallel_map<Hit>(ts.size(), [&](std::size_t i) {
        return Hit{!data.D.count(ts[i]) && find_witness(data.S, ts[i]).has_value()};
    });
    std::vector<Rational> found;
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (hits[i].found) found.push_back(ts[i]);
    return sweep(found, make_context(data, fixture_reference(data), options));
}

ParametrizationCrossCheck cross_check_parametrization(const std::vector<SpecializationRecord>& exceptional,
                                                      const HitData& data, long height_bound) {
    if (!data.parametrization) throw DomainError("no parametrization to cross-check");
    std::set<Rational, decltype(&sweep_less)> image(&sweep_less), seen(&sweep_less);
    for (const auto& v : rationals_up_to_height(height_bound)) {
        const auto p = eval_map(data.parametrization->psi, v);
        if (!p || height(p->t) > height_bound || data.D.count(p->t)) continue;
        image.insert(p->t);
    }
    for (const auto& r : exceptional)
        if (r.verdict == Verdict::exceptional) seen.insert(r.t);
    ParametrizationCrossCheck out;
    out.image.assign(image.begin(), image.end());
    for (const auto& t : image)
        if (!seen.count(t)) out.missing.push_back(t);
    for (const auto& t : seen)
        if (!image.count(t)) out.unexpected.push_back(t);
    return out;
}

}  // namespace hitbox
