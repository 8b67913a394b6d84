#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hitbox/curves.hpp"
#include "hitbox/elliptic.hpp"
#include "hitbox/errors.hpp"
#include "hitbox/factor.hpp"
#include "hitbox/fixture.hpp"
#include "hitbox/galois.hpp"
#include "hitbox/local.hpp"
#include "hitbox/parse.hpp"
#include "hitbox/report.hpp"

using namespace hitbox;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kParse = 2, kValidation = 3 };

struct Common {
    std::string format = "table";
    unsigned threads = 0;
    std::string output;

    bool as_json() const { return format == "json"; }

    void apply() const {
        if (threads > 0) setenv("HITBOX_THREADS", std::to_string(threads).c_str(), 1);
    }

    void emit(const std::string& text) const {
        if (output.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(output);
        if (!out) throw ValidationError(output + ": cannot write report");
        out << text;
    }

    void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app->add_option("--threads", c.threads, "Worker threads (overrides HITBOX_THREADS)");
    app->add_option("-o,--output", c.output, "Write the output to a file");
}

/// Factor rendering with primitive integer factors: unit * prod f^m.
std::string factor_text(const QPoly& f, const Factorization& fz) {
    Rational unit = f.leading();
    std::string body;
    for (const auto& fac : fz.factors) {
        const QPoly prim = to_qpoly(primitive_integer_part(fac.poly));
        unit = unit / prim.leading().pow(fac.multiplicity);
        if (!body.empty()) body += " * ";
        body += "(" + to_string(prim) + ")";
        if (fac.multiplicity > 1) body += "^" + std::to_string(fac.multiplicity);
    }
    if (body.empty()) return unit.to_string();
    if (unit == Rational(1)) return body;
    if (unit == Rational(-1)) return "-" + body;
    return unit.to_string() + " * " + body;
}

int cmd_factor(const std::string& text, const Common& c) {
    const QPoly f = parse_xpoly(text);
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    const Factorization fz = factor_over_q(f);
    if (c.as_json()) {
        json fs = json::array();
        for (const auto& fac : fz.factors)
            fs.push_back({{"factor", to_string(to_qpoly(primitive_integer_part(fac.poly)))},
                          {"multiplicity", fac.multiplicity}});
        c.emit(json{{"input", to_string(f)},
                    {"factorization", factor_text(f, fz)},
                    {"factors", fs},
                    {"type", fz.type().to_string()},
                    {"irreducible", fz.is_irreducible()}});
    } else {
        c.emit("factorization: " + factor_text(f, fz) + "\ntype: " + fz.type().to_string() +
               "\nirreducible: " + (fz.is_irreducible() ? "yes" : "no") + "\n");
    }
    return kPass;
}

int cmd_galois(const std::string& text, std::size_t budget, const Common& c) {
    const QPoly f = parse_xpoly(text);
    SieveOptions opts;
    opts.budget = budget;
    const GaloisId id = identify_galois(f, opts);
    if (c.as_json()) {
        json j = to_json(id);
        j["input"] = to_string(f);
        c.emit(j);
    } else {
        std::ostringstream os;
        os << "group: " << id.to_string() << "\n";
        os << "factorization type: " << id.factor_type.to_string() << "\n";
        if (id.mode == GaloisMode::sieved) os << "primes used: " << id.evidence.primes.size() << "\n";
        c.emit(os.str());
    }
    return kPass;
}

int cmd_disc(const std::string& text, const Common& c) {
    const BiPoly p = parse_bipoly(text);
    bool univariate = true;
    for (const auto& tc : p.coeffs()) univariate = univariate && tc.degree() <= 0;
    std::string value;
    if (univariate) {
        std::vector<Rational> cs;
        for (const auto& tc : p.coeffs()) cs.push_back(tc.coeff(0));
        const QPoly f(cs);
        if (f.degree() < 1) throw DomainError("discriminant needs degree >= 1");
        value = discriminant(f).to_string();
    } else {
        value = to_string(discriminant_in_x(p), 'T');
    }
    if (c.as_json())
        c.emit(json{{"input", to_string(p)}, {"discriminant", value}});
    else
        c.emit("discriminant: " + value + "\n");
    return kPass;
}

json rationals_json(const std::set<Rational>& s) {
    json a = json::array();
    for (const auto& r : s) a.push_back(r.to_string());
    return a;
}

std::string rationals_text(const std::set<Rational>& s) {
    std::string out = "{";
    for (const auto& r : s) out += (out.size() > 1 ? ", " : "") + r.to_string();
    return out + "}";
}

struct HitArgs {
    std::string fixture;
    std::string P;
    std::vector<std::string> S;
    long height = 30;
    std::size_t budget = 60;
    bool implication = false;
};

HitData hit_data(const HitArgs& a) {
    if (!a.fixture.empty()) return load_fixture(a.fixture);
    if (a.P.empty()) throw ValidationError("either --fixture or --P is required");
    std::vector<BiPoly> S;
    for (const auto& s : a.S) S.push_back(parse_bipoly(s));
    HitData d = make_hit_data(parse_bipoly(a.P), std::move(S));
    validate_hit_data(d);
    return d;
}

int cmd_compute_d(const HitArgs& a, const Common& c) {
    const HitData d = hit_data(a);
    if (c.as_json())
        c.emit(json{{"name", d.name}, {"D", rationals_json(d.D)}});
    else
        c.emit("D = " + rationals_text(d.D) + "\n");
    return kPass;
}

/// Reference group: the fixture label, otherwise sampled from small integers outside D.
const TransitiveGroupEntry& reference_group(const HitData& d, std::vector<std::string>& notes) {
    if (d.group_label) return *find_transitive(*d.group_label);
    std::vector<Rational> samples;
    for (long k = 2; samples.size() < 8; ++k)
        if (!d.D.count(Rational(k))) samples.push_back(k);
    const GenericGroup g = generic_group(d.P, samples, d.D);
    if (!g.label) throw ResourceError("generic group inconclusive; add G_label to the fixture");
    notes.push_back("reference " + *g.label + ": " + g.note);
    return *find_transitive(*g.label);
}

int cmd_verify(const HitArgs& a, const Common& c) {
    if (a.height < 1) throw ValidationError("--height must be at least 1");
    const HitData d = hit_data(a);
    HitOptions opts;
    opts.prime_budget = a.budget;
    EquivalenceReport rep;
    if (a.implication) {
        rep = verify_factorization_implication(d, a.height, opts);
    } else {
        std::vector<std::string> notes;
        const TransitiveGroupEntry& ref = reference_group(d, notes);
        rep = verify_equivalence(d, ref, a.height, opts);
        rep.notes.insert(rep.notes.begin(), notes.begin(), notes.end());
    }
    if (c.as_json()) {
        json j = to_json(rep);
        j["fixture"] = d.name;
        c.emit(j);
    } else {
        c.emit((d.name.empty() ? "" : "fixture: " + d.name + "\n") + render_table(rep));
    }
    if (!rep.config_valid) return kValidation;
    return rep.passed() ? kPass : kFail;
}

int cmd_enumerate(const HitArgs& a, const Common& c) {
    if (a.height < 1) throw ValidationError("--height must be at least 1");
    const HitData d = hit_data(a);
    HitOptions opts;
    opts.prime_budget = a.budget;
    const auto ex = enumerate_exceptional(d, a.height, opts);
    std::optional<ParametrizationCrossCheck> cc;
    if (d.parametrization) cc = cross_check_parametrization(ex, d, a.height);
    if (c.as_json()) {
        json j{{"fixture", d.name}, {"height_bound", a.height}, {"count", ex.size()}, {"records", to_json(ex)}};
        if (cc) {
            json img = json::array(), miss = json::array(), unex = json::array();
            for (const auto& t : cc->image) img.push_back(t.to_string());
            for (const auto& t : cc->missing) miss.push_back(t.to_string());
            for (const auto& t : cc->unexpected) unex.push_back(t.to_string());
            j["cross_check"] = {{"image", img}, {"missing", miss}, {"unexpected", unex}, {"agrees", cc->agrees()}};
        }
        c.emit(j);
    } else {
        std::ostringstream os;
        if (!d.name.empty()) os << "fixture: " << d.name << "\n";
        os << "height bound: " << a.height << "\nexceptional: " << ex.size() << "\n";
        if (cc)
            os << "parametrization cross-check: " << (cc->agrees() ? "agrees" : "disagrees") << " ("
               << cc->image.size() << " image values)\n";
        os << render_table(ex);
        c.emit(os.str());
    }
    return (cc && !cc->agrees()) ? kFail : kPass;
}

std::string point_text(const PlanePoint& p) { return "(" + p.t.to_string() + ", " + p.x.to_string() + ")"; }

json points_json(const std::vector<PlanePoint>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back({p.t.to_string(), p.x.to_string()});
    return a;
}

struct CurveArgs {
    std::string fixture;
    std::string curve;
    std::vector<std::string> fiber;
    long height = 50;
    std::string a4, a6, cubic, scale = "1";
};

int cmd_param_check(const CurveArgs& a, const Common& c) {
    const HitData d = load_fixture(a.fixture);
    if (!d.parametrization) throw ValidationError(a.fixture + ": no parametrization");
    const auto& cp = *d.parametrization;
    const PlaneCurve curve(d.S[cp.curve_index]);
    const bool ok = verify_parametrization(curve, cp.psi, cp.phi);
    std::vector<Rational> values;
    for (const auto& v : a.fiber) values.push_back(Rational::parse(v));
    std::vector<PlanePoint> fiber;
    if (!values.empty()) fiber = pullback_fiber(cp.phi, values, curve, a.height);
    if (c.as_json()) {
        json j{{"fixture", d.name},
               {"curve", to_string(curve.equation())},
               {"psi", {{"t", to_string(cp.psi.t)}, {"x", to_string(cp.psi.x)}}},
               {"verified", ok}};
        if (!values.empty()) j["fiber"] = {{"values", a.fiber}, {"height", a.height}, {"points", points_json(fiber)}};
        c.emit(j);
    } else {
        std::ostringstream os;
        os << "curve: " << to_string(curve.equation()) << " = 0\n";
        os << "psi: t = " << to_string(cp.psi.t) << ", x = " << to_string(cp.psi.x) << "\n";
        os << "parametrization: " << (ok ? "verified" : "FAILED") << "\n";
        if (!values.empty()) {
            os << "fiber over {";
            for (std::size_t i = 0; i < a.fiber.size(); ++i) os << (i ? ", " : "") << a.fiber[i];
            os << "} at height " << a.height << ":";
            for (const auto& p : fiber) os << " " << point_text(p);
            os << "\n";
        }
        c.emit(os.str());
    }
    return ok ? kPass : kFail;
}

json curve_point_json(const CurvePoint& p) {
    if (p.infinity) return "O";
    return json::array({p.x.to_string(), p.y.to_string()});
}

int cmd_torsion(const CurveArgs& a, const Common& c) {
    std::optional<ScaledModel> model;
    EllipticCurve e = EllipticCurve::short_form(0, 1);
    if (!a.cubic.empty()) {
        model = transform_scaled_model(Rational::parse(a.scale), parse_xpoly(a.cubic));
        e = model->curve;
    } else {
        if (a.a4.empty() || a.a6.empty()) throw ValidationError("give --a4 and --a6, or --cubic");
        e = EllipticCurve::short_form(Rational::parse(a.a4), Rational::parse(a.a6));
    }
    const auto pts = ec_torsion_lutz_nagell(e);
    json rows = json::array();
    std::ostringstream os;
    os << "curve: y^2 = " << to_string(QPoly({e.a6(), e.a4(), Rational(0), Rational(1)}), 'x') << "\n";
    os << "torsion order: " << pts.size() << "\n";
    for (const auto& p : pts) {
        const int ord = ec_order(e, p).value_or(0);
        json row{{"point", curve_point_json(p)}, {"order", ord}};
        os << "  " << p.to_string() << "  order " << ord;
        if (model && !p.infinity) {
            const CurvePoint s = model->backward(p);
            row["source"] = curve_point_json(s);
            os << "  source " << s.to_string();
        }
        rows.push_back(row);
        os << "\n";
    }
    if (c.as_json()) {
        json j{{"curve", {{"a4", e.a4().to_string()}, {"a6", e.a6().to_string()}}}, {"order", pts.size()}, {"points", rows}};
        if (model) j["model"] = {{"scale", model->c.to_string()}, {"shift", model->shift.to_string()}, {"u", model->u.get_str()}};
        c.emit(j);
    } else {
        c.emit(os.str());
    }
    return kPass;
}

int cmd_search(const CurveArgs& a, const Common& c) {
    if (a.curve.empty()) throw ValidationError("--curve is required");
    const PlaneCurve curve(parse_bipoly(a.curve));
    const auto pts = bounded_point_search(curve, a.height);
    if (c.as_json()) {
        c.emit(json{{"curve", to_string(curve.equation())}, {"height", a.height}, {"points", points_json(pts)}});
    } else {
        std::ostringstream os;
        os << "points of height <= " << a.height << ": " << pts.size() << "\n";
        for (const auto& p : pts) os << "  " << point_text(p) << "\n";
        c.emit(os.str());
    }
    return kPass;
}

struct ConicArgs {
    std::string a, b, c, place;
};

int cmd_conic(const ConicArgs& k, const Common& c) {
    const Rational a = Rational::parse(k.a), b = Rational::parse(k.b), cc = Rational::parse(k.c);
    const Rational d = conic_constant(a, b, cc);
    json j{{"a", a.to_string()}, {"b", b.to_string()}, {"c", cc.to_string()}, {"d", d.to_string()}};
    std::ostringstream os;
    os << "conic: y^2 = " << to_string(QPoly({cc, b, a}), 'x') << "\n";
    bool solvable = true;
    if (!k.place.empty()) {
        const Place v = Place::parse(k.place);
        solvable = conic_solvable_local(a, b, cc, v);
        j["place"] = v.to_string();
        os << "place " << v.to_string() << ": " << (solvable ? "solvable" : "unsolvable") << "\n";
    } else {
        json places = json::object();
        if (!d.is_zero())
            for (const auto& v : bad_places(a, d)) {
                const bool ok = conic_solvable_local(a, b, cc, v);
                places[v.to_string()] = ok;
                os << "place " << v.to_string() << ": " << (ok ? "solvable" : "unsolvable") << "\n";
            }
        solvable = conic_solvable_global(a, b, cc);
        j["places"] = places;
        os << "global: " << (solvable ? "solvable" : "unsolvable") << "\n";
    }
    j["solvable"] = solvable;
    if (c.as_json())
        c.emit(j);
    else
        c.emit(os.str());
    return kPass;
}

int cmd_table(int degree, const Common& c) {
    std::vector<int> degrees;
    if (degree)
        degrees.push_back(degree);
    else
        degrees = {2, 3, 4, 5, 6};
    json rows = json::array();
    std::ostringstream os;
    for (int n : degrees)
        for (const auto& e : transitive_table(n)) {
            json gens = json::array();
            for (const auto& g : e.generators) gens.push_back(g.to_string());
            rows.push_back({{"label", e.label}, {"name", e.name}, {"order", e.order}, {"even", e.in_alternating}, {"generators", gens}});
            os << std::left << std::setw(6) << e.label << std::setw(10) << e.name << std::right << std::setw(5) << e.order
               << (e.in_alternating ? "  even" : "  odd") << "\n";
        }
    if (c.as_json())
        c.emit(rows);
    else
        c.emit(os.str());
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exceptional specializations of bivariate polynomials over Q"};
    app.require_subcommand(1);
    Common common;
    int code = kPass;
    std::function<int()> run;

    std::string poly;
    std::size_t budget = 60;

    auto* factor = app.add_subcommand("factor", "Factor a polynomial in X over Q");
    factor->add_option("poly", poly, "Polynomial in X")->required();
    add_common(factor, common);
    factor->callback([&] { run = [&] { return cmd_factor(poly, common); }; });

    auto* galois = app.add_subcommand("galois", "Identify the Galois group of a polynomial in X");
    galois->add_option("poly", poly, "Polynomial in X")->required();
    galois->add_option("--budget", budget, "Prime budget for degree 5 and 6")->check(CLI::PositiveNumber);
    add_common(galois, common);
    galois->callback([&] { run = [&] { return cmd_galois(poly, budget, common); }; });

    auto* disc = app.add_subcommand("disc", "Discriminant in X");
    disc->add_option("poly", poly, "Polynomial in X, optionally in T")->required();
    add_common(disc, common);
    disc->callback([&] { run = [&] { return cmd_disc(poly, common); }; });

    HitArgs hit_args;
    auto* hit = app.add_subcommand("hit", "Exceptional-set certification");
    hit->require_subcommand(1);
    auto hit_inputs = [&](CLI::App* sub) {
        sub->add_option("--fixture", hit_args.fixture, "Fixture path or bundled name");
        sub->add_option("--P", hit_args.P, "P(T, X) when no fixture is given");
        sub->add_option("--S", hit_args.S, "Auxiliary polynomial (repeatable)");
        add_common(sub, common);
    };
    auto* compute_d = hit->add_subcommand("compute-d", "Exclusion set D");
    hit_inputs(compute_d);
    compute_d->callback([&] { run = [&] { return cmd_compute_d(hit_args, common); }; });
    auto* verify = hit->add_subcommand("verify", "Check the equivalence over bounded height");
    hit_inputs(verify);
    verify->add_option("--height", hit_args.height, "Height bound")->check(CLI::PositiveNumber);
    verify->add_option("--budget", hit_args.budget, "Prime budget")->check(CLI::PositiveNumber);
    verify->add_flag("--implication", hit_args.implication, "Check the factorization implication instead");
    verify->callback([&] { run = [&] { return cmd_verify(hit_args, common); }; });
    auto* enumerate = hit->add_subcommand("enumerate", "Exceptional parameters with witnesses");
    hit_inputs(enumerate);
    enumerate->add_option("--height", hit_args.height, "Height bound")->check(CLI::PositiveNumber);
    enumerate->add_option("--budget", hit_args.budget, "Prime budget")->check(CLI::PositiveNumber);
    enumerate->callback([&] { run = [&] { return cmd_enumerate(hit_args, common); }; });

    CurveArgs curve_args;
    auto* curve = app.add_subcommand("curve", "Curve utilities");
    curve->require_subcommand(1);
    auto* param = curve->add_subcommand("param-check", "Verify a fixture's parametrization");
    param->add_option("--fixture", curve_args.fixture, "Fixture path or bundled name")->required();
    param->add_option("--fiber", curve_args.fiber, "Values whose pullback fiber is listed");
    param->add_option("--height", curve_args.height, "Search height for fibers")->check(CLI::PositiveNumber);
    add_common(param, common);
    param->callback([&] { run = [&] { return cmd_param_check(curve_args, common); }; });
    auto* torsion = curve->add_subcommand("torsion", "Torsion by Lutz-Nagell");
    torsion->add_option("--a4", curve_args.a4, "A in y^2 = x^3 + A x + B");
    torsion->add_option("--a6", curve_args.a6, "B in y^2 = x^3 + A x + B");
    torsion->add_option("--cubic", curve_args.cubic, "Monic cubic g for y^2 = c g(x)");
    torsion->add_option("--scale", curve_args.scale, "c for y^2 = c g(x)");
    add_common(torsion, common);
    torsion->callback([&] { run = [&] { return cmd_torsion(curve_args, common); }; });
    auto* search = curve->add_subcommand("search", "Rational points of bounded height");
    search->add_option("--curve", curve_args.curve, "f(T, X)")->required();
    search->add_option("--height", curve_args.height, "Height bound")->check(CLI::PositiveNumber);
    add_common(search, common);
    search->callback([&] { run = [&] { return cmd_search(curve_args, common); }; });

    ConicArgs conic_args;
    auto* local = app.add_subcommand("local", "Local solvability");
    local->require_subcommand(1);
    auto* conic = local->add_subcommand("conic", "y^2 = a x^2 + b x + c");
    conic->add_option("--a", conic_args.a)->required();
    conic->add_option("--b", conic_args.b)->required();
    conic->add_option("--c", conic_args.c)->required();
    conic->add_option("--place", conic_args.place, "Prime or 'real'; all bad places when omitted");
    add_common(conic, common);
    conic->callback([&] { run = [&] { return cmd_conic(conic_args, common); }; });

    int degree = 0;
    auto* table = app.add_subcommand("table", "Reference tables");
    table->require_subcommand(1);
    auto* transitive = table->add_subcommand("transitive", "Transitive groups of degree 2 to 6");
    transitive->add_option("--degree", degree, "Only this degree")->check(CLI::Range(2, 6));
    add_common(transitive, common);
    transitive->callback([&] { run = [&] { return cmd_table(degree, common); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kParse;
    }
    try {
        common.apply();
        code = run();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kValidation;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kValidation;
    }
    return code;
}
