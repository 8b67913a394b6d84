#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hitbox/elliptic.hpp"
#include "hitbox/errors.hpp"
#include "hitbox/factor.hpp"
#include "hitbox/fixture.hpp"
#include "hitbox/galois.hpp"
#include "hitbox/local.hpp"
#include "hitbox/parse.hpp"
#include "hitbox/report.hpp"

namespace py = pybind11;
using namespace hitbox;
using nlohmann::json;

namespace {

std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(r.to_string());
    return out;
}

std::string factor_json(const std::string& text) {
    const Factorization fz = factor_over_q(parse_xpoly(text));
    json fs = json::array();
    for (const auto& f : fz.factors) fs.push_back({{"factor", to_string(f.poly)}, {"multiplicity", f.multiplicity}});
    return json{{"unit", fz.unit.to_string()}, {"factors", fs}, {"type", fz.type().degrees()},
                {"irreducible", fz.is_irreducible()}}
        .dump();
}

std::string galois_json(const std::string& text, std::size_t budget) {
    SieveOptions opts;
    opts.budget = budget;
    return to_json(identify_galois(parse_xpoly(text), opts)).dump();
}

std::string discriminant_text(const std::string& text) {
    const BiPoly p = parse_bipoly(text);
    for (const auto& c : p.coeffs())
        if (c.degree() > 0) return to_string(discriminant_in_x(p), 'T');
    std::vector<Rational> cs;
    for (const auto& c : p.coeffs()) cs.push_back(c.coeff(0));
    return discriminant(QPoly(cs)).to_string();
}

std::vector<std::string> exclusion_set(const std::string& P, const std::vector<std::string>& S) {
    std::vector<BiPoly> fs;
    for (const auto& s : S) fs.push_back(parse_bipoly(s));
    const auto D = compute_exclusion_set(parse_bipoly(P), fs);
    return strings(std::vector<Rational>(D.begin(), D.end()));
}

std::string verify_json(const std::string& path, long height, std::size_t budget, bool implication) {
    const HitData d = load_fixture(path);
    HitOptions opts;
    opts.prime_budget = budget;
    if (implication) return to_json(verify_factorization_implication(d, height, opts)).dump();
    if (!d.group_label) throw ValidationError(path + ": G_label is required");
    return to_json(verify_equivalence(d, *find_transitive(*d.group_label), height, opts)).dump();
}

std::string torsion_json(const std::string& a4, const std::string& a6) {
    const auto e = EllipticCurve::short_form(Rational::parse(a4), Rational::parse(a6));
    json pts = json::array();
    for (const auto& p : ec_torsion_lutz_nagell(e)) {
        json pt = p.infinity ? json(nullptr) : json::array({p.x.to_string(), p.y.to_string()});
        pts.push_back({{"point", pt}, {"order", ec_order(e, p).value_or(0)}});
    }
    return pts.dump();
}

std::string table_json(int n) {
    json rows = json::array();
    for (const auto& e : transitive_table(n))
        rows.push_back({{"label", e.label}, {"name", e.name}, {"order", e.order}, {"even", e.in_alternating}});
    return rows.dump();
}

}  // namespace

PYBIND11_MODULE(_hitbox, m) {
    m.doc() = "Exact algebra for exceptional specializations over Q";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def("factor_json", &factor_json, py::arg("poly"));
    m.def("rational_roots", [](const std::string& s) { return strings(rational_roots(parse_xpoly(s))); }, py::arg("poly"));
    m.def("galois_json", &galois_json, py::arg("poly"), py::arg("budget") = 60);
    m.def("discriminant", &discriminant_text, py::arg("poly"));
    m.def("exclusion_set", &exclusion_set, py::arg("P"), py::arg("S"));
    m.def("fixture_json", [](const std::string& path) { return to_json(load_fixture(path)).dump(); }, py::arg("path"));
    m.def("verify_json", &verify_json, py::arg("path"), py::arg("height"), py::arg("budget") = 60,
          py::arg("implication") = false, py::call_guard<py::gil_scoped_release>());
    m.def(
        "enumerate_json",
        [](const std::string& path, long height) { return to_json(enumerate_exceptional(load_fixture(path), height)).dump(); },
        py::arg("path"), py::arg("height"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "hilbert_symbol",
        [](const std::string& a, const std::string& b, const std::string& place) {
            return hilbert_symbol(Rational::parse(a), Rational::parse(b), Place::parse(place));
        },
        py::arg("a"), py::arg("b"), py::arg("place"));
    m.def(
        "conic_solvable",
        [](const std::string& a, const std::string& b, const std::string& c, const std::string& place) {
            const Rational ra = Rational::parse(a), rb = Rational::parse(b), rc = Rational::parse(c);
            return place.empty() ? conic_solvable_global(ra, rb, rc) : conic_solvable_local(ra, rb, rc, Place::parse(place));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("place") = "");
    m.def("torsion_json", &torsion_json, py::arg("a4"), py::arg("a6"));
    m.def("transitive_table_json", &table_json, py::arg("degree"));
}
