#include "hitbox/fixture.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hitbox/errors.hpp"
#include "hitbox/parse.hpp"

namespace hitbox {

namespace {

using nlohmann::json;

class Reader {
  public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw ValidationError(origin_ + ": " + field + ": " + what);
    }

    const std::string& text(const json& j, const std::string& field) const {
        if (!j.is_string()) fail(field, "expected a string");
        return j.get_ref<const std::string&>();
    }

    BiPoly bipoly(const json& j, const std::string& field) const {
        try {
            return parse_bipoly(text(j, field));
        } catch (const ParseError& e) {
            fail(field, e.what());
        }
    }

    /// A polynomial in V, read through the X grammar.
    QPoly vpoly(const json& j, const std::string& field) const {
        std::string s = text(j, field);
        for (char& c : s) {
            if (c == 'X') fail(field, "use V as the parameter variable");
            if (c == 'V') c = 'X';
        }
        try {
            return parse_xpoly(s);
        } catch (const ParseError& e) {
            fail(field, e.what());
        }
    }

    Rational rational(const json& j, const std::string& field) const {
        try {
            return Rational::parse(text(j, field));
        } catch (const ParseError& e) {
            fail(field, e.what());
        } catch (const DomainError& e) {
            fail(field, e.what());
        }
    }

    const json& pair(const json& j, const std::string& field) const {
        if (!j.is_array() || j.size() != 2) fail(field, "expected [numerator, denominator]");
        return j;
    }

    template <class F>
    auto guarded(const std::string& field, F&& f) const {
        try {
            return f();
        } catch (const DomainError& e) {
            fail(field, e.what());
        }
    }

  private:
    std::string origin_;
};

}  // namespace

HitData parse_fixture(const std::string& json_text, const std::string& origin) {
    const Reader rd(origin);
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(origin + ": malformed JSON at byte " + std::to_string(e.byte));
    }
    if (!doc.is_object()) rd.fail("(root)", "expected an object");
    for (const char* key : {"P", "D", "S"})
        if (!doc.contains(key)) rd.fail(key, "missing");

    HitData data;
    data.P = rd.bipoly(doc["P"], "P");
    if (!doc["S"].is_array()) rd.fail("S", "expected an array");
    for (std::size_t i = 0; i < doc["S"].size(); ++i)
        data.S.push_back(rd.bipoly(doc["S"][i], "S[" + std::to_string(i) + "]"));
    data.s_provenance = Provenance::fixture;

    if (!doc["D"].is_array()) rd.fail("D", "expected an array");
    std::set<Rational> declared;
    for (std::size_t i = 0; i < doc["D"].size(); ++i)
        declared.insert(rd.rational(doc["D"][i], "D[" + std::to_string(i) + "]"));

    if (doc.contains("name")) data.name = rd.text(doc["name"], "name");
    if (doc.contains("G_label")) data.group_label = rd.text(doc["G_label"], "G_label");
    if (doc.contains("G_order")) {
        if (!doc["G_order"].is_number_unsigned()) rd.fail("G_order", "expected a positive integer");
        data.group_order = doc["G_order"].get<std::size_t>();
    }
    if (doc.contains("notes")) {
        if (!doc["notes"].is_array()) rd.fail("notes", "expected an array of strings");
        for (std::size_t i = 0; i < doc["notes"].size(); ++i)
            data.notes.push_back(rd.text(doc["notes"][i], "notes[" + std::to_string(i) + "]"));
    }

    try {
        validate_hit_data(data);
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }

    data.D = rd.guarded("D", [&] { return compute_exclusion_set(data.P, data.S); });
    if (data.D != declared) {
        std::ostringstream os;
        os << "declared set differs from the computed set {";
        bool first = true;
        for (const auto& r : data.D) {
            os << (first ? "" : ", ") << r;
            first = false;
        }
        os << "}";
        rd.fail("D", os.str());
    }
    data.d_provenance = Provenance::computed;
    if (data.S.empty()) data.notes.push_back("no maximal subgroup data");

    if (doc.contains("parametrization")) {
        const json& pj = doc["parametrization"];
        if (!pj.is_object()) rd.fail("parametrization", "expected an object");
        for (const char* key : {"curve", "psi_t", "psi_x", "phi"})
            if (!pj.contains(key)) rd.fail(std::string("parametrization.") + key, "missing");
        CurveParametrization cp;
        if (!pj["curve"].is_number_unsigned() || pj["curve"].get<std::size_t>() >= data.S.size())
            rd.fail("parametrization.curve", "expected an index into S");
        cp.curve_index = pj["curve"].get<std::size_t>();
        auto qfrac = [&](const char* key) {
            const std::string field = std::string("parametrization.") + key;
            const json& pr = rd.pair(pj[key], field);
            const QPoly num = rd.vpoly(pr[0], field + "[0]"), den = rd.vpoly(pr[1], field + "[1]");
            return rd.guarded(field, [&] { return QFrac(num, den); });
        };
        cp.psi = {qfrac("psi_t"), qfrac("psi_x")};
        const json& ph = rd.pair(pj["phi"], "parametrization.phi");
        const BiPoly num = rd.bipoly(ph[0], "parametrization.phi[0]"), den = rd.bipoly(ph[1], "parametrization.phi[1]");
        cp.phi = rd.guarded("parametrization.phi", [&] { return BiFrac(num, den); });
        data.parametrization = std::move(cp);
    }
    return data;
}

std::string bundled_fixture(const std::string& name) {
    return (std::filesystem::path(HITBOX_FIXTURE_DIR) / (name + ".json")).string();
}

HitData load_fixture(const std::string& path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> tries{path};
    if (!fs::path(path).has_extension()) {
        tries.emplace_back(path + ".json");
        tries.emplace_back(bundled_fixture(fs::path(path).filename().string()));
    }
    for (const auto& p : tries) {
        if (!fs::is_regular_file(p)) continue;
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_fixture(ss.str(), p.string());
    }
    throw ValidationError(path + ": fixture not found");
}

}  // namespace hitbox
