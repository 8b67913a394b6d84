#include "hitbox/report.hpp"

#include <iomanip>
#include <sstream>

namespace hitbox {

namespace {

using nlohmann::json;

std::string mode_name(GaloisMode m) {
    switch (m) {
        case GaloisMode::definitive: return "definitive";
        case GaloisMode::sieved: return "sieved";
        default: return "factor_types";
    }
}

std::string witness_text(const SpecializationRecord& r) {
    if (!r.witness) return "-";
    return "S[" + std::to_string(r.witness->index) + "] x=" + r.witness->x.to_string();
}

std::string row(const std::vector<std::string>& cells, const std::vector<int>& widths) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i + 1 == cells.size())
            os << cells[i];
        else
            os << std::left << std::setw(widths[i]) << cells[i] << "  ";
    }
    std::string s = os.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
}

}  // namespace

json to_json(const GaloisId& id) {
    json j{{"mode", mode_name(id.mode)},
           {"degree", id.degree},
           {"transitive", id.transitive},
           {"factor_type", id.factor_type.to_string()},
           {"text", id.to_string()}};
    if (!id.label.empty()) j["label"] = id.label;
    if (!id.candidates.empty()) j["candidates"] = id.candidates;
    if (id.order) j["order"] = *id.order;
    j["primes_used"] = id.evidence.primes.size();
    return j;
}

json to_json(const SpecializationRecord& r) {
    json j{{"t", r.t.to_string()},
           {"height", height(r.t).get_str()},
           {"in_D", r.in_D},
           {"factorization_type", r.factorization_type.to_string()},
           {"galois", to_json(r.galois)},
           {"verdict", to_string(r.verdict)}};
    j["witness"] = r.witness ? json{{"index", r.witness->index}, {"x", r.witness->x.to_string()}} : json(nullptr);
    j["match"] = r.match ? json(to_string(*r.match)) : json(nullptr);
    return j;
}

json to_json(const std::vector<SpecializationRecord>& records) {
    json a = json::array();
    for (const auto& r : records) a.push_back(to_json(r));
    return a;
}

json to_json(const EquivalenceReport& rep) {
    json counts = json::object();
    for (Verdict v : {Verdict::excluded, Verdict::exceptional, Verdict::generic, Verdict::indeterminate}) {
        auto it = rep.counts.find(v);
        counts[to_string(v)] = it == rep.counts.end() ? 0 : it->second;
    }
    json summary{{"kind", rep.kind},
                 {"height_bound", rep.height_bound},
                 {"records", rep.records.size()},
                 {"counts", counts},
                 {"violations", rep.violations.size()},
                 {"indeterminate", rep.indeterminates.size()},
                 {"determinate_fraction", rep.determinate_fraction()},
                 {"config_valid", rep.config_valid},
                 {"notes", rep.notes},
                 {"passed", rep.passed()}};
    return json{{"summary", summary},
                {"violations", to_json(rep.violations)},
                {"indeterminates", to_json(rep.indeterminates)},
                {"records", to_json(rep.records)}};
}

json to_json(const HitData& data) {
    json s = json::array();
    for (const auto& f : data.S) s.push_back(to_string(f));
    json d = json::array();
    for (const auto& t : data.D) d.push_back(t.to_string());
    json j{{"name", data.name},
           {"P", to_string(data.P)},
           {"D", d},
           {"S", s},
           {"provenance", {{"D", to_string(data.d_provenance)}, {"S", to_string(data.s_provenance)}}},
           {"notes", data.notes}};
    if (data.group_label) j["G_label"] = *data.group_label;
    if (data.group_order) j["G_order"] = *data.group_order;
    return j;
}

std::string render_table(const std::vector<SpecializationRecord>& records) {
    const std::vector<int> w{12, 13, 22, 14, 28};
    std::string out = row({"t", "verdict", "witness", "F(P_t)", "G_t", "match"}, w);
    for (const auto& r : records)
        out += row({r.t.to_string(), to_string(r.verdict), witness_text(r), r.factorization_type.to_string(),
                    r.galois.degree ? r.galois.to_string() : "-", r.match ? to_string(*r.match) : "-"},
                   w);
    return out;
}

std::string render_table(const EquivalenceReport& rep) {
    std::ostringstream os;
    os << "kind: " << rep.kind << "\n";
    os << "height bound: " << rep.height_bound << "\n";
    os << "records: " << rep.records.size() << "\n";
    for (const auto& [v, n] : rep.counts) os << "  " << to_string(v) << ": " << n << "\n";
    os << "violations: " << rep.violations.size() << "\n";
    os << "indeterminate: " << rep.indeterminates.size() << " (determinate fraction " << std::fixed
       << std::setprecision(4) << rep.determinate_fraction() << ")\n";
    if (!rep.config_valid) os << "configuration: invalid\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
    os << "result: " << (rep.passed() ? "pass" : "fail") << "\n";
    if (!rep.violations.empty()) os << "\nviolations\n" << render_table(rep.violations);
    if (!rep.indeterminates.empty()) os << "\nindeterminate\n" << render_table(rep.indeterminates);
    return os.str();
}

}  // namespace hitbox
