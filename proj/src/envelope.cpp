#include "sumcol/envelope.hpp"

#include <cstdint>
#include <sstream>

#include "sumcol/dimacs.hpp"

namespace sumcol {

Json rational_to_json(const Rational& r) {
    return Json{{"num", r.numerator().get_str()},
                {"den", r.denominator().get_str()},
                {"decimal", r.decimal_string()}};
}

Rational rational_from_json(const Json& j) {
    return Rational(Integer(j.at("num").get<std::string>()),
                    Integer(j.at("den").get<std::string>()));
}

std::string content_hash(const std::string& canonical_dimacs) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_dimacs) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

InputFingerprint fingerprint(const Graph& g) {
    return InputFingerprint{g.vertex_count(), g.edge_count(), content_hash(write_dimacs(g))};
}

Json OutputEnvelope::to_json() const {
    Json j{{"command", command},
           {"result", result},
           {"exact", exact},
           {"stats", Json{{"nodes", stats.nodes}, {"seconds", stats.seconds}}}};
    if (input)
        j["input"] = Json{{"n", input->n}, {"e", input->e}, {"hash", input->hash}};
    return j;
}

OutputEnvelope OutputEnvelope::from_json(const Json& j) {
    OutputEnvelope env;
    env.command = j.at("command").get<std::string>();
    env.result = j.at("result");
    env.exact = j.at("exact").get<bool>();
    env.stats.nodes = j.at("stats").at("nodes").get<std::uint64_t>();
    env.stats.seconds = j.at("stats").at("seconds").get<double>();
    if (j.contains("input")) {
        InputFingerprint fp;
        fp.n = j.at("input").at("n").get<int>();
        fp.e = j.at("input").at("e").get<long long>();
        fp.hash = j.at("input").at("hash").get<std::string>();
        env.input = fp;
    }
    return env;
}

Json coloring_to_json(const Coloring& c) {
    return Json{{"colors", c.colors()}, {"sum", c.sum()}, {"num_colors", c.num_colors()}};
}

Json sum_result_to_json(const SumResult& r, bool include_witness) {
    Json j{{"sigma", r.sigma}, {"strength", r.strength}, {"exact", r.optimal}};
    if (include_witness) j["witness"] = coloring_to_json(r.witness);
    return j;
}

namespace {

Json bound_entries_to_json(const std::vector<BoundEntry>& entries) {
    Json arr = Json::array();
    for (const auto& e : entries) {
        Json item{{"name", e.name}, {"value", rational_to_json(e.value)}, {"strict", e.strict}};
        if (!e.note.empty()) item["note"] = e.note;
        arr.push_back(std::move(item));
    }
    return arr;
}

}  // namespace

Json bounds_report_to_json(const BoundsReport& r) {
    Json j{{"n", r.n},
           {"e", r.e},
           {"alpha", r.alpha},
           {"omega", r.omega},
           {"lower", bound_entries_to_json(r.lower)},
           {"upper", bound_entries_to_json(r.upper)},
           {"omitted", r.omitted}};
    if (r.chi) j["chi"] = *r.chi;
    if (r.chi_f) j["chi_f"] = rational_to_json(*r.chi_f);
    return j;
}

Json chif_result_to_json(const ChiFResult& r) {
    Json cert = Json::array();
    for (const auto& fw : r.certificate)
        cert.push_back(Json{{"set", fw.set.members()}, {"weight", rational_to_json(fw.weight)}});
    return Json{{"value", rational_to_json(r.value)},
                {"certificate", cert},
                {"method", r.method == ChiFMethod::Lp ? "lp" : "vertex-transitive-shortcut"}};
}

Json obstruction_to_json(const ObstructionVerdict& v) {
    const char* outcome = nullptr;
    switch (v.outcome) {
        case ObstructionOutcome::NoHomomorphismProven: outcome = "no-homomorphism-proven"; break;
        case ObstructionOutcome::Inconclusive: outcome = "inconclusive"; break;
        case ObstructionOutcome::NotApplicable: outcome = "not-applicable"; break;
    }
    Json j{{"outcome", outcome},
           {"ratio_g", rational_to_json(v.ratio_g)},
           {"ratio_h", rational_to_json(v.ratio_h)},
           {"h_vertex_transitive", v.h_vertex_transitive},
           {"reason", v.reason}};
    if (v.h_orbit_count) j["h_orbit_count"] = *v.h_orbit_count;
    return j;
}

Json conjecture_row_to_json(const ConjectureRow& row) {
    Json j{{"m", row.m},
           {"n", row.n},
           {"vertices", row.vertices},
           {"star_peel_sigma", row.star_peel_sigma},
           {"conjectured", rational_to_json(row.conjectured)},
           {"nodes", row.stats.nodes}};
    if (row.exact_sigma) j["exact_sigma"] = *row.exact_sigma;
    if (row.best_upper) j["best_upper"] = *row.best_upper;
    switch (row.verdict) {
        case ConjectureVerdict::Match: j["verdict"] = "match"; break;
        case ConjectureVerdict::ExactBelowConjecture: j["verdict"] = "below"; break;
        case ConjectureVerdict::Unknown: j["verdict"] = "unknown"; break;
    }
    return j;
}

}  // namespace sumcol
