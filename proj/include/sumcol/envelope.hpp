#ifndef SUMCOL_ENVELOPE_HPP
#define SUMCOL_ENVELOPE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sumcol/bounds.hpp"
#include "sumcol/budget.hpp"
#include "sumcol/coloring.hpp"
#include "sumcol/exact.hpp"
#include "sumcol/fractional.hpp"
#include "sumcol/graph.hpp"
#include "sumcol/homomorphism.hpp"
#include "sumcol/kneser_lab.hpp"
#include "sumcol/rational.hpp"

namespace sumcol {

using Json = nlohmann::json;

/// Exact serialization {"num": "...", "den": "...", "decimal": "..."}:
/// numerator and denominator as decimal strings (arbitrary precision), the
/// rounded decimal rendering as a display courtesy only.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// FNV-1a 64-bit over the canonical DIMACS text, as 16 hex digits.
std::string content_hash(const std::string& canonical_dimacs);

struct InputFingerprint {
    int n = 0;
    long long e = 0;
    std::string hash;
};

/// Wrapper emitted by every CLI command in JSON mode: the command echo, the
/// input fingerprint, the command-specific payload, exactness flags, and
/// search statistics. Budget-truncated results never masquerade as exact.
struct OutputEnvelope {
    std::string command;
    std::optional<InputFingerprint> input;
    Json result;
    bool exact = true;
    SearchStats stats;

    Json to_json() const;
    static OutputEnvelope from_json(const Json& j);
};

InputFingerprint fingerprint(const Graph& g);

Json coloring_to_json(const Coloring& c);
Json sum_result_to_json(const SumResult& r, bool include_witness);
Json bounds_report_to_json(const BoundsReport& r);
Json chif_result_to_json(const ChiFResult& r);
Json obstruction_to_json(const ObstructionVerdict& v);
Json conjecture_row_to_json(const ConjectureRow& row);

}  // namespace sumcol

#endif
