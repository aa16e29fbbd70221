#ifndef SUMCOL_DIMACS_HPP
#define SUMCOL_DIMACS_HPP

#include <stdexcept>
#include <string>

#include "sumcol/graph.hpp"

namespace sumcol {

/// DIMACS parse failure; line is 1-based within the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Parses the DIMACS coloring format: optional "c ..." comment lines, one
/// "p edge <n> <e>" header, then "e <u> <v>" lines with 1-based vertex
/// indices. Duplicate edges and both orientations are accepted (set
/// semantics); self-loop lines are a hard parse error.
Graph read_dimacs(const std::string& text);

/// Canonical serialization: header, then edges "e u v" with u < v in
/// ascending order, 1-based. Optional leading comment lines are emitted
/// verbatim (each supplied without the "c " prefix).
std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace sumcol

#endif
