#include "sumcol/dimacs.hpp"

#include <sstream>

namespace sumcol {

Graph read_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long declared_edges = 0;
    Graph g;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate problem header");
            std::string format;
            long long n = -1, e = -1;
            if (!(ls >> format >> n >> e)) throw ParseError(lineno, "malformed problem header");
            if (format != "edge" && format != "col")
                throw ParseError(lineno, "unsupported format '" + format + "' (expected 'edge')");
            if (n < 0) throw ParseError(lineno, "negative vertex count");
            if (e < 0) throw ParseError(lineno, "negative edge count");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
            g = Graph(static_cast<int>(n));
            declared_edges = e;
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError(lineno, "edge line before problem header");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge line");
            if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
                throw ParseError(lineno, "vertex index out of range");
            if (u == v) throw ParseError(lineno, "self-loop is not allowed");
            g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        } else {
            throw ParseError(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing problem header");
    (void)declared_edges;  // advisory only; duplicates collapse under set semantics
    return g;
}

std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

}  // namespace sumcol
