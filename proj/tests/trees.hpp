#ifndef SUMCOL_TESTS_TREES_HPP
#define SUMCOL_TESTS_TREES_HPP

// Exhaustive free-tree enumeration for small orders: every labeled tree
// admits an increasing parent array (parent[i] < i after rooting and
// breadth-first relabeling), so generating all increasing parent arrays and
// deduplicating by a canonical certificate covers every unlabeled tree
// exactly once.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sumcol/graph.hpp"

namespace trees {

using sumcol::Graph;

namespace detail {

inline std::string rooted_certificate(const Graph& g, int v, int parent) {
    std::vector<std::string> children;
    for (int w : g.neighbors(v))
        if (w != parent) children.push_back(rooted_certificate(g, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
}

// Centers via leaf peeling: one or two central vertices.
inline std::vector<int> centers(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> degree(static_cast<size_t>(n));
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<size_t>(v)] = g.degree(v);
        if (degree[static_cast<size_t>(v)] <= 1) frontier.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(frontier.size());
        for (int v : frontier) {
            degree[static_cast<size_t>(v)] = 0;
            for (int w : g.neighbors(v))
                if (degree[static_cast<size_t>(w)] > 0 && --degree[static_cast<size_t>(w)] == 1)
                    next.push_back(w);
        }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

inline std::string free_certificate(const Graph& g) {
    auto c = centers(g);
    if (c.size() == 1) return rooted_certificate(g, c[0], -1);
    std::string a = rooted_certificate(g, c[0], c[1]);
    std::string b = rooted_certificate(g, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

}  // namespace detail

/// All unlabeled free trees on exactly k vertices.
inline std::vector<Graph> all_free_trees(int k) {
    std::vector<Graph> out;
    if (k < 1) return out;
    if (k == 1) {
        out.emplace_back(1);
        return out;
    }
    std::map<std::string, bool> seen;
    std::vector<int> parent(static_cast<size_t>(k), 0);  // parent[i] < i for i >= 1
    while (true) {
        Graph g(k);
        for (int i = 1; i < k; ++i) g.add_edge(i, parent[static_cast<size_t>(i)]);
        std::string cert = detail::free_certificate(g);
        if (!seen.count(cert)) {
            seen[cert] = true;
            out.push_back(std::move(g));
        }
        int i = k - 1;
        while (i >= 1 && parent[static_cast<size_t>(i)] == i - 1) parent[static_cast<size_t>(i--)] = 0;
        if (i == 0) break;
        ++parent[static_cast<size_t>(i)];
    }
    return out;
}

}  // namespace trees

#endif
