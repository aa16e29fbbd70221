#include "sumcol/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumcol {

VertexSet::VertexSet(int universe) : universe_(universe) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    words_.assign((static_cast<size_t>(universe) + 63) / 64, 0);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
}

void VertexSet::check_range(int v) const {
    if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
}

void VertexSet::insert(int v) {
    check_range(v);
    std::uint64_t& w = words_[static_cast<size_t>(v) >> 6];
    std::uint64_t bit = std::uint64_t(1) << (v & 63);
    if (!(w & bit)) {
        w |= bit;
        ++size_;
    }
}

void VertexSet::erase(int v) {
    check_range(v);
    std::uint64_t& w = words_[static_cast<size_t>(v) >> 6];
    std::uint64_t bit = std::uint64_t(1) << (v & 63);
    if (w & bit) {
        w &= ~bit;
        --size_;
    }
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size_));
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            int b = __builtin_ctzll(w);
            out.push_back(static_cast<int>(wi * 64) + b);
            w &= w - 1;
        }
    }
    return out;
}

int lex_compare(const VertexSet& a, const VertexSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    size_t k = std::min(ma.size(), mb.size());
    for (size_t i = 0; i < k; ++i) {
        if (ma[i] != mb[i]) return ma[i] < mb[i] ? -1 : 1;
    }
    if (ma.size() != mb.size()) return ma.size() < mb.size() ? -1 : 1;
    return 0;
}

Graph::Graph(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (!labels_.empty() && labels_.size() != static_cast<size_t>(n))
        throw std::invalid_argument("Graph: label count does not match vertex count");
    words_ = static_cast<int>((static_cast<size_t>(n) + 63) / 64);
    bits_.assign(static_cast<size_t>(n) * static_cast<size_t>(words_), 0);
    neighbors_.resize(static_cast<size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    if (adjacent(u, v)) return;
    row(u)[static_cast<size_t>(v) >> 6] |= std::uint64_t(1) << (v & 63);
    row(v)[static_cast<size_t>(u) >> 6] |= std::uint64_t(1) << (u & 63);
    auto& nu = neighbors_[static_cast<size_t>(u)];
    auto& nv = neighbors_[static_cast<size_t>(v)];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edges_;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) labels.push_back(g.label(v));
    }
    Graph c(n, std::move(labels));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.vertex_count())
        throw std::invalid_argument("induced_subgraph: vertex set universe mismatch");
    int n = g.vertex_count();
    InducedSubgraph out;
    out.old_to_new.assign(static_cast<size_t>(n), -1);
    out.new_to_old = keep.members();
    for (size_t i = 0; i < out.new_to_old.size(); ++i)
        out.old_to_new[static_cast<size_t>(out.new_to_old[i])] = static_cast<int>(i);

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(out.new_to_old.size());
        for (int v : out.new_to_old) labels.push_back(g.label(v));
    }
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), std::move(labels));
    for (size_t i = 0; i < out.new_to_old.size(); ++i)
        for (size_t j = i + 1; j < out.new_to_old.size(); ++j)
            if (g.adjacent(out.new_to_old[i], out.new_to_old[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

InducedSubgraph induced_delete(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("induced_delete: vertex set universe mismatch");
    VertexSet keep(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!s.contains(v)) keep.insert(v);
    return induced_subgraph(g, keep);
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace sumcol
