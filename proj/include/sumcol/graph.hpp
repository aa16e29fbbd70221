#ifndef SUMCOL_GRAPH_HPP
#define SUMCOL_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sumcol {

/// Subset of the vertices 0..n-1 of a host graph, with constant-time
/// membership and fast iteration over members.
class VertexSet {
public:
    VertexSet() : universe_(0) {}
    explicit VertexSet(int universe);

    static VertexSet full(int universe);

    int universe() const { return universe_; }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(int v) const {
        check_range(v);
        return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v);
    void erase(int v);

    /// Members in ascending order.
    std::vector<int> members() const;

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

private:
    void check_range(int v) const;

    int universe_;
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic comparison of the ascending member sequences:
/// {0,2} < {0,3} < {1,2}. Returns <0, 0 or >0.
int lex_compare(const VertexSet& a, const VertexSet& b);

/// Finite simple undirected graph. Vertices are the dense indices 0..n-1;
/// adjacency is symmetric and irreflexive with constant-time edge queries.
/// Generator labels (e.g. the n-subset a Kneser vertex denotes) are optional
/// metadata and are never consulted by solvers. Graphs are treated as
/// immutable once built; construction is single-threaded.
class Graph {
public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(int n, std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    long long edge_count() const { return edges_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row(u)[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    /// Adds the undirected edge uv. Loops are rejected; re-adding an existing
    /// edge is a no-op (set semantics).
    void add_edge(int u, int v);

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(neighbors_[static_cast<size_t>(v)].size());
    }
    /// Neighbors in ascending order.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return neighbors_[static_cast<size_t>(v)];
    }

    /// Packed adjacency row (words_per_row() 64-bit words), for solver inner loops.
    const std::uint64_t* adjacency_row(int v) const {
        check_vertex(v);
        return row(v);
    }
    int words_per_row() const { return words_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const {
        check_vertex(v);
        return labels_[static_cast<size_t>(v)];
    }

    /// Structural equality: same vertex count and vertex-by-vertex adjacency.
    /// Labels are metadata and do not participate.
    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void check_vertex(int v) const;
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<size_t>(v) * static_cast<size_t>(words_);
    }
    std::uint64_t* row(int v) {
        return bits_.data() + static_cast<size_t>(v) * static_cast<size_t>(words_);
    }

    int n_;
    int words_;
    long long edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::string> labels_;
};

/// Complement graph: flips all non-loop adjacencies. Labels are carried over.
Graph complement(const Graph& g);

/// Induced subgraph with the vertex index maps between host and result.
/// old_to_new[v] is -1 for removed vertices; new indices preserve the
/// ascending order of the kept old indices.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

/// Induced subgraph on V(g) minus s.
InducedSubgraph induced_delete(const Graph& g, const VertexSet& s);

/// Induced subgraph on the vertices of keep.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_connected(const Graph& g);

}  // namespace sumcol

#endif
