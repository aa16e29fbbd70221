#include "sumcol/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace sumcol {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetTracker {
    const Budget& budget;
    SearchStats& stats;
    Clock::time_point start = Clock::now();
    bool exhausted = false;

    // Returns false once the budget is spent; callers unwind immediately.
    bool tick() {
        if (exhausted) return false;
        ++stats.nodes;
        if (budget.max_nodes && stats.nodes > *budget.max_nodes) exhausted = true;
        if (budget.max_seconds && (stats.nodes & 1023) == 0 &&
            elapsed() > *budget.max_seconds)
            exhausted = true;
        return !exhausted;
    }
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

// Greedy clique partition over the solver order. Within a branch-and-bound
// node, the uncolored members of each clique need pairwise distinct colors,
// so they contribute at least t(t+1)/2 to any completion; summing over the
// partition is an admissible lower bound that never changes returned values.
std::vector<int> greedy_clique_partition(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<int> clique_of(static_cast<size_t>(n), -1);
    int next_id = 0;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<size_t>(i)];
        if (clique_of[static_cast<size_t>(v)] != -1) continue;
        std::vector<int> clique{v};
        clique_of[static_cast<size_t>(v)] = next_id;
        for (int j = i + 1; j < n; ++j) {
            int w = order[static_cast<size_t>(j)];
            if (clique_of[static_cast<size_t>(w)] != -1) continue;
            bool all = true;
            for (int u : clique) {
                if (!g.adjacent(u, w)) { all = false; break; }
            }
            if (all) {
                clique.push_back(w);
                clique_of[static_cast<size_t>(w)] = next_id;
            }
        }
        ++next_id;
    }
    return clique_of;
}

// Shared state for the chromatic sum search.
struct SumSearch {
    const Graph& g;
    std::vector<int> order;
    std::vector<int> cap;                   // deg(v)+1
    std::vector<std::vector<int>> conflict;  // conflict[v][c] = colored neighbors of v with color c
    std::vector<int> colors;                // 0 = uncolored
    std::vector<int> clique_of;
    std::vector<int> clique_left;           // uncolored vertices per clique
    long long lower_bound = 0;              // sum of t(t+1)/2 over cliques
    BudgetTracker& tracker;

    SumSearch(const Graph& graph, BudgetTracker& t) : g(graph), tracker(t) {
        int n = g.vertex_count();
        order = solver_vertex_order(g);
        cap.resize(static_cast<size_t>(n));
        conflict.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            cap[static_cast<size_t>(v)] = g.degree(v) + 1;
            conflict[static_cast<size_t>(v)].assign(static_cast<size_t>(cap[static_cast<size_t>(v)]) + 1, 0);
        }
        colors.assign(static_cast<size_t>(n), 0);
        clique_of = greedy_clique_partition(g, order);
        int num_cliques = n == 0 ? 0 : *std::max_element(clique_of.begin(), clique_of.end()) + 1;
        clique_left.assign(static_cast<size_t>(num_cliques), 0);
        for (int v = 0; v < n; ++v) ++clique_left[static_cast<size_t>(clique_of[static_cast<size_t>(v)])];
        for (int t : clique_left) lower_bound += static_cast<long long>(t) * (t + 1) / 2;
    }

    void assign(int v, int c) {
        colors[static_cast<size_t>(v)] = c;
        for (int w : g.neighbors(v)) {
            if (colors[static_cast<size_t>(w)] == 0 && c <= cap[static_cast<size_t>(w)])
                ++conflict[static_cast<size_t>(w)][static_cast<size_t>(c)];
        }
        int& t = clique_left[static_cast<size_t>(clique_of[static_cast<size_t>(v)])];
        lower_bound -= t;
        --t;
    }

    void unassign(int v, int c) {
        int& t = clique_left[static_cast<size_t>(clique_of[static_cast<size_t>(v)])];
        ++t;
        lower_bound += t;
        colors[static_cast<size_t>(v)] = 0;
        for (int w : g.neighbors(v)) {
            if (colors[static_cast<size_t>(w)] == 0 && c <= cap[static_cast<size_t>(w)])
                --conflict[static_cast<size_t>(w)][static_cast<size_t>(c)];
        }
    }

    bool color_free(int v, int c) const {
        return conflict[static_cast<size_t>(v)][static_cast<size_t>(c)] == 0;
    }

    long long clique_delta(int v) const {  // lower bound decrease when v gets colored
        return clique_left[static_cast<size_t>(clique_of[static_cast<size_t>(v)])];
    }

    // Greedy coloring along the solver order; also the incumbent initializer.
    std::vector<int> greedy_colors() const {
        int n = g.vertex_count();
        std::vector<int> col(static_cast<size_t>(n), 0);
        for (int v : order) {
            int c = 1;
            while (true) {
                bool clash = false;
                for (int w : g.neighbors(v)) {
                    if (col[static_cast<size_t>(w)] == c) { clash = true; break; }
                }
                if (!clash) break;
                ++c;
            }
            col[static_cast<size_t>(v)] = c;
        }
        return col;
    }

    long long best_sum = 0;
    std::vector<int> incumbent;

    // Pass A: establish sigma. Strict improvement keeps the search tree small.
    void search_sigma(size_t i, long long partial) {
        if (!tracker.tick()) return;
        if (i == order.size()) {
            best_sum = partial;
            incumbent = colors;
            return;
        }
        if (partial + lower_bound >= best_sum) return;
        int v = order[i];
        long long child_base = lower_bound - clique_delta(v);
        for (int c = 1; c <= cap[static_cast<size_t>(v)]; ++c) {
            if (!color_free(v, c)) continue;
            if (partial + c + child_base >= best_sum) break;
            assign(v, c);
            search_sigma(i + 1, partial + c);
            unassign(v, c);
            if (tracker.exhausted) return;
        }
    }

    // Pass B: lexicographically first coloring with sum == sigma and at most
    // max_colors colors. Returns true when found (colors[] holds it).
    bool search_witness(size_t i, long long partial, long long sigma, int max_colors) {
        if (!tracker.tick()) return false;
        if (i == order.size()) return partial == sigma;
        if (partial + lower_bound > sigma) return false;
        int v = order[i];
        long long child_base = lower_bound - clique_delta(v);
        int limit = std::min(cap[static_cast<size_t>(v)], max_colors);
        for (int c = 1; c <= limit; ++c) {
            if (!color_free(v, c)) continue;
            if (partial + c + child_base > sigma) break;
            assign(v, c);
            if (search_witness(i + 1, partial + c, sigma, max_colors)) return true;
            unassign(v, c);
            if (tracker.exhausted) return false;
        }
        return false;
    }
};

// k-colorability backtracking with forward checking and the max-used+1
// symmetry break (valid here because colors are interchangeable, unlike in
// the weighted sum search).
struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<int> order;
    std::vector<std::vector<int>> conflict;
    std::vector<int> colors;
    BudgetTracker& tracker;

    KColorSearch(const Graph& graph, int num_colors, BudgetTracker& t)
        : g(graph), k(num_colors), tracker(t) {
        int n = g.vertex_count();
        order = solver_vertex_order(g);
        conflict.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(k) + 1, 0));
        colors.assign(static_cast<size_t>(n), 0);
    }

    bool feasible_color_exists(int v) const {
        for (int c = 1; c <= k; ++c)
            if (conflict[static_cast<size_t>(v)][static_cast<size_t>(c)] == 0) return true;
        return false;
    }

    bool run(size_t i, int max_used) {
        if (!tracker.tick()) return false;
        if (i == order.size()) return true;
        int v = order[i];
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (conflict[static_cast<size_t>(v)][static_cast<size_t>(c)] != 0) continue;
            colors[static_cast<size_t>(v)] = c;
            bool wipeout = false;
            for (int w : g.neighbors(v)) {
                if (colors[static_cast<size_t>(w)] != 0) continue;
                ++conflict[static_cast<size_t>(w)][static_cast<size_t>(c)];
                if (!feasible_color_exists(w)) wipeout = true;
            }
            if (!wipeout && run(i + 1, std::max(max_used, c))) return true;
            for (int w : g.neighbors(v)) {
                if (colors[static_cast<size_t>(w)] != 0) continue;
                --conflict[static_cast<size_t>(w)][static_cast<size_t>(c)];
            }
            colors[static_cast<size_t>(v)] = 0;
            if (tracker.exhausted) return false;
        }
        return false;
    }
};

// Branch and bound over bitset candidate masks; include-first on the lowest
// candidate makes the first maximum set found the lexicographically least.
struct MisSearch {
    const Graph& g;
    int n;
    int words;
    std::vector<std::uint64_t> scratch;
    std::vector<int> best;
    std::vector<int> current;

    explicit MisSearch(const Graph& graph)
        : g(graph), n(graph.vertex_count()), words(graph.words_per_row()) {}

    static int lowest_bit(const std::vector<std::uint64_t>& mask, int words) {
        for (int w = 0; w < words; ++w)
            if (mask[static_cast<size_t>(w)])
                return w * 64 + __builtin_ctzll(mask[static_cast<size_t>(w)]);
        return -1;
    }

    static int popcount(const std::vector<std::uint64_t>& mask, int words) {
        int s = 0;
        for (int w = 0; w < words; ++w)
            s += __builtin_popcountll(mask[static_cast<size_t>(w)]);
        return s;
    }

    // Upper bound: independent sets pick at most one vertex per clique of a
    // greedy clique partition of the candidates.
    int clique_cover_bound(std::vector<std::uint64_t> remaining) const {
        int cliques = 0;
        while (true) {
            int v = lowest_bit(remaining, words);
            if (v < 0) break;
            ++cliques;
            // grow a clique: vertices adjacent to all chosen so far
            std::vector<std::uint64_t> common(remaining);
            common[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
            const std::uint64_t* row = g.adjacency_row(v);
            for (int w = 0; w < words; ++w) common[static_cast<size_t>(w)] &= row[w];
            remaining[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
            while (true) {
                int u = lowest_bit(common, words);
                if (u < 0) break;
                remaining[static_cast<size_t>(u) >> 6] &= ~(std::uint64_t(1) << (u & 63));
                common[static_cast<size_t>(u) >> 6] &= ~(std::uint64_t(1) << (u & 63));
                const std::uint64_t* urow = g.adjacency_row(u);
                for (int w = 0; w < words; ++w) common[static_cast<size_t>(w)] &= urow[w];
            }
        }
        return cliques;
    }

    void run(std::vector<std::uint64_t>& candidates) {
        int remaining = popcount(candidates, words);
        if (remaining == 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        int cur = static_cast<int>(current.size());
        if (cur + remaining <= static_cast<int>(best.size())) return;
        if (cur + clique_cover_bound(candidates) <= static_cast<int>(best.size())) return;

        int v = lowest_bit(candidates, words);
        // include v
        std::vector<std::uint64_t> next(candidates);
        next[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
        const std::uint64_t* row = g.adjacency_row(v);
        for (int w = 0; w < words; ++w) next[static_cast<size_t>(w)] &= ~row[w];
        current.push_back(v);
        run(next);
        current.pop_back();
        // exclude v
        candidates[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
        run(candidates);
        candidates[static_cast<size_t>(v) >> 6] |= std::uint64_t(1) << (v & 63);
    }
};

}  // namespace

std::vector<int> solver_vertex_order(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

SumResult chromatic_sum_exact(const Graph& g, const Budget& budget) {
    SearchStats stats;
    BudgetTracker tracker{budget, stats};
    SumSearch search(g, tracker);

    if (g.vertex_count() == 0) {
        stats.seconds = tracker.elapsed();
        return SumResult{0, Coloring(g, {}), 0, true, stats};
    }

    search.incumbent = search.greedy_colors();
    search.best_sum =
        std::accumulate(search.incumbent.begin(), search.incumbent.end(), 0LL);
    search.search_sigma(0, 0);

    long long sigma = search.best_sum;
    if (tracker.exhausted) {
        stats.seconds = tracker.elapsed();
        Coloring witness(g, search.incumbent);
        return SumResult{sigma, witness, witness.num_colors(), false, stats};
    }

    // Pass B: smallest color count attaining sigma, then the lexicographically
    // first such coloring. Start from the largest clique the partition found
    // (a valid chi lower bound, hence a strength lower bound).
    int k_start = 1;
    {
        std::vector<int> sizes(search.clique_left.size(), 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            ++sizes[static_cast<size_t>(search.clique_of[static_cast<size_t>(v)])];
        for (int s : sizes) k_start = std::max(k_start, s);
    }
    for (int k = k_start; k <= g.vertex_count(); ++k) {
        if (search.search_witness(0, 0, sigma, k)) {
            stats.seconds = tracker.elapsed();
            Coloring witness(g, search.colors);
            return SumResult{sigma, witness, k, true, stats};
        }
        if (tracker.exhausted) break;
    }

    stats.seconds = tracker.elapsed();
    Coloring witness(g, search.incumbent);
    return SumResult{sigma, witness, witness.num_colors(), false, stats};
}

int strength(const Graph& g, const Budget& budget) {
    SumResult r = chromatic_sum_exact(g, budget);
    if (!r.optimal) throw BudgetExceeded("strength: chromatic sum search exceeded its budget");
    return r.strength;
}

ChromaticResult chromatic_number(const Graph& g, const Budget& budget) {
    SearchStats stats;
    BudgetTracker tracker{budget, stats};
    if (g.vertex_count() == 0) {
        stats.seconds = tracker.elapsed();
        return ChromaticResult{0, true, std::nullopt, stats};
    }
    int lb = clique_number(g);
    for (int k = lb; k <= g.vertex_count(); ++k) {
        KColorSearch search(g, k, tracker);
        if (search.run(0, 0)) {
            stats.seconds = tracker.elapsed();
            return ChromaticResult{k, true, Coloring(g, search.colors), stats};
        }
        if (tracker.exhausted) {
            stats.seconds = tracker.elapsed();
            return ChromaticResult{k, false, std::nullopt, stats};
        }
    }
    throw std::logic_error("chromatic_number: no coloring found with n colors");
}

VertexSet max_independent_set(const Graph& g) {
    int n = g.vertex_count();
    VertexSet out(n);
    if (n == 0) return out;
    MisSearch search(g);
    std::vector<std::uint64_t> candidates(static_cast<size_t>(g.words_per_row()), 0);
    for (int v = 0; v < n; ++v)
        candidates[static_cast<size_t>(v) >> 6] |= std::uint64_t(1) << (v & 63);
    search.run(candidates);
    for (int v : search.best) out.insert(v);
    return out;
}

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return max_independent_set(complement(g)).size();
}

}  // namespace sumcol
