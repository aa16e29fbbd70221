#include "sumcol/homomorphism.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sumcol/exact.hpp"

namespace sumcol {

HomMap::HomMap(const Graph& g, const Graph& h, std::vector<int> map) : map_(std::move(map)) {
    if (map_.size() != static_cast<size_t>(g.vertex_count()))
        throw std::invalid_argument("HomMap: map size mismatch");
    for (int t : map_)
        if (t < 0 || t >= h.vertex_count())
            throw std::invalid_argument("HomMap: image vertex out of range");
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && !h.adjacent(map_[static_cast<size_t>(u)], map_[static_cast<size_t>(v)]))
                throw std::invalid_argument("HomMap: edge not preserved");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Ticker {
    const Budget& budget;
    SearchStats& stats;
    Clock::time_point start = Clock::now();
    bool exhausted = false;

    bool tick() {
        if (exhausted) return false;
        ++stats.nodes;
        if (budget.max_nodes && stats.nodes > *budget.max_nodes) exhausted = true;
        if (budget.max_seconds && (stats.nodes & 1023) == 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > *budget.max_seconds)
            exhausted = true;
        return !exhausted;
    }
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

struct Masks {
    int words;
    std::vector<std::uint64_t> bits;  // one row of `words` words per domain

    Masks(int count, int words_per_row) : words(words_per_row) {
        bits.assign(static_cast<size_t>(count) * static_cast<size_t>(words), 0);
    }
    std::uint64_t* row(int i) { return bits.data() + static_cast<size_t>(i) * static_cast<size_t>(words); }
    const std::uint64_t* row(int i) const {
        return bits.data() + static_cast<size_t>(i) * static_cast<size_t>(words);
    }
};

int mask_popcount(const std::uint64_t* m, int words) {
    int s = 0;
    for (int w = 0; w < words; ++w) s += __builtin_popcountll(m[w]);
    return s;
}

bool mask_empty(const std::uint64_t* m, int words) {
    for (int w = 0; w < words; ++w)
        if (m[w]) return false;
    return true;
}

bool mask_test(const std::uint64_t* m, int v) {
    return (m[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
}

void mask_clear(std::uint64_t* m, int v) {
    m[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
}

// Homomorphism search: forward-checking only, descending-degree variable order.
struct HomSearch {
    const Graph& g;
    const Graph& h;
    Ticker& ticker;
    std::vector<int> order;
    std::vector<int> assignment;
    int hw;

    HomSearch(const Graph& gg, const Graph& hh, Ticker& t)
        : g(gg), h(hh), ticker(t), order(solver_vertex_order(gg)),
          assignment(static_cast<size_t>(gg.vertex_count()), -1), hw(hh.words_per_row()) {}

    bool run(size_t i, Masks& domains) {
        if (!ticker.tick()) return false;
        if (i == order.size()) return true;
        int v = order[i];
        for (int t = 0; t < h.vertex_count(); ++t) {
            if (!mask_test(domains.row(v), t)) continue;
            Masks next(domains);
            bool wipeout = false;
            for (int w : g.neighbors(v)) {
                if (assignment[static_cast<size_t>(w)] != -1) continue;
                const std::uint64_t* trow = h.adjacency_row(t);
                std::uint64_t* drow = next.row(w);
                for (int k = 0; k < hw; ++k) drow[k] &= trow[k];
                if (mask_empty(drow, hw)) { wipeout = true; break; }
            }
            if (wipeout) continue;
            assignment[static_cast<size_t>(v)] = t;
            if (run(i + 1, next)) return true;
            assignment[static_cast<size_t>(v)] = -1;
            if (ticker.exhausted) return false;
        }
        return false;
    }
};

// Equitable refinement: repeatedly split color classes by the multiset of
// neighbor colors until stable. Orbits of Aut(h) refine the result.
std::vector<int> equitable_refinement(const Graph& h) {
    int n = h.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> key;
            key.push_back(color[static_cast<size_t>(v)]);
            std::vector<int> nc;
            for (int w : h.neighbors(v)) nc.push_back(color[static_cast<size_t>(w)]);
            std::sort(nc.begin(), nc.end());
            key.insert(key.end(), nc.begin(), nc.end());
            keyed[static_cast<size_t>(v)] = {std::move(key), v};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [key, v] : keyed)
            ids.emplace(key, 0);
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        std::vector<int> refined(static_cast<size_t>(n));
        for (const auto& [key, v] : keyed) refined[static_cast<size_t>(v)] = ids[key];
        if (refined == color) return color;
        color = std::move(refined);
    }
}

// Backtracking search for a single automorphism with sigma(root) = target.
// Domains preserve both edges and non-edges, so any completed map is an
// automorphism. Returns the map, or nullopt after an exhaustive refutation.
struct AutoSearch {
    const Graph& h;
    const std::vector<int>& refined;
    Ticker& ticker;
    int n, words;
    std::vector<int> assignment;

    AutoSearch(const Graph& hh, const std::vector<int>& colors, Ticker& t)
        : h(hh), refined(colors), ticker(t), n(hh.vertex_count()), words(hh.words_per_row()),
          assignment(static_cast<size_t>(hh.vertex_count()), -1) {}

    std::optional<std::vector<int>> find(int root, int target) {
        assignment.assign(static_cast<size_t>(n), -1);
        Masks domains(n, words);
        for (int v = 0; v < n; ++v)
            for (int t = 0; t < n; ++t)
                if (refined[static_cast<size_t>(v)] == refined[static_cast<size_t>(t)])
                    domains.row(v)[static_cast<size_t>(t) >> 6] |= std::uint64_t(1) << (t & 63);
        if (!mask_test(domains.row(root), target)) return std::nullopt;
        for (int t = 0; t < n; ++t)
            if (t != target) mask_clear(domains.row(root), t);
        if (!propagate_and_search(0, domains)) return std::nullopt;
        return assignment;
    }

    // Most-constrained-variable selection keeps refutations shallow; ties go
    // to the lowest vertex index so runs are reproducible.
    int pick_unassigned(const Masks& domains) const {
        int best = -1, best_size = 0;
        for (int v = 0; v < n; ++v) {
            if (assignment[static_cast<size_t>(v)] != -1) continue;
            int size = mask_popcount(domains.row(v), words);
            if (best == -1 || size < best_size) {
                best = v;
                best_size = size;
            }
        }
        return best;
    }

    bool propagate_and_search(int depth, Masks& domains) {
        if (!ticker.tick()) return false;
        if (depth == n) return true;
        int v = pick_unassigned(domains);
        for (int t = 0; t < n; ++t) {
            if (!mask_test(domains.row(v), t)) continue;
            Masks next(domains);
            bool wipeout = false;
            for (int w = 0; w < n && !wipeout; ++w) {
                if (w == v || assignment[static_cast<size_t>(w)] != -1) continue;
                std::uint64_t* drow = next.row(w);
                mask_clear(drow, t);  // injectivity
                const std::uint64_t* trow = h.adjacency_row(t);
                if (h.adjacent(v, w)) {
                    for (int k = 0; k < words; ++k) drow[k] &= trow[k];
                } else {
                    for (int k = 0; k < words; ++k) drow[k] &= ~trow[k];
                }
                if (mask_empty(drow, words)) wipeout = true;
            }
            if (wipeout) continue;
            assignment[static_cast<size_t>(v)] = t;
            if (propagate_and_search(depth + 1, next)) return true;
            assignment[static_cast<size_t>(v)] = -1;
            if (ticker.exhausted) return false;
        }
        return false;
    }
};

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void merge(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

HomSearchResult find_homomorphism(const Graph& g, const Graph& h, const Budget& budget) {
    SearchStats stats;
    Ticker ticker{budget, stats};
    if (g.vertex_count() == 0) {
        stats.seconds = ticker.elapsed();
        return HomSearchResult{HomStatus::Found, HomMap(g, h, {}), stats};
    }
    if (h.vertex_count() == 0) {
        stats.seconds = ticker.elapsed();
        return HomSearchResult{HomStatus::NoneExists, std::nullopt, stats};
    }
    HomSearch search(g, h, ticker);
    Masks domains(g.vertex_count(), h.words_per_row());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int t = 0; t < h.vertex_count(); ++t)
            domains.row(v)[static_cast<size_t>(t) >> 6] |= std::uint64_t(1) << (t & 63);
    bool found = search.run(0, domains);
    stats.seconds = ticker.elapsed();
    if (found)
        return HomSearchResult{HomStatus::Found, HomMap(g, h, search.assignment), stats};
    if (ticker.exhausted) return HomSearchResult{HomStatus::Unknown, std::nullopt, stats};
    return HomSearchResult{HomStatus::NoneExists, std::nullopt, stats};
}

std::vector<std::vector<int>> automorphism_orbits(const Graph& h, const Budget& budget) {
    int n = h.vertex_count();
    SearchStats stats;
    Ticker ticker{budget, stats};
    std::vector<int> refined = equitable_refinement(h);
    Dsu dsu(n);
    AutoSearch search(h, refined, ticker);
    for (int r = 0; r < n; ++r) {
        for (int u = r + 1; u < n; ++u) {
            if (refined[static_cast<size_t>(r)] != refined[static_cast<size_t>(u)]) continue;
            if (dsu.find(r) == dsu.find(u)) continue;
            auto sigma = search.find(r, u);
            if (ticker.exhausted)
                throw BudgetExceeded("automorphism_orbits: search budget exhausted");
            if (sigma) {
                for (int x = 0; x < n; ++x) dsu.merge(x, (*sigma)[static_cast<size_t>(x)]);
            }
        }
    }
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[dsu.find(v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    orbits.reserve(cells.size());
    for (auto& [root, members] : cells) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

bool is_vertex_transitive(const Graph& h, const Budget& budget) {
    int n = h.vertex_count();
    if (n <= 1) return true;
    int d = h.degree(0);
    for (int v = 1; v < n; ++v)
        if (h.degree(v) != d) return false;
    return automorphism_orbits(h, budget).size() == 1;
}

ObstructionVerdict obstruction_test(const Graph& g, const Graph& h,
                                    const Rational& sigma_g_lower,
                                    const Rational& sigma_h_upper, const Budget& budget) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("obstruction_test: graphs must be nonempty");
    Rational ratio_g = sigma_g_lower / Rational(g.vertex_count());
    Rational ratio_h = sigma_h_upper / Rational(h.vertex_count());

    std::optional<int> orbit_count;
    bool transitive = false;
    bool regular = true;
    for (int v = 1; v < h.vertex_count(); ++v)
        if (h.degree(v) != h.degree(0)) { regular = false; break; }
    if (regular) {
        try {
            int orbits = static_cast<int>(automorphism_orbits(h, budget).size());
            orbit_count = orbits;
            transitive = orbits == 1;
        } catch (const BudgetExceeded&) {
            return ObstructionVerdict{ObstructionOutcome::NotApplicable, ratio_g, ratio_h,
                                      false, std::nullopt,
                                      "vertex transitivity of H could not be verified within budget"};
        }
    }
    if (!transitive) {
        std::string why = regular ? "H is not vertex-transitive (" +
                                        std::to_string(*orbit_count) + " orbits)"
                                  : "H is not vertex-transitive (irregular degree sequence)";
        return ObstructionVerdict{ObstructionOutcome::NotApplicable, ratio_g, ratio_h, false,
                                  orbit_count, std::move(why)};
    }
    if (ratio_g > ratio_h)
        return ObstructionVerdict{ObstructionOutcome::NoHomomorphismProven, ratio_g, ratio_h,
                                  true, orbit_count,
                                  "sigma(G)/|G| = " + ratio_g.to_string() + " > " +
                                      ratio_h.to_string() + " = sigma(H)/|H|"};
    return ObstructionVerdict{ObstructionOutcome::Inconclusive, ratio_g, ratio_h, true,
                              orbit_count,
                              "sigma(G)/|G| = " + ratio_g.to_string() + " <= " +
                                  ratio_h.to_string() + " = sigma(H)/|H|"};
}

}  // namespace sumcol
