#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

// Enumerates every proper coloring with colors in 1..max_color, invoking
// visit(colors) at each leaf. Improper partial assignments are abandoned
// (that is filtering, not optimization).
template <typename Visit>
void enumerate_proper(const Graph& g, int max_color, std::vector<int>& colors, int v,
                      Visit&& visit) {
    int n = g.vertex_count();
    if (v == n) {
        visit(colors);
        return;
    }
    for (int c = 1; c <= max_color; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v)) {
            if (w < v && colors[static_cast<size_t>(w)] == c) { ok = false; break; }
        }
        if (!ok) continue;
        colors[static_cast<size_t>(v)] = c;
        enumerate_proper(g, max_color, colors, v + 1, visit);
    }
    colors[static_cast<size_t>(v)] = 0;
}

}  // namespace

std::pair<long long, int> chromatic_sum_and_strength(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {0, 0};
    long long best_sum = -1;
    int best_colors = -1;
    std::vector<int> colors(static_cast<size_t>(n), 0);
    enumerate_proper(g, n, colors, 0, [&](const std::vector<int>& c) {
        long long sum = std::accumulate(c.begin(), c.end(), 0LL);
        int used = *std::max_element(c.begin(), c.end());
        if (best_sum == -1 || sum < best_sum || (sum == best_sum && used < best_colors)) {
            best_sum = sum;
            best_colors = used;
        }
    });
    return {best_sum, best_colors};
}

long long chromatic_sum(const Graph& g) { return chromatic_sum_and_strength(g).first; }

std::vector<int> lex_least_optimal_coloring(const Graph& g, long long sigma, int max_colors,
                                            const std::vector<int>& order) {
    int n = g.vertex_count();
    std::vector<int> colors(static_cast<size_t>(n), 0);
    std::vector<int> best;
    std::vector<int> best_key;
    enumerate_proper(g, max_colors, colors, 0, [&](const std::vector<int>& c) {
        if (std::accumulate(c.begin(), c.end(), 0LL) != sigma) return;
        std::vector<int> key;
        key.reserve(static_cast<size_t>(n));
        for (int v : order) key.push_back(c[static_cast<size_t>(v)]);
        if (best.empty() || key < best_key) {
            best = c;
            best_key = key;
        }
    });
    return best;
}

int chromatic_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        std::vector<int> colors(static_cast<size_t>(n), 0);
        enumerate_proper(g, k, colors, 0, [&](const std::vector<int>&) { found = true; });
        if (found) return k;
    }
    throw std::logic_error("oracle chromatic_number: unreachable");
}

namespace {

bool mask_independent(const Graph& g, unsigned mask) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (!(mask & (1u << u))) continue;
        for (int v = u + 1; v < n; ++v)
            if ((mask & (1u << v)) && g.adjacent(u, v)) return false;
    }
    return true;
}

std::vector<int> mask_members(unsigned mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) out.push_back(v);
    return out;
}

}  // namespace

int independence_number(const Graph& g) {
    int n = g.vertex_count();
    if (n > 25) throw std::invalid_argument("oracle independence_number: graph too large");
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (mask_independent(g, mask)) best = std::max(best, __builtin_popcount(mask));
    return best;
}

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return independence_number(sumcol::complement(g));
}

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    if (n > 25) throw std::invalid_argument("oracle maximal_independent_sets: graph too large");
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!mask_independent(g, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (mask & (1u << v)) continue;
            if (mask_independent(g, mask | (1u << v))) maximal = false;
        }
        if (maximal) out.push_back(mask_members(mask, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> lex_least_maximum_independent_set(const Graph& g) {
    int n = g.vertex_count();
    int alpha = independence_number(g);
    std::vector<int> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != alpha || !mask_independent(g, mask)) continue;
        auto members = mask_members(mask, n);
        if (best.empty() || members < best) best = members;
    }
    return best;
}

bool homomorphism_exists(const Graph& g, const Graph& h) {
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    if (ng == 0) return true;
    if (nh == 0) return false;
    std::vector<int> map(static_cast<size_t>(ng), 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < ng && ok; ++u)
            for (int v : g.neighbors(u)) {
                if (v > u) continue;
                if (!h.adjacent(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)])) {
                    ok = false;
                    break;
                }
            }
        if (ok) return true;
        int i = 0;
        while (i < ng && map[static_cast<size_t>(i)] == nh - 1) map[static_cast<size_t>(i++)] = 0;
        if (i == ng) return false;
        ++map[static_cast<size_t>(i)];
    }
}

bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a.adjacent(u, v) !=
                    b.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::vector<int>> automorphism_orbits(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.adjacent(u, v) !=
                    g.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                    ok = false;
                    break;
                }
        if (ok)
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(perm[static_cast<size_t>(v)]);
                if (a != b) parent[static_cast<size_t>(a)] = b;
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> cells;
    for (int root = 0; root < n; ++root) {
        if (find(root) != root) continue;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (find(v) == root) cell.push_back(v);
        cells.push_back(std::move(cell));
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cells;
}

namespace {

// Solves rows x = rhs for a square system; nullopt when singular.
std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> rows,
                                                 std::vector<Rational> rhs) {
    size_t n = rows.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(rows[col], rows[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        Rational inv = Rational(1) / rows[col][col];
        for (auto& cell : rows[col]) cell *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col];
            for (size_t c = 0; c < n; ++c) rows[r][c] -= f * rows[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

}  // namespace

std::optional<Rational> lp_minimum_by_vertex_enumeration(const LinearProgram& lp) {
    int nv = lp.num_vars();
    int m = lp.num_constraints();
    int total = m + nv;  // constraint rows then the nonnegativity rows
    if (nv > 8 || total > 22)
        throw std::invalid_argument("oracle lp vertex enumeration: program too large");

    auto row_of = [&](int idx) {
        std::vector<Rational> row(static_cast<size_t>(nv), Rational(0));
        if (idx < m) {
            for (int j = 0; j < nv; ++j) row[static_cast<size_t>(j)] = lp.constraints[static_cast<size_t>(idx)][static_cast<size_t>(j)];
        } else {
            row[static_cast<size_t>(idx - m)] = Rational(1);
        }
        return row;
    };
    auto rhs_of = [&](int idx) { return idx < m ? lp.rhs[static_cast<size_t>(idx)] : Rational(0); };

    std::optional<Rational> best;
    std::vector<int> choose(static_cast<size_t>(nv));
    std::iota(choose.begin(), choose.end(), 0);
    while (true) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (int idx : choose) {
            rows.push_back(row_of(idx));
            rhs.push_back(rhs_of(idx));
        }
        if (auto x = gauss_solve(std::move(rows), std::move(rhs))) {
            bool feasible = true;
            for (int j = 0; j < nv && feasible; ++j)
                if ((*x)[static_cast<size_t>(j)] < Rational(0)) feasible = false;
            for (int i = 0; i < m && feasible; ++i) {
                Rational lhs(0);
                for (int j = 0; j < nv; ++j)
                    lhs += lp.constraints[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                           (*x)[static_cast<size_t>(j)];
                if (lhs < lp.rhs[static_cast<size_t>(i)]) feasible = false;
            }
            if (feasible) {
                Rational obj(0);
                for (int j = 0; j < nv; ++j)
                    obj += lp.objective[static_cast<size_t>(j)] * (*x)[static_cast<size_t>(j)];
                if (!best || obj < *best) best = obj;
            }
        }
        // next nv-combination of {0..total-1}
        int i = nv - 1;
        while (i >= 0 && choose[static_cast<size_t>(i)] == total - (nv - i)) --i;
        if (i < 0) break;
        ++choose[static_cast<size_t>(i)];
        for (int j = i + 1; j < nv; ++j)
            choose[static_cast<size_t>(j)] = choose[static_cast<size_t>(j - 1)] + 1;
    }
    return best;
}

}  // namespace oracle
