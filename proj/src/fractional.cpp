#include "sumcol/fractional.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "sumcol/exact.hpp"
#include "sumcol/homomorphism.hpp"

namespace sumcol {

namespace {

using Clock = std::chrono::steady_clock;

// Bron-Kerbosch with pivoting over the independence relation (adjacency of
// the complement), counting recursive calls against the budget.
struct MisEnumerator {
    const Graph& g;
    int n, words;
    std::vector<std::uint64_t> ind_adj;  // complement adjacency rows
    const Budget& budget;
    std::uint64_t calls = 0;
    Clock::time_point start = Clock::now();
    std::vector<VertexSet> out;
    std::vector<int> current;

    explicit MisEnumerator(const Graph& graph, const Budget& b)
        : g(graph), n(graph.vertex_count()), words(graph.words_per_row()), budget(b) {
        ind_adj.assign(static_cast<size_t>(n) * static_cast<size_t>(std::max(words, 1)), 0);
        for (int v = 0; v < n; ++v) {
            std::uint64_t* row = ind_row(v);
            const std::uint64_t* adj = g.adjacency_row(v);
            for (int w = 0; w < words; ++w) row[w] = ~adj[w];
            mask_clear(row, v);
            for (int b2 = n; b2 < words * 64; ++b2) mask_clear(row, b2);
        }
    }

    std::uint64_t* ind_row(int v) {
        return ind_adj.data() + static_cast<size_t>(v) * static_cast<size_t>(std::max(words, 1));
    }

    static void mask_clear(std::uint64_t* m, int v) {
        m[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }
    static bool mask_test(const std::uint64_t* m, int v) {
        return (m[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void tick() {
        ++calls;
        if (budget.max_nodes && calls > *budget.max_nodes)
            throw BudgetExceeded("maximal_independent_sets: enumeration budget exhausted");
        if (budget.max_seconds && (calls & 1023) == 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > *budget.max_seconds)
            throw BudgetExceeded("maximal_independent_sets: enumeration budget exhausted");
    }

    void run(std::vector<std::uint64_t> p, std::vector<std::uint64_t> x) {
        tick();
        bool p_empty = true, x_empty = true;
        for (int w = 0; w < words; ++w) {
            if (p[static_cast<size_t>(w)]) p_empty = false;
            if (x[static_cast<size_t>(w)]) x_empty = false;
        }
        if (p_empty && x_empty) {
            VertexSet s(n);
            for (int v : current) s.insert(v);
            out.push_back(std::move(s));
            return;
        }
        if (p_empty) return;
        // pivot: u in P union X maximizing |P intersect N(u)|, lowest index tie
        int pivot = -1, pivot_score = -1;
        for (int u = 0; u < n; ++u) {
            if (!mask_test(p.data(), u) && !mask_test(x.data(), u)) continue;
            int score = 0;
            const std::uint64_t* urow = ind_row(u);
            for (int w = 0; w < words; ++w)
                score += __builtin_popcountll(p[static_cast<size_t>(w)] & urow[w]);
            if (score > pivot_score) {
                pivot = u;
                pivot_score = score;
            }
        }
        const std::uint64_t* prow = ind_row(pivot);
        for (int v = 0; v < n; ++v) {
            if (!mask_test(p.data(), v) || mask_test(prow, v)) continue;
            std::vector<std::uint64_t> np(p), nx(x);
            const std::uint64_t* vrow = ind_row(v);
            for (int w = 0; w < words; ++w) {
                np[static_cast<size_t>(w)] &= vrow[w];
                nx[static_cast<size_t>(w)] &= vrow[w];
            }
            current.push_back(v);
            run(std::move(np), std::move(nx));
            current.pop_back();
            mask_clear(p.data(), v);
            x[static_cast<size_t>(v) >> 6] |= std::uint64_t(1) << (v & 63);
        }
    }
};

void verify_maximal_independent(const Graph& g, const VertexSet& s) {
    auto members = s.members();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                throw std::logic_error("maximal_independent_sets: set not independent");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v)) continue;
        bool blocked = false;
        for (int w : g.neighbors(v))
            if (s.contains(w)) { blocked = true; break; }
        if (!blocked)
            throw std::logic_error("maximal_independent_sets: set not maximal");
    }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Budget& budget) {
    int n = g.vertex_count();
    if (n == 0) return {VertexSet(0)};
    MisEnumerator enumerator(g, budget);
    std::vector<std::uint64_t> p(static_cast<size_t>(g.words_per_row()), 0);
    std::vector<std::uint64_t> x(static_cast<size_t>(g.words_per_row()), 0);
    for (int v = 0; v < n; ++v)
        p[static_cast<size_t>(v) >> 6] |= std::uint64_t(1) << (v & 63);
    enumerator.run(std::move(p), std::move(x));
    for (const auto& s : enumerator.out) verify_maximal_independent(g, s);
    std::sort(enumerator.out.begin(), enumerator.out.end(),
              [](const VertexSet& a, const VertexSet& b) { return lex_compare(a, b) < 0; });
    return enumerator.out;
}

void LinearProgram::validate() const {
    if (constraints.size() != rhs.size())
        throw std::invalid_argument("LinearProgram: row count mismatch");
    for (const auto& row : constraints)
        if (row.size() != objective.size())
            throw std::invalid_argument("LinearProgram: column count mismatch");
}

namespace {

// Dense tableau simplex. Columns: nv structural, then m surplus, then m
// artificial, then rhs. Bland's rule throughout, so no cycling.
struct Tableau {
    int m, nv, total;
    std::vector<std::vector<Rational>> t;  // m rows of total+1
    std::vector<int> basis;                // basis[i] = column basic in row i
    std::vector<Rational> red;             // reduced cost row, size total+1

    Tableau(const LinearProgram& lp)
        : m(lp.num_constraints()), nv(lp.num_vars()), total(nv + 2 * m) {
        t.assign(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(total) + 1));
        basis.resize(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            bool flip = lp.rhs[static_cast<size_t>(i)] < Rational(0);
            Rational sign = flip ? Rational(-1) : Rational(1);
            for (int j = 0; j < nv; ++j)
                t[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    sign * lp.constraints[static_cast<size_t>(i)][static_cast<size_t>(j)];
            // surplus: Ax - s = b, sign-flipped together with the row
            t[static_cast<size_t>(i)][static_cast<size_t>(nv + i)] = sign * Rational(-1);
            t[static_cast<size_t>(i)][static_cast<size_t>(nv + m + i)] = Rational(1);
            t[static_cast<size_t>(i)][static_cast<size_t>(total)] =
                sign * lp.rhs[static_cast<size_t>(i)];
            basis[static_cast<size_t>(i)] = nv + m + i;
        }
    }

    void pivot(int row, int col) {
        Rational inv = Rational(1) / t[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& cell : t[static_cast<size_t>(row)]) cell *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            Rational factor = t[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (factor.is_zero()) continue;
            for (int j = 0; j <= total; ++j)
                t[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    factor * t[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        Rational rfactor = red[static_cast<size_t>(col)];
        if (!rfactor.is_zero())
            for (int j = 0; j <= total; ++j)
                red[static_cast<size_t>(j)] -=
                    rfactor * t[static_cast<size_t>(row)][static_cast<size_t>(j)];
        basis[static_cast<size_t>(row)] = col;
    }

    // cost[j] for all columns; recomputes the reduced-cost row from the basis.
    void set_objective(const std::vector<Rational>& cost) {
        red.assign(static_cast<size_t>(total) + 1, Rational(0));
        for (int j = 0; j <= total; ++j) {
            Rational z(0);
            for (int i = 0; i < m; ++i) {
                const Rational& cb = cost[static_cast<size_t>(basis[static_cast<size_t>(i)])];
                if (!cb.is_zero())
                    z += cb * t[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
            Rational cj = j < total ? cost[static_cast<size_t>(j)] : Rational(0);
            red[static_cast<size_t>(j)] = cj - z;
        }
    }

    // Bland: entering = lowest-index eligible column with negative reduced
    // cost; leaving = lowest basis index among minimum-ratio rows.
    // Returns Optimal or Unbounded.
    LpStatus iterate(int max_col) {
        while (true) {
            int enter = -1;
            for (int j = 0; j < max_col; ++j) {
                if (red[static_cast<size_t>(j)] < Rational(0)) { enter = j; break; }
            }
            if (enter == -1) return LpStatus::Optimal;
            int leave = -1;
            Rational best_ratio(0);
            for (int i = 0; i < m; ++i) {
                const Rational& a = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (a <= Rational(0)) continue;
                Rational ratio = t[static_cast<size_t>(i)][static_cast<size_t>(total)] / a;
                if (leave == -1 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == -1) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_solve_exact(const LinearProgram& lp) {
    lp.validate();
    int m = lp.num_constraints();
    int nv = lp.num_vars();
    if (m == 0) {
        // x = 0 is optimal when all costs are nonnegative, else unbounded
        for (const auto& c : lp.objective)
            if (c < Rational(0)) return LpResult{LpStatus::Unbounded, Rational(0), {}};
        return LpResult{LpStatus::Optimal, Rational(0),
                        std::vector<Rational>(static_cast<size_t>(nv), Rational(0))};
    }

    Tableau tab(lp);

    // Phase 1: minimize the artificial sum.
    std::vector<Rational> phase1_cost(static_cast<size_t>(tab.total), Rational(0));
    for (int i = 0; i < m; ++i) phase1_cost[static_cast<size_t>(nv + m + i)] = Rational(1);
    tab.set_objective(phase1_cost);
    if (tab.iterate(tab.total) != LpStatus::Optimal)
        throw std::logic_error("lp_solve_exact: phase 1 cannot be unbounded");
    Rational artificial_sum = -tab.red[static_cast<size_t>(tab.total)];
    if (!artificial_sum.is_zero())
        return LpResult{LpStatus::Infeasible, Rational(0), {}};

    // Drive leftover artificials out of the basis (degenerate rows).
    for (int i = 0; i < m; ++i) {
        if (tab.basis[static_cast<size_t>(i)] < nv + m) continue;
        int col = -1;
        for (int j = 0; j < nv + m; ++j) {
            if (!tab.t[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) { col = j; break; }
        }
        if (col != -1) tab.pivot(i, col);
        // else: redundant row; its artificial stays basic at zero, harmless
    }

    // Phase 2: original objective, artificial columns barred from entering.
    std::vector<Rational> phase2_cost(static_cast<size_t>(tab.total), Rational(0));
    for (int j = 0; j < nv; ++j) phase2_cost[static_cast<size_t>(j)] = lp.objective[static_cast<size_t>(j)];
    tab.set_objective(phase2_cost);
    LpStatus status = tab.iterate(nv + m);
    if (status == LpStatus::Unbounded) return LpResult{LpStatus::Unbounded, Rational(0), {}};

    std::vector<Rational> x(static_cast<size_t>(nv), Rational(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[static_cast<size_t>(i)] < nv)
            x[static_cast<size_t>(tab.basis[static_cast<size_t>(i)])] =
                tab.t[static_cast<size_t>(i)][static_cast<size_t>(tab.total)];
    Rational objective(0);
    for (int j = 0; j < nv; ++j) objective += lp.objective[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    return LpResult{LpStatus::Optimal, objective, std::move(x)};
}

ChiFResult fractional_chromatic_number(const Graph& g, const ChiFOptions& options) {
    int n = g.vertex_count();
    if (n == 0) return ChiFResult{Rational(0), {}, ChiFMethod::Lp};

    bool transitive = false;
    if (options.shortcut_when_transitive || options.crosscheck_when_transitive)
        transitive = is_vertex_transitive(g, options.budget);

    if (options.shortcut_when_transitive && transitive) {
        int alpha = max_independent_set(g).size();
        return ChiFResult{Rational(n, alpha), {}, ChiFMethod::VertexTransitiveShortcut};
    }

    std::vector<VertexSet> sets = maximal_independent_sets(g, options.budget);
    LinearProgram lp;
    lp.objective.assign(sets.size(), Rational(1));
    lp.constraints.assign(static_cast<size_t>(n), std::vector<Rational>(sets.size(), Rational(0)));
    lp.rhs.assign(static_cast<size_t>(n), Rational(1));
    for (size_t j = 0; j < sets.size(); ++j)
        for (int v : sets[j].members())
            lp.constraints[static_cast<size_t>(v)][j] = Rational(1);

    LpResult solved = lp_solve_exact(lp);
    if (solved.status != LpStatus::Optimal)
        throw std::logic_error("fractional_chromatic_number: covering LP must be solvable");

    ChiFResult result{solved.objective, {}, ChiFMethod::Lp};
    for (size_t j = 0; j < sets.size(); ++j)
        if (solved.solution[j] > Rational(0))
            result.certificate.push_back(FractionalWeight{sets[j], solved.solution[j]});

    // Certificate validity: coverage >= 1 everywhere, weights sum to the value.
    Rational total(0);
    for (const auto& fw : result.certificate) total += fw.weight;
    if (total != result.value)
        throw std::logic_error("fractional_chromatic_number: certificate weight mismatch");
    for (int v = 0; v < n; ++v) {
        Rational cover(0);
        for (const auto& fw : result.certificate)
            if (fw.set.contains(v)) cover += fw.weight;
        if (cover < Rational(1))
            throw std::logic_error("fractional_chromatic_number: certificate under-covers a vertex");
    }

    if (options.crosscheck_when_transitive && transitive) {
        int alpha = max_independent_set(g).size();
        if (result.value != Rational(n, alpha))
            throw std::logic_error(
                "fractional_chromatic_number: LP disagrees with |G|/alpha on a "
                "vertex-transitive graph");
    }
    return result;
}

Theorem2Result theorem2_check(const Graph& g, const Budget& budget) {
    SumResult sum = chromatic_sum_exact(g, budget);
    if (!sum.optimal)
        throw BudgetExceeded("theorem2_check: chromatic sum search exceeded its budget");
    ChiFOptions options;
    options.budget = budget;
    ChiFResult chif = fractional_chromatic_number(g, options);
    Rational rhs = chif.value * Rational(g.vertex_count());
    return Theorem2Result{sum.sigma, rhs, Rational(sum.sigma) < rhs};
}

}  // namespace sumcol
