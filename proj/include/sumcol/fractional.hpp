#ifndef SUMCOL_FRACTIONAL_HPP
#define SUMCOL_FRACTIONAL_HPP

#include <vector>

#include "sumcol/budget.hpp"
#include "sumcol/graph.hpp"
#include "sumcol/rational.hpp"

namespace sumcol {

/// All inclusion-maximal independent sets, found by pivoting maximal-clique
/// search on the complement, each verified independent and maximal. Sorted
/// lexicographically. Throws BudgetExceeded rather than returning a partial
/// list (a truncated list would silently corrupt the chi_f LP).
std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Budget& budget = {});

/// minimize objective . x  subject to  constraints x >= rhs, x >= 0,
/// everything an exact Rational. The sense markers are fixed by the type.
struct LinearProgram {
    std::vector<std::vector<Rational>> constraints;  // one row per constraint
    std::vector<Rational> rhs;
    std::vector<Rational> objective;

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_constraints() const { return static_cast<int>(constraints.size()); }
    void validate() const;  // dimension consistency
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rational objective;            // meaningful only when Optimal
    std::vector<Rational> solution;
};

/// Two-phase primal simplex over exact rationals with Bland's anti-cycling
/// rule (entering: lowest-index negative reduced cost; leaving: lowest basis
/// index among ratio ties). Infeasible and unbounded programs are reported
/// distinctly; nothing is ever approximated.
LpResult lp_solve_exact(const LinearProgram& lp);

enum class ChiFMethod { Lp, VertexTransitiveShortcut };

struct FractionalWeight {
    VertexSet set;
    Rational weight;  // > 0
};

struct ChiFResult {
    Rational value;
    /// Fractional coloring: weight per maximal independent set, covering
    /// every vertex with total >= 1 and summing to value. Empty when the
    /// vertex-transitive shortcut skipped the LP.
    std::vector<FractionalWeight> certificate;
    ChiFMethod method;
};

struct ChiFOptions {
    /// When the graph is vertex-transitive: skip the LP and return |G|/alpha
    /// (certificate omitted) instead of solving the LP and cross-checking the
    /// two values against each other.
    bool shortcut_when_transitive = false;
    bool crosscheck_when_transitive = true;
    Budget budget;
};

/// Exact fractional chromatic number: minimize total weight over maximal
/// independent sets subject to coverage >= 1 at every vertex.
ChiFResult fractional_chromatic_number(const Graph& g, const ChiFOptions& options = {});

struct Theorem2Result {
    long long sigma;
    Rational chif_times_n;
    bool strict_ok;  // sigma < chi_f * n; false indicates an implementation bug
};

/// Computes both sides of the strict chromatic-sum bound sigma(G) < chi_f(G)|G|
/// exactly.
Theorem2Result theorem2_check(const Graph& g, const Budget& budget = {});

}  // namespace sumcol

#endif
