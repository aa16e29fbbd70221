#ifndef SUMCOL_EXACT_HPP
#define SUMCOL_EXACT_HPP

#include <optional>
#include <vector>

#include "sumcol/budget.hpp"
#include "sumcol/coloring.hpp"
#include "sumcol/graph.hpp"

namespace sumcol {

/// Result of an exact chromatic sum computation. When optimal is false the
/// budget ran out: sigma is only the best sum found so far and callers that
/// require exactness must treat the result as a failure.
struct SumResult {
    long long sigma;
    Coloring witness;
    int strength;
    bool optimal;
    SearchStats stats;
};

/// Exact chromatic sum by depth-first branch and bound. Vertices are colored
/// in descending-degree order (index tie-break) with per-vertex color cap
/// deg(v)+1; in any optimal coloring every color below c(v) appears in v's
/// neighborhood, so larger colors can never help. The incumbent starts from
/// the greedy coloring over the same order.
///
/// The witness is the lexicographically smallest color vector (in the
/// solver's vertex order) among optimal colorings that use the fewest
/// colors, so strength == witness.num_colors() and golden outputs are
/// stable across runs.
SumResult chromatic_sum_exact(const Graph& g, const Budget& budget = {});

/// SumResult::strength convenience wrapper; throws BudgetExceeded when the
/// underlying search did not complete.
int strength(const Graph& g, const Budget& budget = {});

struct ChromaticResult {
    /// Least k admitting a proper k-coloring; when optimal is false this is
    /// only the best proven lower bound at the time the budget ran out.
    int chi;
    bool optimal;
    std::optional<Coloring> witness;
    SearchStats stats;
};

/// Iterative deepening backtracking, starting from the clique-number lower
/// bound.
ChromaticResult chromatic_number(const Graph& g, const Budget& budget = {});

/// Maximum independent set; deterministic witness (lexicographically least
/// among maximum sets under the fixed search order).
VertexSet max_independent_set(const Graph& g);

/// omega(g) = size of a maximum independent set of the complement.
int clique_number(const Graph& g);

/// The fixed branching order shared by the exact solvers: descending degree,
/// index tie-break.
std::vector<int> solver_vertex_order(const Graph& g);

}  // namespace sumcol

#endif
