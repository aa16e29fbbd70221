#ifndef SUMCOL_TESTS_ORACLES_HPP
#define SUMCOL_TESTS_ORACLES_HPP

// Brute-force reference implementations, deliberately independent of the
// library's search code: plain enumeration with no bounding, ordering or
// incrementality tricks. Only usable at very small sizes.

#include <optional>
#include <utility>
#include <vector>

#include "sumcol/fractional.hpp"
#include "sumcol/graph.hpp"
#include "sumcol/rational.hpp"

namespace oracle {

using sumcol::Graph;
using sumcol::LinearProgram;
using sumcol::Rational;

/// Minimum sum over all proper colorings with colors in 1..n, and the
/// smallest number of colors among the colorings attaining it.
std::pair<long long, int> chromatic_sum_and_strength(const Graph& g);

/// The lexicographically least color vector, read in the given vertex
/// order, among proper colorings with sum == sigma and at most max_colors
/// colors. Empty when none exists.
std::vector<int> lex_least_optimal_coloring(const Graph& g, long long sigma, int max_colors,
                                            const std::vector<int>& order);

long long chromatic_sum(const Graph& g);

int chromatic_number(const Graph& g);

/// Largest independent set size by scanning all 2^n subsets.
int independence_number(const Graph& g);

int clique_number(const Graph& g);

/// All maximal independent sets by the same subset scan, as sorted vertex
/// lists in lexicographic order.
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g);

/// Lexicographically least maximum independent set.
std::vector<int> lex_least_maximum_independent_set(const Graph& g);

/// Tries every one of the |V(h)|^|V(g)| maps.
bool homomorphism_exists(const Graph& g, const Graph& h);

/// Tries every vertex bijection.
bool isomorphic(const Graph& a, const Graph& b);

/// Orbit partition from enumerating all n! permutations.
std::vector<std::vector<int>> automorphism_orbits(const Graph& g);

/// Minimum of the objective over all basic feasible points, found by solving
/// every square subsystem of tight constraints with rational Gaussian
/// elimination. Returns nullopt when the feasible set is empty.
std::optional<Rational> lp_minimum_by_vertex_enumeration(const LinearProgram& lp);

}  // namespace oracle

#endif
