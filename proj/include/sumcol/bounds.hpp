#ifndef SUMCOL_BOUNDS_HPP
#define SUMCOL_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "sumcol/budget.hpp"
#include "sumcol/coloring.hpp"
#include "sumcol/graph.hpp"
#include "sumcol/rational.hpp"

namespace sumcol {

/// Greedy coloring along the given vertex order: each vertex receives the
/// smallest color absent among already-colored neighbors. The sum is at most
/// n + e (each vertex's color exceeds 1 by at most its earlier neighbors).
Coloring greedy_sum_coloring(const Graph& g, const std::vector<int>& order);

/// Natural-order convenience overload.
Coloring greedy_sum_coloring(const Graph& g);

enum class PeelMode {
    ExactMaximum,   // exact maximum independent set each round
    GreedyMaximal,  // greedy maximal set, for inputs beyond the exact solver
};

/// Iteratively extracts an independent set of the remaining graph and colors
/// it i at round i. Each round certifies sigma(G) <= |G| + sigma(G minus S).
/// Ties among maximum sets go to the lexicographically least, so output is
/// deterministic.
Coloring mis_peeling(const Graph& g, PeelMode mode = PeelMode::ExactMaximum);

/// Constructive coloring of KG(m,n) from the star-peeling recursion: the
/// star of element m (all n-subsets containing it) takes color 1, the copy
/// of KG(m-1,n) underneath is colored recursively with shifted colors, and
/// the base perfect matching KG(2n,n) takes the two final colors, the
/// lexicographically smaller subset of each pair getting the lower one.
/// kg must be kneser(m, n); the coloring's sum always equals
/// kneser_upper_formula(m, n).
Coloring kneser_star_peel(const Graph& kg, int m, int n);

/// Closed form C(m+1,n+1) - ((n-1)/(2n+2)) * C(2n,n), an upper bound for the
/// chromatic sum of KG(m,n) and the exact sum of the star-peel coloring.
Rational kneser_upper_formula(int m, int n);

struct BoundEntry {
    std::string name;
    Rational value;
    bool strict;       // bound is known to hold strictly
    std::string note;  // applicability remark, empty when unconditional
};

struct BoundsOptions {
    bool with_chi = true;            // enable the (chi+1)/2*n upper bound
    bool with_chi_f = true;          // enable the chi_f*n strict upper bound
    bool with_transitivity = true;   // enable the vertex-transitive lower bound
    Budget budget;
};

struct BoundsReport {
    int n = 0;
    long long e = 0;
    std::optional<int> chi;
    int omega = 0;
    int alpha = 0;
    std::optional<Rational> chi_f;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    std::vector<std::string> omitted;  // entries skipped, with reasons
};

/// Assembles every applicable lower/upper bound on the chromatic sum, all
/// values exact. Bounds whose hypotheses fail (vertex transitivity for the
/// (omega+1)/2*n lower bound, connectivity for 3/2(e+1), at least one edge
/// for the strict chi_f*n bound) are omitted with a note, never guessed.
/// Solver budget failures likewise drop the affected entry.
BoundsReport bounds_report(const Graph& g, const BoundsOptions& options = {});

}  // namespace sumcol

#endif
