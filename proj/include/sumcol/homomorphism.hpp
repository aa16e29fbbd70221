#ifndef SUMCOL_HOMOMORPHISM_HPP
#define SUMCOL_HOMOMORPHISM_HPP

#include <optional>
#include <string>
#include <vector>

#include "sumcol/budget.hpp"
#include "sumcol/graph.hpp"
#include "sumcol/rational.hpp"

namespace sumcol {

/// Edge-preserving vertex map from G to H; preservation of every edge of G
/// is validated on construction.
class HomMap {
public:
    HomMap(const Graph& g, const Graph& h, std::vector<int> map);

    int image(int v) const { return map_[static_cast<size_t>(v)]; }
    const std::vector<int>& mapping() const { return map_; }

private:
    std::vector<int> map_;
};

enum class HomStatus {
    Found,       // witness holds a valid homomorphism
    NoneExists,  // search completed: definitively none
    Unknown,     // budget exhausted before completion
};

struct HomSearchResult {
    HomStatus status;
    std::optional<HomMap> witness;
    SearchStats stats;
};

/// Backtracking search for a homomorphism G -> H: vertices of G in
/// descending-degree order, candidate sets pruned by forward-checking
/// against neighbor images.
HomSearchResult find_homomorphism(const Graph& g, const Graph& h, const Budget& budget = {});

/// Vertex orbits under Aut(h), as sorted cells ordered by least member.
/// Computed by equitable partition refinement followed by backtracking
/// searches for explicit automorphisms between cell members; two vertices
/// land in one orbit only when a chain of found automorphisms connects them,
/// and in different orbits only after an exhaustive search refutation.
/// Throws BudgetExceeded rather than returning partial orbits.
std::vector<std::vector<int>> automorphism_orbits(const Graph& h, const Budget& budget = {});

/// True iff automorphism_orbits(h) has a single cell. Irregular degree
/// sequences short-circuit to false without any search.
bool is_vertex_transitive(const Graph& h, const Budget& budget = {});

enum class ObstructionOutcome {
    NoHomomorphismProven,
    Inconclusive,
    NotApplicable,  // H is not vertex-transitive (or could not be verified)
};

/// Outcome of the chromatic-sum obstruction test, with the certified
/// inequality: a homomorphism G -> H into a vertex-transitive H forces
/// sigma(G)/|G| <= sigma(H)/|H|, so ratio_g > ratio_h proves none exists.
struct ObstructionVerdict {
    ObstructionOutcome outcome;
    Rational ratio_g;  // sigma_g_lower / |G|
    Rational ratio_h;  // sigma_h_upper / |H|
    bool h_vertex_transitive;
    /// Transitivity evidence: number of Aut(H) orbits (1 means transitive).
    /// Absent when the degree pre-check refuted without a search or the
    /// check could not finish.
    std::optional<int> h_orbit_count;
    std::string reason;
};

/// sigma_g_lower must be the exact chromatic sum of G or any certified lower
/// bound; sigma_h_upper the exact sum of H or any certified upper bound.
/// Weakening either side only makes the test more conservative: it never
/// claims existence and equal ratios stay Inconclusive.
ObstructionVerdict obstruction_test(const Graph& g, const Graph& h,
                                    const Rational& sigma_g_lower,
                                    const Rational& sigma_h_upper,
                                    const Budget& budget = {});

}  // namespace sumcol

#endif
