#ifndef SUMCOL_GENERATORS_HPP
#define SUMCOL_GENERATORS_HPP

#include <cstdint>

#include "sumcol/graph.hpp"
#include "sumcol/rational.hpp"

namespace sumcol {

/// Kneser graph KG(m,n): vertices are the n-subsets of {1..m} in
/// lexicographic order (kept as labels, e.g. "{1,2}"), adjacent iff disjoint.
/// Requires m >= 2n, n >= 1.
Graph kneser(int m, int n);

/// Circular complete graph K_{p/q}: vertices 0..p-1, i adjacent to j iff
/// q <= min(|i-j|, p-|i-j|) <= p-q. K_{p/1} is the complete graph K_p.
/// Requires p >= 2q >= 2.
Graph circular_complete(int p, int q);

Graph complete(int n);
Graph cycle(int n);   // requires n >= 3
Graph path(int n);

/// KG(5,2).
Graph petersen();

/// Erdos-Renyi G(n,p) with p given exactly as a rational in [0,1].
/// Deterministic for a fixed seed: one splitmix64 draw per vertex pair
/// (i,j), i < j, in row-major order; the edge is present iff
/// draw * den < num * 2^64.
Graph random_gnp(int n, const Rational& p, std::uint64_t seed);

}  // namespace sumcol

#endif
