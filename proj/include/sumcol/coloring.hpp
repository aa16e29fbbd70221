#ifndef SUMCOL_COLORING_HPP
#define SUMCOL_COLORING_HPP

#include <vector>

#include "sumcol/graph.hpp"

namespace sumcol {

/// Proper vertex coloring with positive integer colors. Properness and the
/// colors >= 1 invariant are checked on construction; the sum and the number
/// of colors used are cached. Owns a copy of its host graph, so a coloring
/// stays valid after the graph it was built from goes away.
class Coloring {
public:
    Coloring(Graph host, std::vector<int> colors);

    const Graph& host() const { return host_; }
    int color(int v) const { return colors_[static_cast<size_t>(v)]; }
    const std::vector<int>& colors() const { return colors_; }
    long long sum() const { return sum_; }
    int num_colors() const { return num_colors_; }

private:
    Graph host_;
    std::vector<int> colors_;
    long long sum_;
    int num_colors_;
};

}  // namespace sumcol

#endif
