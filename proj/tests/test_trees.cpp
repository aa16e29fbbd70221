#include <doctest.h>

#include "oracles.hpp"
#include "trees.hpp"
#include "sumcol/graph.hpp"

using namespace sumcol;

TEST_CASE("free tree enumeration matches the known counts") {
    // number of unlabeled free trees on 1..10 vertices
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int k = 1; k <= 10; ++k) {
        auto forest = trees::all_free_trees(k);
        CHECK(static_cast<int>(forest.size()) == expected[k - 1]);
        for (const Graph& t : forest) {
            CHECK(t.vertex_count() == k);
            CHECK(t.edge_count() == k - 1);
            CHECK(is_connected(t));
        }
    }
}

TEST_CASE("enumerated trees are pairwise non-isomorphic at small orders") {
    for (int k = 4; k <= 7; ++k) {
        auto forest = trees::all_free_trees(k);
        for (size_t i = 0; i < forest.size(); ++i)
            for (size_t j = i + 1; j < forest.size(); ++j)
                CHECK_FALSE(oracle::isomorphic(forest[i], forest[j]));
    }
}
