#include <doctest.h>

#include <numeric>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sumcol/exact.hpp"
#include "sumcol/fractional.hpp"
#include "sumcol/generators.hpp"
#include "sumcol/homomorphism.hpp"

using namespace sumcol;

namespace {

std::vector<std::vector<int>> as_member_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.members());
    return out;
}

}  // namespace

TEST_CASE("maximal independent set enumeration") {
    auto singletons = maximal_independent_sets(complete(4));
    REQUIRE(singletons.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(singletons[static_cast<size_t>(v)].members() == std::vector<int>{v});

    auto c5 = maximal_independent_sets(cycle(5));
    REQUIRE(c5.size() == 5);
    for (const auto& s : c5) CHECK(s.size() == 2);
    CHECK(as_member_lists(c5) == oracle::maximal_independent_sets(cycle(5)));

    CHECK(as_member_lists(maximal_independent_sets(petersen())) ==
          oracle::maximal_independent_sets(petersen()));

    for (const Graph& g : corpus::small(30))
        CHECK(as_member_lists(maximal_independent_sets(g)) == oracle::maximal_independent_sets(g));

    CHECK_THROWS_AS(maximal_independent_sets(petersen(), Budget::nodes(2)), BudgetExceeded);
}

TEST_CASE("lp validation") {
    LinearProgram bad;
    bad.objective = {Rational(1)};
    bad.constraints = {{Rational(1), Rational(2)}};
    bad.rhs = {Rational(1)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("simplex on tiny programs") {
    // minimize x subject to x >= 3
    LinearProgram lp;
    lp.objective = {Rational(1)};
    lp.constraints = {{Rational(1)}};
    lp.rhs = {Rational(3)};
    LpResult r = lp_solve_exact(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rational(3));
    CHECK(r.solution == std::vector<Rational>{Rational(3)});

    // infeasible: x >= 1 and -x >= 0
    LinearProgram inf;
    inf.objective = {Rational(1)};
    inf.constraints = {{Rational(1)}, {Rational(-1)}};
    inf.rhs = {Rational(1), Rational(0)};
    CHECK(lp_solve_exact(inf).status == LpStatus::Infeasible);

    // unbounded: minimize -x subject to x >= 0 (no other constraint)
    LinearProgram unb;
    unb.objective = {Rational(-1)};
    unb.constraints = {{Rational(1)}};
    unb.rhs = {Rational(0)};
    CHECK(lp_solve_exact(unb).status == LpStatus::Unbounded);
}

TEST_CASE("simplex matches vertex enumeration on small covering programs") {
    corpus::Options options;
    options.count = 12;
    options.min_n = 3;
    options.max_n = 5;
    options.require_edge = true;
    for (const Graph& g : corpus::seeded(options)) {
        auto sets = maximal_independent_sets(g);
        if (sets.size() > 8) continue;
        LinearProgram lp;
        lp.objective.assign(sets.size(), Rational(1));
        lp.constraints.assign(static_cast<size_t>(g.vertex_count()),
                              std::vector<Rational>(sets.size(), Rational(0)));
        lp.rhs.assign(static_cast<size_t>(g.vertex_count()), Rational(1));
        for (size_t j = 0; j < sets.size(); ++j)
            for (int v : sets[j].members()) lp.constraints[static_cast<size_t>(v)][j] = Rational(1);
        auto expected = oracle::lp_minimum_by_vertex_enumeration(lp);
        REQUIRE(expected.has_value());
        LpResult r = lp_solve_exact(lp);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.objective == *expected);
    }
}

TEST_CASE("simplex solves assignment programs to their integral optimum") {
    // row/column sums pinned to one from both sides, so the feasible set is
    // the Birkhoff polytope: every vertex is a permutation matrix and the
    // optimum is the cheapest permutation, found here by trying all of them
    const int size = 4;
    std::uint64_t state = 42;
    auto next_cost = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return Rational(1 + static_cast<long long>((state >> 33) % 9));
    };
    for (int instance = 0; instance < 6; ++instance) {
        std::vector<std::vector<Rational>> cost(size, std::vector<Rational>(size));
        for (auto& row : cost)
            for (auto& c : row) c = next_cost();

        LinearProgram lp;
        lp.objective.reserve(size * size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) lp.objective.push_back(cost[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        auto add_equality = [&](const std::vector<int>& cells) {
            std::vector<Rational> ge(static_cast<size_t>(size * size), Rational(0));
            std::vector<Rational> le(static_cast<size_t>(size * size), Rational(0));
            for (int c : cells) {
                ge[static_cast<size_t>(c)] = Rational(1);
                le[static_cast<size_t>(c)] = Rational(-1);
            }
            lp.constraints.push_back(std::move(ge));
            lp.rhs.push_back(Rational(1));
            lp.constraints.push_back(std::move(le));
            lp.rhs.push_back(Rational(-1));
        };
        for (int i = 0; i < size; ++i) {
            std::vector<int> row_cells, col_cells;
            for (int j = 0; j < size; ++j) {
                row_cells.push_back(i * size + j);
                col_cells.push_back(j * size + i);
            }
            add_equality(row_cells);
            add_equality(col_cells);
        }

        std::vector<int> perm(size);
        std::iota(perm.begin(), perm.end(), 0);
        Rational best(-1);
        do {
            Rational total(0);
            for (int i = 0; i < size; ++i) total += cost[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])];
            if (best == Rational(-1) || total < best) best = total;
        } while (std::next_permutation(perm.begin(), perm.end()));

        LpResult r = lp_solve_exact(lp);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.objective == best);
    }
}

TEST_CASE("fractional chromatic numbers of the named graphs") {
    for (int n = 1; n <= 6; ++n)
        CHECK(fractional_chromatic_number(complete(n)).value == Rational(n));
    CHECK(fractional_chromatic_number(cycle(5)).value == Rational(5, 2));
    CHECK(fractional_chromatic_number(kneser(5, 2)).value == Rational(5, 2));
    CHECK(fractional_chromatic_number(Graph(4)).value == Rational(1));  // edgeless
    CHECK(fractional_chromatic_number(Graph(0)).value == Rational(0));

    // vertex-transitive shortcut agrees and is tagged
    ChiFOptions shortcut;
    shortcut.shortcut_when_transitive = true;
    ChiFResult r = fractional_chromatic_number(kneser(5, 2), shortcut);
    CHECK(r.value == Rational(10, 4));
    CHECK(r.method == ChiFMethod::VertexTransitiveShortcut);
}

TEST_CASE("certificates cover every vertex and sum to the value") {
    for (const Graph& g : {petersen(), cycle(7), kneser(6, 2), complete(4)}) {
        ChiFResult r = fractional_chromatic_number(g);
        REQUIRE(r.method == ChiFMethod::Lp);
        Rational total(0);
        for (const auto& fw : r.certificate) {
            CHECK(fw.weight > Rational(0));
            total += fw.weight;
        }
        CHECK(total == r.value);
        for (int v = 0; v < g.vertex_count(); ++v) {
            Rational cover(0);
            for (const auto& fw : r.certificate)
                if (fw.set.contains(v)) cover += fw.weight;
            CHECK(cover >= Rational(1));
        }
    }
}

TEST_CASE("sandwich and transitive identities on the corpus") {
    corpus::Options options;
    options.count = 30;
    options.min_n = 3;
    options.max_n = 8;
    for (const Graph& g : corpus::seeded(options)) {
        ChiFResult r = fractional_chromatic_number(g);
        int omega = clique_number(g);
        int chi = chromatic_number(g).chi;
        CHECK(Rational(omega) <= r.value);
        CHECK(r.value <= Rational(chi));
    }

    // LP equals |G|/alpha on vertex-transitive graphs, both computed
    for (const Graph& g : {petersen(), cycle(5), cycle(7), circular_complete(8, 3),
                           kneser(6, 2), complete(5)}) {
        REQUIRE(is_vertex_transitive(g));
        ChiFResult lp = fractional_chromatic_number(g);  // cross-check enabled by default
        int alpha = max_independent_set(g).size();
        CHECK(lp.value == Rational(g.vertex_count(), alpha));
    }
}

TEST_CASE("the Kneser definition in reverse: C5 maps into KG(5,2)") {
    // chi_f(C5) = 5/2 is attained: a homomorphism into KG(5,2) must exist
    CHECK(fractional_chromatic_number(cycle(5)).value == Rational(5, 2));
    HomSearchResult r = find_homomorphism(cycle(5), kneser(5, 2));
    CHECK(r.status == HomStatus::Found);
}

TEST_CASE("theorem 2 strict inequality") {
    Theorem2Result p = theorem2_check(petersen());
    CHECK(p.sigma == 19);
    CHECK(p.chif_times_n == Rational(25));
    CHECK(p.strict_ok);

    Theorem2Result k4 = theorem2_check(complete(4));
    CHECK(k4.sigma == 10);
    CHECK(k4.chif_times_n == Rational(16));
    CHECK(k4.strict_ok);

    Theorem2Result kg42 = theorem2_check(kneser(4, 2));
    CHECK(kg42.sigma == 9);
    CHECK(kg42.chif_times_n == Rational(12));
    CHECK(kg42.strict_ok);

    corpus::Options options;
    options.count = 30;
    options.min_n = 2;
    options.max_n = 9;
    options.require_edge = true;  // chi_f(LP) meets the homomorphism definition only with an edge
    for (const Graph& g : corpus::seeded(options)) CHECK(theorem2_check(g).strict_ok);
}
