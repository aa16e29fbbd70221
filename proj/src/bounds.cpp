#include "sumcol/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sumcol/exact.hpp"
#include "sumcol/fractional.hpp"
#include "sumcol/homomorphism.hpp"
#include "subsets.hpp"

namespace sumcol {

Coloring greedy_sum_coloring(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (order.size() != static_cast<size_t>(n))
        throw std::invalid_argument("greedy_sum_coloring: order size mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("greedy_sum_coloring: order is not a permutation");
        seen[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> colors(static_cast<size_t>(n), 0);
    for (int v : order) {
        int c = 1;
        while (true) {
            bool clash = false;
            for (int w : g.neighbors(v))
                if (colors[static_cast<size_t>(w)] == c) { clash = true; break; }
            if (!clash) break;
            ++c;
        }
        colors[static_cast<size_t>(v)] = c;
    }
    return Coloring(g, std::move(colors));
}

Coloring greedy_sum_coloring(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    return greedy_sum_coloring(g, order);
}

namespace {

// Greedy maximal independent set of the remaining vertices, ascending index.
VertexSet greedy_maximal_set(const Graph& g, const VertexSet& remaining) {
    VertexSet out(g.vertex_count());
    for (int v : remaining.members()) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (out.contains(w)) { ok = false; break; }
        if (ok) out.insert(v);
    }
    return out;
}

}  // namespace

Coloring mis_peeling(const Graph& g, PeelMode mode) {
    int n = g.vertex_count();
    std::vector<int> colors(static_cast<size_t>(n), 0);
    VertexSet remaining = VertexSet::full(n);
    int round = 0;
    while (!remaining.empty()) {
        ++round;
        VertexSet chosen(n);
        if (mode == PeelMode::ExactMaximum) {
            InducedSubgraph sub = induced_subgraph(g, remaining);
            VertexSet local = max_independent_set(sub.graph);
            for (int v : local.members())
                chosen.insert(sub.new_to_old[static_cast<size_t>(v)]);
        } else {
            chosen = greedy_maximal_set(g, remaining);
        }
        for (int v : chosen.members()) {
            colors[static_cast<size_t>(v)] = round;
            remaining.erase(v);
        }
    }
    return Coloring(g, std::move(colors));
}

Rational kneser_upper_formula(int m, int n) {
    if (n < 1) throw std::invalid_argument("kneser_upper_formula: n must be >= 1");
    if (m < 2 * n) throw std::invalid_argument("kneser_upper_formula: m must be >= 2n");
    Rational head(binomial(static_cast<unsigned long>(m) + 1, static_cast<unsigned long>(n) + 1));
    Rational correction =
        Rational(n - 1, 2 * n + 2) * Rational(binomial(2 * static_cast<unsigned long>(n),
                                                       static_cast<unsigned long>(n)));
    return head - correction;
}

Coloring kneser_star_peel(const Graph& kg, int m, int n) {
    if (n < 1) throw std::invalid_argument("kneser_star_peel: n must be >= 1");
    if (m < 2 * n) throw std::invalid_argument("kneser_star_peel: m must be >= 2n");
    auto subsets = detail::subsets_lex(m, n);
    if (kg.vertex_count() != static_cast<int>(subsets.size()))
        throw std::invalid_argument("kneser_star_peel: graph is not KG(m,n)");

    int base_low = m - 2 * n + 1;  // first of the two colors of the base matching
    std::vector<int> colors(subsets.size(), 0);
    for (size_t i = 0; i < subsets.size(); ++i) {
        const auto& a = subsets[i];
        int max_elem = a.back();
        if (max_elem > 2 * n) {
            // peeled as the star of its largest element
            colors[i] = m - max_elem + 1;
        } else {
            // base KG(2n,n): pair A with its complement in {1..2n}
            std::vector<int> partner;
            size_t k = 0;
            for (int x = 1; x <= 2 * n; ++x) {
                if (k < a.size() && a[k] == x) { ++k; continue; }
                partner.push_back(x);
            }
            colors[i] = a < partner ? base_low : base_low + 1;
        }
    }
    return Coloring(kg, std::move(colors));
}

namespace {

void add_entry(std::vector<BoundEntry>& list, std::string name, Rational value,
               bool strict = false, std::string note = "") {
    list.push_back(BoundEntry{std::move(name), std::move(value), strict, std::move(note)});
}

}  // namespace

BoundsReport bounds_report(const Graph& g, const BoundsOptions& options) {
    BoundsReport report;
    report.n = g.vertex_count();
    report.e = g.edge_count();
    report.alpha = max_independent_set(g).size();
    report.omega = clique_number(g);

    long long n = report.n;
    long long e = report.e;

    add_entry(report.lower, "n", Rational(n));
    add_entry(report.lower, "ceil(sqrt(8e))",
              Rational(isqrt_ceil(Integer(static_cast<long>(8 * e)))));

    bool transitive = false;
    if (options.with_transitivity && n > 0) {
        try {
            transitive = is_vertex_transitive(g, options.budget);
            if (transitive)
                add_entry(report.lower, "(omega+1)/2*n",
                          Rational(report.omega + 1, 2) * Rational(n), false,
                          "vertex-transitive graphs");
        } catch (const BudgetExceeded&) {
            report.omitted.push_back("(omega+1)/2*n: transitivity check exceeded its budget");
        }
    }

    add_entry(report.upper, "n+e", Rational(n + e));
    if (is_connected(g)) {
        add_entry(report.upper, "3/2(e+1)", Rational(3, 2) * Rational(e + 1), false,
                  "connected graphs");
    } else {
        report.omitted.push_back("3/2(e+1): holds for connected graphs only");
    }

    if (options.with_chi) {
        ChromaticResult chi = chromatic_number(g, options.budget);
        if (chi.optimal) {
            report.chi = chi.chi;
            add_entry(report.upper, "(chi+1)/2*n", Rational(chi.chi + 1, 2) * Rational(n));
        } else {
            report.omitted.push_back("(chi+1)/2*n: chromatic number search exceeded its budget");
        }
    }

    if (options.with_chi_f) {
        if (e >= 1) {
            try {
                ChiFOptions copts;
                copts.budget = options.budget;
                ChiFResult chif = fractional_chromatic_number(g, copts);
                report.chi_f = chif.value;
                add_entry(report.upper, "chi_f*n", chif.value * Rational(n), true);
            } catch (const BudgetExceeded&) {
                report.omitted.push_back("chi_f*n: fractional chromatic number exceeded its budget");
            }
        } else {
            report.omitted.push_back("chi_f*n: strict bound requires at least one edge");
        }
    }

    // Best heuristic coloring: witnessed upper bound, always valid.
    long long best_heuristic = greedy_sum_coloring(g).sum();
    PeelMode mode = n <= 40 ? PeelMode::ExactMaximum : PeelMode::GreedyMaximal;
    best_heuristic = std::min(best_heuristic, mis_peeling(g, mode).sum());
    add_entry(report.upper, "best heuristic coloring", Rational(best_heuristic));

    for (const auto& lo : report.lower)
        for (const auto& up : report.upper)
            if (lo.value > up.value)
                throw std::logic_error("bounds_report: lower bound " + lo.name +
                                       " exceeds upper bound " + up.name);
    return report;
}

}  // namespace sumcol
