// sumcol: exact chromatic sum toolkit command line.
//
// Exit codes: 0 success or unknown verdict, 1 usage error, 2 parse error,
// 3 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sumcol/bounds.hpp"
#include "sumcol/dimacs.hpp"
#include "sumcol/envelope.hpp"
#include "sumcol/exact.hpp"
#include "sumcol/fractional.hpp"
#include "sumcol/generators.hpp"
#include "sumcol/homomorphism.hpp"
#include "sumcol/kneser_lab.hpp"

namespace {

using namespace sumcol;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return read_dimacs(buffer.str());
}

// Node budget: --budget flag wins, then the SUMCOL_BUDGET environment
// variable, then unlimited.
Budget resolve_budget(std::optional<std::uint64_t> flag) {
    if (flag) return Budget::nodes(*flag);
    if (const char* env = std::getenv("SUMCOL_BUDGET")) {
        try {
            return Budget::nodes(std::stoull(env));
        } catch (const std::exception&) {
            throw UsageError("SUMCOL_BUDGET is not a valid node count");
        }
    }
    return Budget{};
}

Rational parse_probability(const std::string& text) {
    Rational p = Rational::from_string(text);
    if (p < Rational(0) || p > Rational(1)) throw UsageError("p must lie in [0,1]");
    return p;
}

void emit(const OutputEnvelope& env, bool json) {
    if (json) std::cout << env.to_json().dump(2) << "\n";
}

std::string witness_text(const Coloring& c) {
    std::ostringstream out;
    for (int v = 0; v < c.host().vertex_count(); ++v) {
        out << "  vertex " << (v + 1);
        if (c.host().has_labels()) out << " " << c.host().label(v);
        out << " -> color " << c.color(v) << "\n";
    }
    return out.str();
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path, std::optional<std::uint64_t> seed) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw UsageError("gen " + family + ": expected " + std::to_string(k) + " parameter(s)");
    };
    auto as_int = [](const std::string& s) {
        try {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + s + "'");
        }
    };

    Graph g;
    std::string comment = "sumcol gen " + family;
    for (const auto& p : params) comment += " " + p;
    try {
        if (family == "kneser") {
            want(2);
            g = kneser(as_int(params[0]), as_int(params[1]));
        } else if (family == "circular") {
            want(2);
            g = circular_complete(as_int(params[0]), as_int(params[1]));
        } else if (family == "complete") {
            want(1);
            g = complete(as_int(params[0]));
        } else if (family == "cycle") {
            want(1);
            g = cycle(as_int(params[0]));
        } else if (family == "path") {
            want(1);
            g = path(as_int(params[0]));
        } else if (family == "petersen") {
            want(0);
            g = petersen();
        } else if (family == "gnp") {
            want(2);
            if (!seed) throw UsageError("gen gnp requires an explicit --seed");
            g = random_gnp(as_int(params[0]), parse_probability(params[1]), *seed);
            comment += " seed " + std::to_string(*seed);
        } else {
            throw UsageError("unknown family '" + family + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::string text = write_dimacs(g, {comment});
    std::ofstream out(out_path, std::ios::trunc);
    if (!out || !(out << text) || !out.flush())
        throw UsageError("cannot write '" + out_path + "'");
    std::cout << "wrote " << out_path << " (" << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges)\n";
    return kExitOk;
}

int cmd_sum(const std::string& path, const std::string& mode,
            std::optional<std::uint64_t> budget_flag, bool json, bool show_witness) {
    Graph g = load_graph(path);
    Budget budget = resolve_budget(budget_flag);

    OutputEnvelope env;
    env.command = "sum --" + mode;
    env.input = fingerprint(g);

    if (mode == "exact") {
        SumResult r = chromatic_sum_exact(g, budget);
        env.exact = r.optimal;
        env.stats = r.stats;
        env.result = sum_result_to_json(r, show_witness);
        if (!json) {
            if (r.optimal)
                std::cout << "sigma = " << r.sigma << " (exact), strength = " << r.strength << "\n";
            else
                std::cout << "sigma <= " << r.sigma << " (budget exhausted, bound only)\n";
            if (show_witness) std::cout << witness_text(r.witness);
        }
    } else {
        Coloring c = mode == "greedy" ? greedy_sum_coloring(g) : mis_peeling(g);
        env.exact = false;
        env.result = Json{{"sigma_upper", c.sum()}, {"num_colors", c.num_colors()},
                          {"exact", false}};
        if (show_witness) env.result["witness"] = coloring_to_json(c);
        if (!json) {
            std::cout << "sigma <= " << c.sum() << " (" << mode << " coloring, bound only)\n";
            if (show_witness) std::cout << witness_text(c);
        }
    }
    emit(env, json);
    return kExitOk;
}

int cmd_bounds(const std::string& path, bool with_chi, bool with_chif,
               std::optional<std::uint64_t> budget_flag, bool json) {
    Graph g = load_graph(path);
    BoundsOptions options;
    options.with_chi = with_chi;
    options.with_chi_f = with_chif;
    options.budget = resolve_budget(budget_flag);
    BoundsReport report = bounds_report(g, options);

    OutputEnvelope env;
    env.command = "bounds";
    env.input = fingerprint(g);
    env.result = bounds_report_to_json(report);
    emit(env, json);
    if (!json) {
        std::cout << "n = " << report.n << ", e = " << report.e << ", alpha = " << report.alpha
                  << ", omega = " << report.omega;
        if (report.chi) std::cout << ", chi = " << *report.chi;
        if (report.chi_f) std::cout << ", chi_f = " << report.chi_f->to_string();
        std::cout << "\nlower bounds on sigma:\n";
        for (const auto& b : report.lower)
            std::cout << "  " << b.value.to_string() << "  [" << b.name << "]"
                      << (b.note.empty() ? "" : "  (" + b.note + ")") << "\n";
        std::cout << "upper bounds on sigma:\n";
        for (const auto& b : report.upper)
            std::cout << "  " << b.value.to_string() << (b.strict ? " (strict)" : "") << "  ["
                      << b.name << "]" << (b.note.empty() ? "" : "  (" + b.note + ")") << "\n";
        for (const auto& o : report.omitted) std::cout << "omitted: " << o << "\n";
    }
    return kExitOk;
}

int cmd_chi(const std::string& path, std::optional<std::uint64_t> budget_flag, bool json) {
    Graph g = load_graph(path);
    ChromaticResult r = chromatic_number(g, resolve_budget(budget_flag));

    OutputEnvelope env;
    env.command = "chi";
    env.input = fingerprint(g);
    env.exact = r.optimal;
    env.stats = r.stats;
    env.result = Json{{"chi", r.chi}, {"exact", r.optimal}};
    emit(env, json);
    if (!json) {
        if (r.optimal)
            std::cout << "chi = " << r.chi << " (exact)\n";
        else
            std::cout << "chi >= " << r.chi << " (budget exhausted, bound only)\n";
    }
    return kExitOk;
}

int cmd_chif(const std::string& path, bool shortcut, std::optional<std::uint64_t> budget_flag,
             bool json) {
    Graph g = load_graph(path);
    ChiFOptions options;
    options.shortcut_when_transitive = shortcut;
    options.budget = resolve_budget(budget_flag);

    OutputEnvelope env;
    env.command = "chif";
    env.input = fingerprint(g);
    try {
        ChiFResult r = fractional_chromatic_number(g, options);
        env.result = chif_result_to_json(r);
        emit(env, json);
        if (!json)
            std::cout << "chi_f = " << r.value.to_string() << " = " << r.value.decimal_string()
                      << " ("
                      << (r.method == ChiFMethod::Lp ? "exact LP" : "vertex-transitive shortcut")
                      << ")\n";
    } catch (const BudgetExceeded& e) {
        env.exact = false;
        env.result = Json{{"status", "unknown"}, {"reason", e.what()}};
        emit(env, json);
        if (!json) std::cout << "chi_f unknown: " << e.what() << "\n";
    }
    return kExitOk;
}

// Certified lower bound on sigma(G) for the obstruction test when the exact
// search does not finish: max of n, ceil(sqrt(8e)) and, for verified
// vertex-transitive graphs, (omega+1)/2*n.
Rational sigma_lower_bound(const Graph& g, const Budget& budget) {
    Rational best(g.vertex_count());
    Rational root(isqrt_ceil(Integer(static_cast<long>(8 * g.edge_count()))));
    if (root > best) best = root;
    try {
        if (is_vertex_transitive(g, budget)) {
            Rational vt = Rational(clique_number(g) + 1, 2) * Rational(g.vertex_count());
            if (vt > best) best = vt;
        }
    } catch (const BudgetExceeded&) {
    }
    return best;
}

int cmd_hom(const std::string& g_path, const std::string& h_path, bool obstruct_only,
            std::optional<std::uint64_t> budget_flag, bool json) {
    Graph g = load_graph(g_path);
    Graph h = load_graph(h_path);
    Budget budget = resolve_budget(budget_flag);

    OutputEnvelope env;
    env.command = obstruct_only ? "hom --obstruct-only" : "hom";
    env.input = fingerprint(g);

    // Sound sigma surrogates: a lower bound for G, an upper bound for H.
    SumResult sum_g = chromatic_sum_exact(g, budget);
    Rational sigma_g = sum_g.optimal ? Rational(sum_g.sigma) : sigma_lower_bound(g, budget);
    SumResult sum_h = chromatic_sum_exact(h, budget);
    Rational sigma_h(sum_h.sigma);  // best-found coloring sum is always an upper bound

    ObstructionVerdict verdict = obstruction_test(g, h, sigma_g, sigma_h, budget);
    env.stats.nodes = sum_g.stats.nodes + sum_h.stats.nodes;
    Json payload{{"obstruction", obstruction_to_json(verdict)},
                 {"sigma_g", rational_to_json(sigma_g)},
                 {"sigma_g_exact", sum_g.optimal},
                 {"sigma_h", rational_to_json(sigma_h)},
                 {"sigma_h_exact", sum_h.optimal}};

    if (verdict.outcome == ObstructionOutcome::NoHomomorphismProven) {
        payload["verdict"] = "no-homomorphism";
        payload["source"] = "obstruction";
        env.result = payload;
        emit(env, json);
        if (!json)
            std::cout << "no homomorphism (obstruction: " << verdict.ratio_g.to_string() << " > "
                      << verdict.ratio_h.to_string() << ")\n";
        return kExitOk;
    }

    if (obstruct_only) {
        payload["verdict"] = "unknown";
        env.exact = false;
        env.result = payload;
        emit(env, json);
        if (!json) std::cout << "obstruction inconclusive: " << verdict.reason << "\n";
        return kExitOk;
    }

    HomSearchResult search = find_homomorphism(g, h, budget);
    env.stats.nodes += search.stats.nodes;
    switch (search.status) {
        case HomStatus::Found: {
            payload["verdict"] = "homomorphism-exists";
            payload["witness"] = search.witness->mapping();
            env.result = payload;
            emit(env, json);
            if (!json) {
                std::cout << "homomorphism found:\n";
                for (int v = 0; v < g.vertex_count(); ++v)
                    std::cout << "  " << (v + 1) << " -> " << (search.witness->image(v) + 1)
                              << "\n";
            }
            break;
        }
        case HomStatus::NoneExists:
            payload["verdict"] = "no-homomorphism";
            payload["source"] = "exhaustive search";
            env.result = payload;
            emit(env, json);
            if (!json) std::cout << "no homomorphism (exhaustive search)\n";
            break;
        case HomStatus::Unknown:
            payload["verdict"] = "unknown";
            env.exact = false;
            env.result = payload;
            emit(env, json);
            if (!json) std::cout << "unknown (budget exhausted before the search completed)\n";
            break;
    }
    return kExitOk;
}

int cmd_kneser_explore(int max_m, int max_n, std::optional<std::uint64_t> budget_flag, bool json) {
    if (max_n < 1 || max_m < 2 * max_n) throw UsageError("need max-m >= 2*max-n and max-n >= 1");
    std::vector<ConjectureRow> rows = explore(max_m, max_n, resolve_budget(budget_flag));

    OutputEnvelope env;
    env.command = "kneser-explore";
    Json arr = Json::array();
    for (const auto& row : rows) {
        arr.push_back(conjecture_row_to_json(row));
        env.stats.nodes += row.stats.nodes;
        if (row.verdict == ConjectureVerdict::Unknown) env.exact = false;
    }
    env.result = Json{{"rows", arr}};
    emit(env, json);
    if (!json) std::cout << render_table(rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumcol: exact chromatic sum toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph as a DIMACS file");
    std::string gen_family;
    std::vector<std::string> gen_params;
    std::string gen_out;
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("family", gen_family,
                    "kneser | circular | complete | cycle | path | petersen | gnp")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("-o,--out", gen_out, "output path")->required();
    gen->add_option("--seed", gen_seed, "required for gnp");

    auto add_common = [](CLI::App* cmd, std::optional<std::uint64_t>& budget, bool& json) {
        cmd->add_option("--budget", budget, "node budget for exact searches");
        cmd->add_flag("--json", json, "machine-readable output");
    };

    // sum
    auto* sum = app.add_subcommand("sum", "chromatic sum of a DIMACS graph");
    std::string sum_path;
    std::optional<std::uint64_t> sum_budget;
    bool sum_json = false, sum_witness = false;
    bool sum_exact = false, sum_greedy = false, sum_peel = false;
    sum->add_option("path", sum_path)->required();
    sum->add_flag("--exact", sum_exact, "exact branch and bound (default)");
    sum->add_flag("--greedy", sum_greedy, "greedy coloring upper bound");
    sum->add_flag("--peel", sum_peel, "maximum-independent-set peeling upper bound");
    sum->add_flag("--witness", sum_witness, "print the coloring");
    add_common(sum, sum_budget, sum_json);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower/upper bound chain on the chromatic sum");
    std::string bounds_path;
    std::optional<std::uint64_t> bounds_budget;
    bool bounds_json = false, bounds_no_chi = false, bounds_no_chif = false;
    bounds->add_option("path", bounds_path)->required();
    bounds->add_flag("--no-chi", bounds_no_chi, "skip the chromatic number solver");
    bounds->add_flag("--no-chif", bounds_no_chif, "skip the fractional chromatic number");
    add_common(bounds, bounds_budget, bounds_json);

    // chi
    auto* chi = app.add_subcommand("chi", "chromatic number");
    std::string chi_path;
    std::optional<std::uint64_t> chi_budget;
    bool chi_json = false;
    chi->add_option("path", chi_path)->required();
    add_common(chi, chi_budget, chi_json);

    // chif
    auto* chif = app.add_subcommand("chif", "fractional chromatic number (exact LP)");
    std::string chif_path;
    std::optional<std::uint64_t> chif_budget;
    bool chif_json = false, chif_shortcut = false;
    chif->add_option("path", chif_path)->required();
    chif->add_flag("--shortcut", chif_shortcut, "use |G|/alpha on vertex-transitive graphs");
    add_common(chif, chif_budget, chif_json);

    // hom
    auto* hom = app.add_subcommand("hom", "homomorphism existence G -> H");
    std::string hom_g, hom_h;
    std::optional<std::uint64_t> hom_budget;
    bool hom_json = false, hom_obstruct = false;
    hom->add_option("g_path", hom_g)->required();
    hom->add_option("h_path", hom_h)->required();
    hom->add_flag("--obstruct-only", hom_obstruct, "skip the exhaustive search");
    add_common(hom, hom_budget, hom_json);

    // kneser-explore
    auto* kx = app.add_subcommand("kneser-explore", "conjecture table for sigma(KG(m,n))");
    int kx_max_m = 6, kx_max_n = 2;
    std::optional<std::uint64_t> kx_budget;
    bool kx_json = false;
    kx->add_option("--max-m", kx_max_m, "largest m (default 6)");
    kx->add_option("--max-n", kx_max_n, "largest n (default 2)");
    add_common(kx, kx_budget, kx_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_family, gen_params, gen_out, gen_seed);
        if (sum->parsed()) {
            if (sum_exact + sum_greedy + sum_peel > 1)
                throw UsageError("choose one of --exact, --greedy, --peel");
            std::string mode = sum_greedy ? "greedy" : sum_peel ? "peel" : "exact";
            return cmd_sum(sum_path, mode, sum_budget, sum_json, sum_witness);
        }
        if (bounds->parsed())
            return cmd_bounds(bounds_path, !bounds_no_chi, !bounds_no_chif, bounds_budget,
                              bounds_json);
        if (chi->parsed()) return cmd_chi(chi_path, chi_budget, chi_json);
        if (chif->parsed()) return cmd_chif(chif_path, chif_shortcut, chif_budget, chif_json);
        if (hom->parsed()) return cmd_hom(hom_g, hom_h, hom_obstruct, hom_budget, hom_json);
        if (kx->parsed()) return cmd_kneser_explore(kx_max_m, kx_max_n, kx_budget, kx_json);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
