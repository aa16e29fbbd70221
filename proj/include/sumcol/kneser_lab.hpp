#ifndef SUMCOL_KNESER_LAB_HPP
#define SUMCOL_KNESER_LAB_HPP

#include <optional>
#include <string>
#include <vector>

#include "sumcol/budget.hpp"
#include "sumcol/rational.hpp"

namespace sumcol {

enum class ConjectureVerdict {
    Match,                // exact sum equals the conjectured closed form
    ExactBelowConjecture, // exact sum is strictly below it
    Unknown,              // budget ran out before the solver finished
};

/// One row of the conjecture table for sigma(KG(m,n)). The closed form is a
/// proven upper bound, so a completed exact value can only match it or fall
/// below; an exact value above it signals an implementation bug and aborts.
struct ConjectureRow {
    int m = 0;
    int n = 0;
    long long vertices = 0;
    std::optional<long long> exact_sigma;   // absent when the budget ran out
    long long star_peel_sigma = 0;
    Rational conjectured;
    ConjectureVerdict verdict = ConjectureVerdict::Unknown;
    std::optional<long long> best_upper;    // best known upper bound when Unknown
    SearchStats stats;
};

/// Builds KG(m,n), runs the exact solver under the budget, evaluates the
/// star-peel coloring and the closed form, and compares. Never records a
/// guess: a truncated search yields Unknown with the best known upper bound.
ConjectureRow conjecture_check(int m, int n, const Budget& budget = {});

/// All valid (m,n) with n <= max_n and 2n <= m <= max_m, sorted by
/// (vertex count, m, n). Per-row budget failures are recorded in the row and
/// never abort the sweep.
std::vector<ConjectureRow> explore(int max_m, int max_n, const Budget& budget = {});

/// Aligned text rendering of the table, deterministic byte-for-byte.
std::string render_table(const std::vector<ConjectureRow>& rows);

}  // namespace sumcol

#endif
