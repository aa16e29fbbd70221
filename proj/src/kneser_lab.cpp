#include "sumcol/kneser_lab.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "sumcol/bounds.hpp"
#include "sumcol/exact.hpp"
#include "sumcol/generators.hpp"

namespace sumcol {

ConjectureRow conjecture_check(int m, int n, const Budget& budget) {
    if (n < 1 || m < 2 * n)
        throw std::invalid_argument("conjecture_check: need m >= 2n >= 2");
    Graph kg = kneser(m, n);

    ConjectureRow row;
    row.m = m;
    row.n = n;
    row.vertices = kg.vertex_count();
    row.conjectured = kneser_upper_formula(m, n);

    Coloring peel = kneser_star_peel(kg, m, n);
    row.star_peel_sigma = peel.sum();
    if (Rational(row.star_peel_sigma) != row.conjectured)
        throw std::logic_error("conjecture_check: star-peel sum deviates from the closed form");

    SumResult sum = chromatic_sum_exact(kg, budget);
    row.stats = sum.stats;
    if (sum.optimal) {
        row.exact_sigma = sum.sigma;
        if (Rational(sum.sigma) > row.conjectured)
            throw std::logic_error(
                "conjecture_check: exact sum above the proven upper bound; solver bug");
        row.verdict = Rational(sum.sigma) == row.conjectured
                          ? ConjectureVerdict::Match
                          : ConjectureVerdict::ExactBelowConjecture;
        row.best_upper = sum.sigma;
    } else {
        row.verdict = ConjectureVerdict::Unknown;
        row.best_upper = std::min(sum.sigma, row.star_peel_sigma);
    }
    return row;
}

std::vector<ConjectureRow> explore(int max_m, int max_n, const Budget& budget) {
    if (max_n < 1 || max_m < 2)
        throw std::invalid_argument("explore: need max_m >= 2 and max_n >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int n = 1; n <= max_n; ++n)
        for (int m = 2 * n; m <= max_m; ++m) pairs.emplace_back(m, n);
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        Integer ca = binomial(static_cast<unsigned long>(a.first), static_cast<unsigned long>(a.second));
        Integer cb = binomial(static_cast<unsigned long>(b.first), static_cast<unsigned long>(b.second));
        if (ca != cb) return ca < cb;
        return a < b;
    });
    std::vector<ConjectureRow> rows;
    rows.reserve(pairs.size());
    for (const auto& [m, n] : pairs) rows.push_back(conjecture_check(m, n, budget));
    return rows;
}

std::string render_table(const std::vector<ConjectureRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(10) << "vertices"
        << std::setw(12) << "exact" << std::setw(11) << "star-peel" << std::setw(13)
        << "conjectured" << "verdict" << "\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(4) << row.m << std::setw(4) << row.n << std::setw(10)
            << row.vertices;
        if (row.exact_sigma)
            out << std::setw(12) << *row.exact_sigma;
        else if (row.best_upper)
            out << std::setw(12) << ("<=" + std::to_string(*row.best_upper));
        else
            out << std::setw(12) << "?";
        out << std::setw(11) << row.star_peel_sigma << std::setw(13) << row.conjectured.to_string();
        switch (row.verdict) {
            case ConjectureVerdict::Match: out << "match"; break;
            case ConjectureVerdict::ExactBelowConjecture: out << "below"; break;
            case ConjectureVerdict::Unknown: out << "unknown"; break;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace sumcol
