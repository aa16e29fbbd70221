#ifndef SUMCOL_BUDGET_HPP
#define SUMCOL_BUDGET_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace sumcol {

/// Search budget. Node counts are the preferred limit (reproducible across
/// machines); wall-clock seconds are optional.
struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;

    bool unlimited() const { return !max_nodes && !max_seconds; }

    static Budget nodes(std::uint64_t n) { return Budget{n, std::nullopt}; }
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Thrown by operations that cannot return a sound partial result when the
/// budget runs out (orbit computation, maximal-independent-set enumeration,
/// exactness-requiring wrappers).
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sumcol

#endif
