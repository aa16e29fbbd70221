#ifndef SUMCOL_SRC_SUBSETS_HPP
#define SUMCOL_SRC_SUBSETS_HPP

#include <vector>

namespace sumcol::detail {

/// All n-subsets of {1..m} in lexicographic order; the vertex order of
/// kneser(m, n).
inline std::vector<std::vector<int>> subsets_lex(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == m - (n - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

inline bool subsets_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

}  // namespace sumcol::detail

#endif
