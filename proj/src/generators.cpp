#include "sumcol/generators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "subsets.hpp"

namespace sumcol {

namespace {

std::string subset_label(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Graph kneser(int m, int n) {
    if (n < 1) throw std::invalid_argument("kneser: n must be >= 1");
    if (m < 2 * n) throw std::invalid_argument("kneser: m must be >= 2n");
    auto subsets = detail::subsets_lex(m, n);
    std::vector<std::string> labels;
    labels.reserve(subsets.size());
    for (const auto& s : subsets) labels.push_back(subset_label(s));
    Graph g(static_cast<int>(subsets.size()), std::move(labels));
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            if (detail::subsets_disjoint(subsets[i], subsets[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph circular_complete(int p, int q) {
    if (q < 1) throw std::invalid_argument("circular_complete: q must be >= 1");
    if (p < 2 * q) throw std::invalid_argument("circular_complete: p must be >= 2q");
    Graph g(p);
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            int d = std::min(j - i, p - (j - i));
            if (d >= q && d <= p - q) g.add_edge(i, j);
        }
    }
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph petersen() { return kneser(5, 2); }

Graph random_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_gnp: n must be >= 1");
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("random_gnp: p must lie in [0,1]");
    Integer num = p.numerator();
    Integer den = p.denominator();
    if (!num.fits_ulong_p() || !den.fits_ulong_p())
        throw std::invalid_argument("random_gnp: p numerator/denominator too large");
    unsigned long long un = num.get_ui();
    unsigned long long ud = den.get_ui();
    Graph g(n);
    std::uint64_t state = seed;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t r = splitmix64(state);
            // edge iff r/2^64 < num/den, compared exactly in 128 bits
            bool edge = static_cast<unsigned __int128>(r) * ud <
                        (static_cast<unsigned __int128>(un) << 64);
            if (edge) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace sumcol
