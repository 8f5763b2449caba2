#pragma once

// Independent reference computations used as oracles by the unit tests.

#include <cellalg.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using namespace cellalg;

inline CoherentConfiguration cc(const std::string& spec) { return CoherentConfiguration(build_scheme(spec)); }

/// Laplace expansion along the first row.
inline BigInt det_cofactor(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    BigInt total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j)
                    minor(i - 1, c++) = m(i, k);
        const BigInt term = m(0, j) * det_cofactor(minor);
        total += (j % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

/// c_{R,S}^T by counting midpoints for every pair of T, checking constancy.
/// Returns an empty vector when some count is not constant.
inline std::vector<std::uint64_t> brute_tensor(const Scheme& s)
{
    const std::size_t n = s.size(), r = s.rank();
    std::vector<std::int64_t> c(r * r * r, -1);
    for (Point u = 0; u < n; ++u)
        for (Point w = 0; w < n; ++w) {
            const Relation t = s.color(u, w);
            for (Relation a = 0; a < r; ++a)
                for (Relation b = 0; b < r; ++b) {
                    std::int64_t count = 0;
                    for (Point v = 0; v < n; ++v)
                        count += s.color(u, v) == a && s.color(v, w) == b;
                    auto& slot = c[(a * r + b) * r + t];
                    if (slot == -1)
                        slot = count;
                    else if (slot != count)
                        return {};
                }
        }
    std::vector<std::uint64_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = c[i] < 0 ? 0 : static_cast<std::uint64_t>(c[i]);
    return out;
}

struct Relabeled {
    ColorMatrix matrix;
    std::vector<Point> perm; ///< old point u becomes perm[u]
};

/// Random point permutation plus a random renaming of the colors.
inline Relabeled relabel(const Scheme& s, std::uint64_t seed)
{
    const std::size_t n = s.size();
    std::vector<Point> perm(n);
    std::iota(perm.begin(), perm.end(), Point{0});
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::int64_t> colors(s.rank());
    std::iota(colors.begin(), colors.end(), 0);
    std::shuffle(colors.begin(), colors.end(), rng);
    ColorMatrix m(n, n);
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v)
            m(perm[u], perm[v]) = colors[s.color(u, v)];
    return {m, perm};
}

inline std::vector<std::uint64_t> sorted_relation_sizes(const CoherentConfiguration& c)
{
    std::vector<std::uint64_t> out;
    for (const auto& st : c.stats())
        out.push_back(st.size);
    std::sort(out.begin(), out.end());
    return out;
}

inline FpVector fp(std::initializer_list<std::uint32_t> v) { return FpVector(v); }

} // namespace testing_support
