#pragma once

// Scheme constructors: orbitals of permutation groups, thin schemes of
// abstract groups, and the standard parametric families.

#include "cellalg/scheme.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellalg {

class Permutation {
public:
    explicit Permutation(std::vector<Point> image) : image_(std::move(image))
    {
        std::vector<bool> seen(image_.size(), false);
        for (auto x : image_) {
            if (x >= image_.size() || seen[x])
                throw std::invalid_argument("image array is not a permutation");
            seen[x] = true;
        }
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<Point> id(n);
        std::iota(id.begin(), id.end(), Point{0});
        return Permutation(std::move(id));
    }

    /// Disjoint cycles on n points, e.g. {{0, 1}, {2, 3, 4}}.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles)
    {
        std::vector<Point> image(n);
        std::iota(image.begin(), image.end(), Point{0});
        for (const auto& cyc : cycles)
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (cyc[i] >= n)
                    throw std::invalid_argument("cycle point out of range");
                image[cyc[i]] = cyc[(i + 1) % cyc.size()];
            }
        return Permutation(std::move(image));
    }

    std::size_t degree() const noexcept { return image_.size(); }
    Point operator()(Point x) const { return image_[x]; }
    const std::vector<Point>& image() const noexcept { return image_; }

private:
    std::vector<Point> image_;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace detail

/// Inv(G): colors are the orbits of <generators> on V x V. The group itself
/// is never enumerated.
inline Scheme schurian(const std::vector<Permutation>& generators, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("schurian scheme needs at least one point");
    for (const auto& g : generators)
        if (g.degree() != n)
            throw std::invalid_argument("generator of degree " + std::to_string(g.degree()) + " on " +
                                        std::to_string(n) + " points");
    detail::UnionFind uf(n * n);
    for (const auto& g : generators)
        for (Point u = 0; u < n; ++u)
            for (Point v = 0; v < n; ++v)
                uf.unite(u * n + v, g(u) * n + g(v));
    ColorMatrix colors(n, n);
    std::vector<std::int64_t> label(n * n, -1);
    std::int64_t next = 0;
    for (std::size_t i = 0; i < n * n; ++i) {
        const auto root = uf.find(i);
        if (label[root] < 0)
            label[root] = next++;
        colors(i / n, i % n) = label[root];
    }
    return from_color_matrix(colors);
}

/// Multiplication table of a finite group on 0..n-1.
class GroupTable {
public:
    GroupTable(std::size_t order, std::vector<std::size_t> table) : n_(order), mul_(std::move(table)) { validate(); }

    std::size_t order() const noexcept { return n_; }
    std::size_t operator()(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }

    bool abelian() const
    {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if ((*this)(a, b) != (*this)(b, a))
                    return false;
        return true;
    }

private:
    void validate()
    {
        if (n_ == 0 || mul_.size() != n_ * n_)
            throw std::invalid_argument("group table has wrong shape");
        for (auto x : mul_)
            if (x >= n_)
                throw std::invalid_argument("group table is not closed");
        bool found = false;
        for (std::size_t e = 0; e < n_ && !found; ++e) {
            bool ok = true;
            for (std::size_t a = 0; a < n_ && ok; ++a)
                ok = (*this)(e, a) == a && (*this)(a, e) == a;
            if (ok) {
                identity_ = e;
                found = true;
            }
        }
        if (!found)
            throw std::invalid_argument("group table has no identity");
        inverse_.assign(n_, n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if ((*this)(a, b) == identity_ && (*this)(b, a) == identity_)
                    inverse_[a] = b;
        for (auto inv : inverse_)
            if (inv == n_)
                throw std::invalid_argument("group table has an element without inverse");
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c)
                    if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c)))
                        throw std::invalid_argument("group table is not associative");
    }

    std::size_t n_;
    std::vector<std::size_t> mul_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

inline GroupTable cyclic_group(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("cyclic group of order 0");
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = (a + b) % n;
    return GroupTable(n, std::move(t));
}

inline GroupTable direct_product(const GroupTable& g, const GroupTable& h)
{
    const std::size_t m = g.order(), k = h.order(), n = m * k;
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = g(a / k, b / k) * k + h(a % k, b % k);
    return GroupTable(n, std::move(t));
}

/// Group generated by the given permutations, elements numbered in BFS order
/// from the identity. Only for small groups.
inline GroupTable permutation_group_table(const std::vector<Permutation>& generators, std::size_t degree,
                                          std::size_t max_order = 5040)
{
    std::vector<std::vector<Point>> elems{Permutation::identity(degree).image()};
    auto compose = [](const std::vector<Point>& a, const std::vector<Point>& b) {
        std::vector<Point> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            c[i] = b[a[i]];
        return c;
    };
    auto index_of = [&](const std::vector<Point>& p) -> std::size_t {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == p)
                return i;
        return elems.size();
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : generators) {
            auto c = compose(elems[i], g.image());
            if (index_of(c) == elems.size()) {
                elems.push_back(std::move(c));
                if (elems.size() > max_order)
                    throw std::invalid_argument("permutation group exceeds order cap");
            }
        }
    const std::size_t n = elems.size();
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = index_of(compose(elems[a], elems[b]));
    return GroupTable(n, std::move(t));
}

inline GroupTable symmetric_group(std::size_t k)
{
    if (k == 0 || k > 5)
        throw std::invalid_argument("symmetric group degree must be in 1..5");
    if (k == 1)
        return cyclic_group(1);
    std::vector<Point> cycle(k);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    return permutation_group_table({Permutation::from_cycles(k, {{0, 1}}), Permutation::from_cycles(k, {cycle})}, k);
}

/// Dihedral group of order 2m.
inline GroupTable dihedral_group(std::size_t m)
{
    if (m < 2)
        throw std::invalid_argument("dihedral group needs m >= 2");
    if (m == 2)
        return direct_product(cyclic_group(2), cyclic_group(2));
    std::vector<Point> rot(m), refl(m);
    for (std::size_t i = 0; i < m; ++i) {
        rot[i] = (i + 1) % m;
        refl[i] = (m - i) % m;
    }
    return permutation_group_table({Permutation(rot), Permutation(refl)}, m);
}

/// Quaternion group Q8. Elements 0..7 are 1, i, j, k, -1, -i, -j, -k.
inline GroupTable quaternion_group()
{
    // unit_product[a][b] = product of units a, b as an element index.
    static constexpr std::size_t unit_product[4][4] = {
        {0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
    std::vector<std::size_t> t(64);
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            std::size_t prod = unit_product[a % 4][b % 4];
            if ((a >= 4) != (b >= 4))
                prod = (prod + 4) % 8;
            t[a * 8 + b] = prod;
        }
    return GroupTable(8, std::move(t));
}

/// Relation R_g = {(x, xg)}: the color of (x, y) is x^{-1} y.
inline Scheme thin_group_scheme(const GroupTable& g)
{
    const std::size_t n = g.order();
    ColorMatrix colors(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            colors(x, y) = static_cast<std::int64_t>(g(g.inverse(x), y));
    return from_color_matrix(colors);
}

inline Scheme rank2(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("rank2 needs n >= 1");
    ColorMatrix colors(n, n, 1);
    for (std::size_t i = 0; i < n; ++i)
        colors(i, i) = 0;
    return from_color_matrix(colors);
}

inline Scheme discrete(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("discrete needs n >= 1");
    ColorMatrix colors(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            colors(u, v) = static_cast<std::int64_t>(u * n + v);
    return from_color_matrix(colors);
}

/// Colors by Hamming distance on q-ary words of length d.
inline Scheme hamming(std::size_t d, std::size_t q)
{
    if (d < 1 || q < 2)
        throw std::invalid_argument("hamming needs d >= 1 and q >= 2");
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        n *= q;
        if (n > 4096)
            throw std::invalid_argument("hamming scheme too large");
    }
    ColorMatrix colors(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::int64_t dist = 0;
            for (std::size_t x = a, y = b, i = 0; i < d; ++i, x /= q, y /= q)
                dist += (x % q) != (y % q);
            colors(a, b) = dist;
        }
    return from_color_matrix(colors);
}

/// Colors k-subsets of {0..v-1} by k - |A ∩ B|.
inline Scheme johnson(std::size_t v, std::size_t k)
{
    if (k < 1 || v <= k || v > 20)
        throw std::invalid_argument("johnson needs v > k >= 1 (and v <= 20)");
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t mask = 0; mask < (1u << v); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == k)
            subsets.push_back(mask);
    if (subsets.size() > 4096)
        throw std::invalid_argument("johnson scheme too large");
    const std::size_t n = subsets.size();
    ColorMatrix colors(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            colors(a, b) = static_cast<std::int64_t>(k) - std::popcount(subsets[a] & subsets[b]);
    return from_color_matrix(colors);
}

/// Disjoint union of the point sets, keeping both relation sets and adding
/// the full cross relations X x Y and Y x X for every cell X of a and every
/// cell Y of b. For homogeneous operands these are just V_a x V_b and
/// V_b x V_a; finer operands need one per cell pair to stay coherent.
inline Scheme direct_sum(const Scheme& a, const Scheme& b)
{
    const std::size_t na = a.size(), nb = b.size(), n = na + nb;
    const auto ra = static_cast<std::int64_t>(a.rank());
    const auto rb = static_cast<std::int64_t>(b.rank());
    const auto cb = static_cast<std::int64_t>(b.cell_count());
    const std::int64_t cross = ra + rb;
    const std::int64_t cross_pairs = static_cast<std::int64_t>(a.cell_count()) * cb;
    ColorMatrix colors(n, n);
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v) {
            if (u < na && v < na) {
                colors(u, v) = static_cast<std::int64_t>(a.color(u, v));
            } else if (u >= na && v >= na) {
                colors(u, v) = ra + static_cast<std::int64_t>(b.color(u - na, v - na));
            } else if (u < na) {
                const auto x = static_cast<std::int64_t>(a.cell_of(u));
                const auto y = static_cast<std::int64_t>(b.cell_of(v - na));
                colors(u, v) = cross + x * cb + y;
            } else {
                const auto x = static_cast<std::int64_t>(a.cell_of(v));
                const auto y = static_cast<std::int64_t>(b.cell_of(u - na));
                colors(u, v) = cross + cross_pairs + x * cb + y;
            }
        }
    return from_color_matrix(colors);
}

} // namespace cellalg
