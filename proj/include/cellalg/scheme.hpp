#pragma once

// Coherent configurations given by a color matrix: axiom validation,
// cells and fibers, intersection numbers, valencies and classification.

#include "cellalg/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cellalg {

using Point = std::size_t;
using Relation = std::size_t;
using Cell = std::size_t;
using ColorMatrix = Matrix<std::int64_t>;

class SchemeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violation of one of C1 (partition), C2 (diagonal) or C3 (transpose).
class AxiomError : public SchemeError {
public:
    AxiomError(std::string axiom, const std::string& what) : SchemeError(axiom + ": " + what), axiom_(std::move(axiom))
    {
    }
    const std::string& axiom() const noexcept { return axiom_; }

private:
    std::string axiom_;
};

/// Violation of C4: two pairs of the same relation T with different
/// midpoint counts for the color pair (R, S).
class RegularityError : public SchemeError {
public:
    struct Witness {
        Relation r, s, t;
        std::pair<Point, Point> first, second;
        std::uint32_t first_count, second_count;
    };

    explicit RegularityError(const Witness& w) : SchemeError(describe(w)), witness_(w) {}
    const Witness& witness() const noexcept { return witness_; }

private:
    static std::string describe(const Witness& w)
    {
        std::ostringstream os;
        os << "C4: c(" << w.r << "," << w.s << ";" << w.t << ") is not constant: pair (" << w.first.first << ","
           << w.first.second << ") has " << w.first_count << " midpoints, pair (" << w.second.first << ","
           << w.second.second << ") has " << w.second_count;
        return os.str();
    }
    Witness witness_;
};

/// An internal consistency check failed. Never a user input problem.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A color matrix satisfying C1-C3, with relations renumbered canonically:
/// diagonal relations first (ordered by their first point), then the rest
/// in row-major order of first occurrence.
class Scheme {
public:
    std::size_t size() const noexcept { return n_; }
    std::size_t rank() const noexcept { return r_; }

    Relation color(Point u, Point v) const { return colors_[u * n_ + v]; }
    Relation transpose_of(Relation rel) const { return transpose_[rel]; }
    bool is_diagonal(Relation rel) const { return rel < cells_.size(); }

    /// Diagonal relations are exactly 0 .. cell_count()-1 and Δ(cell i) = i.
    std::size_t cell_count() const noexcept { return cells_.size(); }
    const std::vector<std::vector<Point>>& cells() const noexcept { return cells_; }
    Cell cell_of(Point u) const { return cell_of_[u]; }

    /// (source cell, target cell) of the first occurrence of the relation;
    /// every occurrence agrees once verify_regularity succeeded.
    std::pair<Cell, Cell> fiber_of(Relation rel) const { return fiber_[rel]; }

    ColorMatrix color_matrix() const
    {
        ColorMatrix m(n_, n_);
        for (Point u = 0; u < n_; ++u)
            for (Point v = 0; v < n_; ++v)
                m(u, v) = static_cast<std::int64_t>(color(u, v));
        return m;
    }

    friend bool operator==(const Scheme& a, const Scheme& b) { return a.n_ == b.n_ && a.colors_ == b.colors_; }

    friend Scheme from_color_matrix(const ColorMatrix& matrix);

private:
    Scheme() = default;

    std::size_t n_ = 0;
    std::size_t r_ = 0;
    std::vector<Relation> colors_;
    std::vector<Relation> transpose_;
    std::vector<std::vector<Point>> cells_;
    std::vector<Cell> cell_of_;
    std::vector<std::pair<Cell, Cell>> fiber_;
};

inline Scheme from_color_matrix(const ColorMatrix& matrix)
{
    if (!matrix.square())
        throw SchemeError("color matrix is not square");
    const std::size_t n = matrix.rows();
    if (n == 0)
        throw SchemeError("color matrix is empty");

    std::int64_t max_color = -1;
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v) {
            const auto c = matrix(u, v);
            if (c < 0)
                throw AxiomError("C1", "negative color " + std::to_string(c) + " at (" + std::to_string(u) + "," +
                                           std::to_string(v) + ")");
            max_color = std::max(max_color, c);
        }
    if (static_cast<std::uint64_t>(max_color) >= n * n)
        throw AxiomError("C1", "color " + std::to_string(max_color) + " exceeds the number of pairs");
    const auto r = static_cast<std::size_t>(max_color) + 1;

    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> count(r, 0);
    std::vector<std::pair<Point, Point>> diag_witness(r, {unset, unset});
    std::vector<std::pair<Point, Point>> off_witness(r, {unset, unset});
    std::vector<std::size_t> transpose(r, unset);
    std::vector<std::pair<Point, Point>> transpose_witness(r);

    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v) {
            const auto c = static_cast<std::size_t>(matrix(u, v));
            ++count[c];
            auto& w = (u == v) ? diag_witness[c] : off_witness[c];
            if (w.first == unset)
                w = {u, v};
        }

    for (std::size_t c = 0; c < r; ++c) {
        if (count[c] == 0)
            throw AxiomError("C1", "missing color index " + std::to_string(c));
        if (diag_witness[c].first != unset && off_witness[c].first != unset)
            throw AxiomError("C2", "relation " + std::to_string(c) + " contains diagonal pair (" +
                                       std::to_string(diag_witness[c].first) + "," +
                                       std::to_string(diag_witness[c].first) + ") and off-diagonal pair (" +
                                       std::to_string(off_witness[c].first) + "," +
                                       std::to_string(off_witness[c].second) + ")");
    }

    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v) {
            const auto c = static_cast<std::size_t>(matrix(u, v));
            const auto t = static_cast<std::size_t>(matrix(v, u));
            if (transpose[c] == unset) {
                transpose[c] = t;
                transpose_witness[c] = {u, v};
            } else if (transpose[c] != t) {
                const auto [a, b] = transpose_witness[c];
                throw AxiomError("C3", "transpose of relation " + std::to_string(c) + " is not a single relation: (" +
                                           std::to_string(b) + "," + std::to_string(a) + ") has color " +
                                           std::to_string(transpose[c]) + " but (" + std::to_string(v) + "," +
                                           std::to_string(u) + ") has color " + std::to_string(t));
            }
        }

    // Canonical renumbering.
    std::vector<std::size_t> relabel(r, unset);
    std::size_t next = 0;
    for (Point u = 0; u < n; ++u) {
        const auto c = static_cast<std::size_t>(matrix(u, u));
        if (relabel[c] == unset)
            relabel[c] = next++;
    }
    const std::size_t cell_count = next;
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v) {
            const auto c = static_cast<std::size_t>(matrix(u, v));
            if (relabel[c] == unset)
                relabel[c] = next++;
        }

    Scheme s;
    s.n_ = n;
    s.r_ = r;
    s.colors_.resize(n * n);
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v)
            s.colors_[u * n + v] = relabel[static_cast<std::size_t>(matrix(u, v))];
    s.transpose_.resize(r);
    for (std::size_t c = 0; c < r; ++c)
        s.transpose_[relabel[c]] = relabel[transpose[c]];

    s.cells_.resize(cell_count);
    s.cell_of_.resize(n);
    for (Point u = 0; u < n; ++u) {
        const Cell x = s.colors_[u * n + u];
        s.cells_[x].push_back(u);
        s.cell_of_[u] = x;
    }
    s.fiber_.assign(r, {unset, unset});
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v) {
            auto& fib = s.fiber_[s.colors_[u * n + v]];
            if (fib.first == unset)
                fib = {s.cell_of_[u], s.cell_of_[v]};
        }
    return s;
}

/// Structure constants c[R][S][T] = c_{R,S}^T, stored densely with a sparse
/// view of the nonzero T for each (R, S).
class IntersectionTensor {
public:
    struct Term {
        Relation t;
        std::uint32_t count;
    };

    IntersectionTensor() = default;
    explicit IntersectionTensor(std::size_t r) : r_(r), dense_(r * r * r, 0), terms_(r * r) {}

    std::size_t rank() const noexcept { return r_; }
    std::uint32_t operator()(Relation r, Relation s, Relation t) const { return dense_[(r * r_ + s) * r_ + t]; }
    const std::vector<Term>& terms(Relation r, Relation s) const { return terms_[r * r_ + s]; }

    friend bool operator==(const IntersectionTensor& a, const IntersectionTensor& b)
    {
        return a.r_ == b.r_ && a.dense_ == b.dense_;
    }

    friend IntersectionTensor verify_regularity(const Scheme& scheme);

private:
    void finalize()
    {
        for (Relation r = 0; r < r_; ++r)
            for (Relation s = 0; s < r_; ++s)
                for (Relation t = 0; t < r_; ++t)
                    if (auto c = (*this)(r, s, t))
                        terms_[r * r_ + s].push_back({t, c});
    }

    std::size_t r_ = 0;
    std::vector<std::uint32_t> dense_;
    std::vector<std::vector<Term>> terms_;
};

/// Certifies C4 and returns the intersection numbers. For every pair (u, w)
/// the midpoints are bucketed by their color pair and compared against the
/// first pair seen in the same relation.
inline IntersectionTensor verify_regularity(const Scheme& scheme)
{
    const std::size_t n = scheme.size();
    const std::size_t r = scheme.rank();
    constexpr auto unset = std::numeric_limits<std::size_t>::max();

    IntersectionTensor tensor(r);
    std::vector<std::size_t> nonzero(r, 0);
    std::vector<std::pair<Point, Point>> first_pair(r, {unset, unset});
    std::vector<std::uint32_t> scratch(r * r, 0);
    std::vector<std::size_t> touched;
    touched.reserve(n);

    for (Point u = 0; u < n; ++u)
        for (Point w = 0; w < n; ++w) {
            const Relation t = scheme.color(u, w);
            touched.clear();
            for (Point v = 0; v < n; ++v) {
                const std::size_t key = scheme.color(u, v) * r + scheme.color(v, w);
                if (scratch[key]++ == 0)
                    touched.push_back(key);
            }
            if (first_pair[t].first == unset) {
                first_pair[t] = {u, w};
                nonzero[t] = touched.size();
                for (auto key : touched)
                    tensor.dense_[key * r + t] = scratch[key];
            } else {
                std::optional<std::size_t> bad;
                for (auto key : touched)
                    if (scratch[key] != tensor.dense_[key * r + t]) {
                        bad = key;
                        break;
                    }
                if (!bad && touched.size() != nonzero[t]) {
                    for (std::size_t key = 0; key < r * r; ++key)
                        if (tensor.dense_[key * r + t] != 0 && scratch[key] == 0) {
                            bad = key;
                            break;
                        }
                }
                if (bad)
                    throw RegularityError({*bad / r, *bad % r, t, first_pair[t], {u, w},
                                           tensor.dense_[*bad * r + t], scratch[*bad]});
            }
            for (auto key : touched)
                scratch[key] = 0;
        }
    tensor.finalize();
    return tensor;
}

struct RelationStat {
    std::uint64_t size = 0;
    std::uint64_t d_out = 0;
    std::uint64_t d_in = 0;
    Cell source = 0;
    Cell target = 0;
};

using RelationStats = std::vector<RelationStat>;

/// Per-relation cardinalities and valencies. Asserts the valency identities
/// and their agreement with the intersection numbers.
inline RelationStats stats(const Scheme& scheme, const IntersectionTensor& tensor)
{
    const std::size_t n = scheme.size();
    const std::size_t r = scheme.rank();
    RelationStats out(r);
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v)
            ++out[scheme.color(u, v)].size;

    for (Relation rel = 0; rel < r; ++rel) {
        auto& st = out[rel];
        std::tie(st.source, st.target) = scheme.fiber_of(rel);
        const auto& cells = scheme.cells();
        const Point u = cells[st.source].front();
        const Point v = cells[st.target].front();
        for (Point w = 0; w < n; ++w) {
            st.d_out += scheme.color(u, w) == rel;
            st.d_in += scheme.color(w, v) == rel;
        }
        const std::uint64_t x = cells[st.source].size();
        const std::uint64_t y = cells[st.target].size();
        if (x * st.d_out != st.size || y * st.d_in != st.size)
            throw InvariantViolation("|X| d_out(R) = |R| = |Y| d_in(R) fails for relation " + std::to_string(rel));
        const Relation rt = scheme.transpose_of(rel);
        if (tensor(rel, rt, st.source) != st.d_out || tensor(rt, rel, st.target) != st.d_in)
            throw InvariantViolation("valency disagrees with intersection numbers for relation " +
                                     std::to_string(rel));
    }

    const std::size_t cells = scheme.cell_count();
    std::vector<std::uint64_t> out_sum(cells * cells, 0), in_sum(cells * cells, 0);
    for (const auto& st : out) {
        out_sum[st.source * cells + st.target] += st.d_out;
        in_sum[st.source * cells + st.target] += st.d_in;
    }
    for (Cell x = 0; x < cells; ++x)
        for (Cell y = 0; y < cells; ++y)
            if (out_sum[x * cells + y] != scheme.cells()[y].size() ||
                in_sum[x * cells + y] != scheme.cells()[x].size())
                throw InvariantViolation("fiber valency sums fail for cells " + std::to_string(x) + "," +
                                         std::to_string(y));
    return out;
}

struct Classification {
    bool homogeneous = false;
    bool commutative = false;
    bool symmetric = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};

inline Classification classify(const Scheme& scheme, const IntersectionTensor& tensor)
{
    const std::size_t r = scheme.rank();
    Classification c;
    c.homogeneous = scheme.cell_count() == 1;
    c.commutative = true;
    for (Relation a = 0; a < r && c.commutative; ++a)
        for (Relation b = a + 1; b < r && c.commutative; ++b)
            for (Relation t = 0; t < r; ++t)
                if (tensor(a, b, t) != tensor(b, a, t)) {
                    c.commutative = false;
                    break;
                }
    c.symmetric = true;
    for (Relation a = 0; a < r; ++a)
        c.symmetric = c.symmetric && scheme.transpose_of(a) == a;
    if ((c.symmetric && !c.commutative) || (c.commutative && !c.homogeneous))
        throw InvariantViolation("symmetric => commutative => homogeneous fails");
    return c;
}

/// A scheme that passed every axiom, bundled with its derived data.
class CoherentConfiguration {
public:
    explicit CoherentConfiguration(Scheme scheme)
        : scheme_(std::move(scheme)), tensor_(verify_regularity(scheme_)), stats_(cellalg::stats(scheme_, tensor_))
    {
    }

    const Scheme& scheme() const noexcept { return scheme_; }
    const IntersectionTensor& tensor() const noexcept { return tensor_; }
    const RelationStats& stats() const noexcept { return stats_; }

    std::size_t size() const noexcept { return scheme_.size(); }
    std::size_t rank() const noexcept { return scheme_.rank(); }

    std::vector<std::uint64_t> cell_sizes() const
    {
        std::vector<std::uint64_t> out;
        for (const auto& c : scheme_.cells())
            out.push_back(c.size());
        return out;
    }

private:
    Scheme scheme_;
    IntersectionTensor tensor_;
    RelationStats stats_;
};

inline CoherentConfiguration certify(const ColorMatrix& matrix) { return CoherentConfiguration(from_color_matrix(matrix)); }

} // namespace cellalg
