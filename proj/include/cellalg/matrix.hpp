#pragma once

// Dense matrices and the exact kernels used throughout: reduced row echelon
// form over a field, kernels and ranks, the Bareiss determinant, and the
// characteristic polynomial over a field via Hessenberg reduction.

#include "cellalg/numeric.hpp"
#include "cellalg/prime_field.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cellalg {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n, const T& zero, const T& one)
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
    }

    void append_row(std::span<const T> values)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = values.size();
        if (values.size() != cols_)
            throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using FpMatrix = Matrix<PrimeField::value_type>;

template <class Field>
Matrix<typename Field::value_type> multiply(const Field& f, const Matrix<typename Field::value_type>& a,
                                            const Matrix<typename Field::value_type>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix<typename Field::value_type> c(a.rows(), b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (f.is_zero(aik))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

/// In-place reduced row echelon form. Pivots are the first nonzero entry in
/// column order; zero rows are dropped. Returns the pivot columns.
template <class Field>
std::vector<std::size_t> row_reduce(const Field& f, Matrix<typename Field::value_type>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < m.rows() && f.is_zero(m(sel, col)))
            ++sel;
        if (sel == m.rows())
            continue;
        m.swap_rows(sel, lead);
        const auto scale = f.inv(m(lead, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m(lead, j) = f.mul(m(lead, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || f.is_zero(m(i, col)))
                continue;
            const auto factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(lead, j)));
        }
        pivots.push_back(col);
        ++lead;
    }
    Matrix<typename Field::value_type> trimmed(0, m.cols());
    for (std::size_t i = 0; i < lead; ++i)
        trimmed.append_row(m.row(i));
    m = std::move(trimmed);
    return pivots;
}

template <class Field>
std::size_t rank(const Field& f, Matrix<typename Field::value_type> m)
{
    return row_reduce(f, m).size();
}

/// Right null space {x : m·x = 0}, returned as the rows of a matrix in
/// reduced row echelon form.
template <class Field>
Matrix<typename Field::value_type> kernel(const Field& f, Matrix<typename Field::value_type> m)
{
    const std::size_t cols = m.cols();
    const auto pivots = row_reduce(f, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    Matrix<typename Field::value_type> basis(0, cols);
    std::vector<typename Field::value_type> v(cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::fill(v.begin(), v.end(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(m(i, free));
        basis.append_row(v);
    }
    row_reduce(f, basis);
    return basis;
}

inline FpMatrix kernel_mod_p(const PrimeField& f, const FpMatrix& m) { return kernel(f, m); }
inline std::size_t rank_mod_p(const PrimeField& f, const FpMatrix& m) { return rank(f, m); }

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt det_fraction_free(IntMatrix m)
{
    if (!m.square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && m(i, k) == 0)
                ++i;
            if (i == n)
                return 0;
            m.swap_rows(i, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Coefficients (constant term first) of det(xI - m), computed by
/// similarity reduction to upper Hessenberg form.
template <class Field>
std::vector<typename Field::value_type> characteristic_polynomial(const Field& f,
                                                                  Matrix<typename Field::value_type> h)
{
    using V = typename Field::value_type;
    if (!h.square())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = h.rows();

    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && f.is_zero(h(i, m - 1)))
            ++i;
        if (i == n)
            continue;
        if (i != m) {
            h.swap_rows(i, m);
            for (std::size_t r = 0; r < n; ++r)
                std::swap(h(r, i), h(r, m));
        }
        const V pivot_inv = f.inv(h(m, m - 1));
        for (std::size_t j = m + 1; j < n; ++j) {
            const V u = f.mul(h(j, m - 1), pivot_inv);
            if (f.is_zero(u))
                continue;
            for (std::size_t c = 0; c < n; ++c)
                h(j, c) = f.sub(h(j, c), f.mul(u, h(m, c)));
            for (std::size_t r = 0; r < n; ++r)
                h(r, m) = f.add(h(r, m), f.mul(u, h(r, j)));
        }
    }

    // polys[k] is the characteristic polynomial of the leading k x k block.
    std::vector<std::vector<V>> polys(n + 1);
    polys[0] = {f.one()};
    for (std::size_t m = 1; m <= n; ++m) {
        auto& pm = polys[m];
        pm.assign(m + 1, f.zero());
        const auto& prev = polys[m - 1];
        const V diag = h(m - 1, m - 1);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            pm[d + 1] = f.add(pm[d + 1], prev[d]);
            pm[d] = f.sub(pm[d], f.mul(diag, prev[d]));
        }
        V t = f.one();
        for (std::size_t i = 1; i < m; ++i) {
            t = f.mul(t, h(m - i, m - i - 1));
            const V coeff = f.mul(t, h(m - i - 1, m - 1));
            if (f.is_zero(coeff))
                continue;
            const auto& q = polys[m - i - 1];
            for (std::size_t d = 0; d < q.size(); ++d)
                pm[d] = f.sub(pm[d], f.mul(coeff, q[d]));
        }
    }
    return polys[n];
}

/// Elementary symmetric function of degree k in the eigenvalues of m.
template <class Field>
typename Field::value_type eigen_symmetric(const Field& f, const Matrix<typename Field::value_type>& m,
                                           std::size_t k)
{
    const std::size_t n = m.rows();
    if (k > n)
        return f.zero();
    const auto chi = characteristic_polynomial(f, m);
    const auto c = chi[n - k];
    return (k % 2 == 0) ? c : f.neg(c);
}

} // namespace cellalg
