#pragma once

// The adjacency algebra in its standard basis {A(R)}: products through the
// intersection numbers and the left regular representation.

#include "cellalg/scheme.hpp"

#include <stdexcept>
#include <type_traits>
#include <vector>

namespace cellalg {

/// Coefficients with respect to the standard basis, indexed by relation.
template <class T>
struct AlgebraElement {
    std::vector<T> coeffs;

    std::size_t rank() const noexcept { return coeffs.size(); }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

template <class Field>
AlgebraElement<typename Field::value_type> basis_element(const Field& f, std::size_t rank, Relation rel)
{
    AlgebraElement<typename Field::value_type> e{std::vector<typename Field::value_type>(rank, f.zero())};
    e.coeffs.at(rel) = f.one();
    return e;
}

/// I_V = sum of the diagonal relations.
template <class Field>
AlgebraElement<typename Field::value_type> identity_element(const Field& f, const Scheme& scheme)
{
    AlgebraElement<typename Field::value_type> e{std::vector<typename Field::value_type>(scheme.rank(), f.zero())};
    for (Relation rel = 0; rel < scheme.cell_count(); ++rel)
        e.coeffs[rel] = f.one();
    return e;
}

template <class Field, class Coeff>
Coeff embed_count(const Field& f, std::uint32_t c)
{
    if constexpr (std::is_same_v<Field, PrimeField>)
        return f.reduce(static_cast<std::int64_t>(c));
    else
        return Coeff(c);
}

/// z_T = sum over R, S of x_R y_S c_{R,S}^T.
template <class Field>
AlgebraElement<typename Field::value_type> multiply(const Field& f, const AlgebraElement<typename Field::value_type>& x,
                                                    const AlgebraElement<typename Field::value_type>& y,
                                                    const IntersectionTensor& tensor)
{
    using V = typename Field::value_type;
    const std::size_t r = tensor.rank();
    if (x.rank() != r || y.rank() != r)
        throw std::invalid_argument("algebra elements do not match the scheme rank");
    AlgebraElement<V> z{std::vector<V>(r, f.zero())};
    for (Relation a = 0; a < r; ++a) {
        if (f.is_zero(x.coeffs[a]))
            continue;
        for (Relation b = 0; b < r; ++b) {
            if (f.is_zero(y.coeffs[b]))
                continue;
            const V xy = f.mul(x.coeffs[a], y.coeffs[b]);
            for (const auto& term : tensor.terms(a, b))
                z.coeffs[term.t] = f.add(z.coeffs[term.t], f.mul(xy, embed_count<Field, V>(f, term.count)));
        }
    }
    return z;
}

template <class Field>
AlgebraElement<typename Field::value_type> add(const Field& f, const AlgebraElement<typename Field::value_type>& x,
                                               const AlgebraElement<typename Field::value_type>& y)
{
    if (x.rank() != y.rank())
        throw std::invalid_argument("algebra elements of different rank");
    auto z = x;
    for (std::size_t i = 0; i < z.rank(); ++i)
        z.coeffs[i] = f.add(z.coeffs[i], y.coeffs[i]);
    return z;
}

/// Matrix of left multiplication by A(R): entry [T][S] = c_{R,S}^T.
inline Matrix<std::int64_t> regular_matrix(Relation rel, const IntersectionTensor& tensor)
{
    const std::size_t r = tensor.rank();
    if (rel >= r)
        throw std::out_of_range("relation index out of range");
    Matrix<std::int64_t> m(r, r, 0);
    for (Relation s = 0; s < r; ++s)
        for (const auto& term : tensor.terms(rel, s))
            m(term.t, s) = term.count;
    return m;
}

} // namespace cellalg
