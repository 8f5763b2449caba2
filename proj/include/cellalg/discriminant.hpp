#pragma once

// Standard character, the Gram matrix of the standard trace form and its
// exact discriminant.

#include "cellalg/scheme.hpp"

#include <cstdint>
#include <vector>

namespace cellalg {

/// rho(A(R)) = |X| when R is the diagonal of cell X, else 0.
inline BigInt standard_character(const CoherentConfiguration& cc, Relation rel)
{
    const auto& s = cc.scheme();
    if (rel >= s.rank())
        throw std::out_of_range("relation index out of range");
    return s.is_diagonal(rel) ? BigInt(s.cells()[rel].size()) : BigInt(0);
}

struct GramMatrix {
    /// entry [R][S] = trace of A(R)A(S) on the standard module, relations in
    /// canonical scheme order.
    IntMatrix g;
};

/// Computed through the intersection numbers and checked against the
/// closed form delta_{S,R^t} |R|.
inline GramMatrix gram_standard(const CoherentConfiguration& cc)
{
    const auto& s = cc.scheme();
    const auto& tensor = cc.tensor();
    const std::size_t r = s.rank();
    IntMatrix g(r, r, 0);
    for (Relation a = 0; a < r; ++a)
        for (Relation b = 0; b < r; ++b) {
            BigInt sum = 0;
            for (const auto& term : tensor.terms(a, b))
                sum += BigInt(term.count) * standard_character(cc, term.t);
            g(a, b) = sum;
        }
    for (Relation a = 0; a < r; ++a)
        for (Relation b = 0; b < r; ++b) {
            const BigInt closed = (b == s.transpose_of(a)) ? BigInt(cc.stats()[a].size) : BigInt(0);
            if (g(a, b) != closed)
                throw InvariantViolation("Gram entry (" + std::to_string(a) + "," + std::to_string(b) +
                                         ") disagrees with delta_{S,R^t}|R|");
        }
    return {std::move(g)};
}

inline BigInt product_relation_sizes(const CoherentConfiguration& cc)
{
    BigInt p = 1;
    for (const auto& st : cc.stats())
        p *= st.size;
    return p;
}

inline BigInt product_cell_sizes(const CoherentConfiguration& cc)
{
    BigInt p = 1;
    for (const auto& c : cc.scheme().cells())
        p *= c.size();
    return p;
}

/// Number of unordered pairs {R, R^t} with R != R^t.
inline std::size_t transpose_pair_count(const Scheme& s)
{
    std::size_t pairs = 0;
    for (Relation a = 0; a < s.rank(); ++a)
        pairs += s.transpose_of(a) > a;
    return pairs;
}

struct Discriminant {
    BigInt value;
    int sign = 1;
};

/// det of the standard Gram matrix. The sign is derived from the transpose
/// pairing and must agree with the sign of the determinant.
inline Discriminant discriminant_standard(const CoherentConfiguration& cc)
{
    const auto gram = gram_standard(cc);
    Discriminant d;
    d.value = det_fraction_free(gram.g);
    d.sign = transpose_pair_count(cc.scheme()) % 2 == 0 ? 1 : -1;
    const BigInt prod = product_relation_sizes(cc);
    if (abs(d.value) != prod)
        throw InvariantViolation("|det Gram| = " + d.value.str() + " differs from product of |R| = " + prod.str());
    if ((d.value < 0 ? -1 : 1) != d.sign)
        throw InvariantViolation("determinant sign disagrees with the transpose-pairing sign");
    return d;
}

} // namespace cellalg
