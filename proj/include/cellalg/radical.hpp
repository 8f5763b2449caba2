#pragma once

// Jacobson radical of the adjacency algebra over F_p.
//
// radical_chain is the characteristic-p descending chain: A_0 = A and
//   A_{i+1} = { x in A_i : e_{p^i}(x y) = 0 for every basis element y of A },
// where e_m(z) is the degree-m elementary symmetric function of the
// eigenvalues of the n x n matrix z. On A_i the map x -> e_{p^i}(x y) is
// F_p-linear, so each step is a kernel computation, and after
// floor(log_p n) + 1 steps the chain reaches Rad(A). The i = 0 step is the
// kernel of the trace form.
//
// radical_oracle enumerates the whole algebra and keeps the elements whose
// two-sided ideal is nilpotent.

#include "cellalg/algebra.hpp"
#include "cellalg/discriminant.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellalg {

using FpVector = std::vector<PrimeField::value_type>;

/// The adjacency algebra over F_p, in the standard basis.
class ModularAlgebra {
public:
    ModularAlgebra(const CoherentConfiguration& cc, std::uint64_t p)
        : field_(p), scheme_(cc.scheme()), r_(cc.rank()), terms_(r_ * r_), trace_(r_)
    {
        for (Relation a = 0; a < r_; ++a)
            for (Relation b = 0; b < r_; ++b)
                for (const auto& term : cc.tensor().terms(a, b)) {
                    const auto c = field_.reduce(static_cast<std::int64_t>(term.count));
                    if (c != 0)
                        terms_[a * r_ + b].push_back({term.t, c});
                }
        for (Relation t = 0; t < r_; ++t)
            trace_[t] = scheme_.is_diagonal(t) ? field_.reduce(static_cast<std::int64_t>(scheme_.cells()[t].size())) : 0;
    }

    const PrimeField& field() const noexcept { return field_; }
    std::uint64_t prime() const noexcept { return field_.modulus(); }
    std::size_t rank() const noexcept { return r_; }
    std::size_t size() const noexcept { return scheme_.size(); }
    const Scheme& scheme() const noexcept { return scheme_; }

    FpVector zero() const { return FpVector(r_, 0); }
    FpVector basis(Relation rel) const
    {
        auto v = zero();
        v.at(rel) = 1;
        return v;
    }

    FpVector multiply(const FpVector& x, const FpVector& y) const
    {
        FpVector z(r_, 0);
        for (Relation a = 0; a < r_; ++a) {
            if (x[a] == 0)
                continue;
            for (Relation b = 0; b < r_; ++b) {
                if (y[b] == 0)
                    continue;
                const auto xy = field_.mul(x[a], y[b]);
                for (const auto& term : terms_[a * r_ + b])
                    z[term.t] = field_.add(z[term.t], field_.mul(xy, term.count));
            }
        }
        return z;
    }

    /// The n x n matrix of x acting on the standard module.
    FpMatrix matrix(const FpVector& x) const
    {
        const std::size_t n = size();
        FpMatrix m(n, n, 0);
        for (Point u = 0; u < n; ++u)
            for (Point v = 0; v < n; ++v)
                m(u, v) = x[scheme_.color(u, v)];
        return m;
    }

    /// Trace on the standard module, through the standard character.
    PrimeField::value_type trace(const FpVector& x) const
    {
        PrimeField::value_type s = 0;
        for (Relation t = 0; t < r_; ++t)
            s = field_.add(s, field_.mul(x[t], trace_[t]));
        return s;
    }

    /// e_m of the eigenvalues of x acting on the standard module.
    PrimeField::value_type eigen_symmetric(const FpVector& x, std::size_t m) const
    {
        if (m == 1)
            return trace(x);
        return cellalg::eigen_symmetric(field_, matrix(x), m);
    }

private:
    struct Term {
        Relation t;
        PrimeField::value_type count;
    };

    PrimeField field_;
    Scheme scheme_;
    std::size_t r_;
    std::vector<std::vector<Term>> terms_;
    FpVector trace_;
};

/// Row span helpers; a subspace is always kept as an RREF matrix.
inline FpMatrix span_of(const PrimeField& f, const std::vector<FpVector>& vectors, std::size_t dim)
{
    FpMatrix m(0, dim);
    for (const auto& v : vectors)
        m.append_row(v);
    row_reduce(f, m);
    return m;
}

inline bool in_span(const PrimeField& f, const FpMatrix& rref, const FpVector& v)
{
    FpMatrix m = rref;
    m.append_row(v);
    return rank(f, m) == rref.rows();
}

inline std::vector<FpVector> rows_of(const FpMatrix& m)
{
    std::vector<FpVector> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

/// Two-sided ideal generated by x: span of A(a) x A(b) over all a, b.
inline FpMatrix ideal_generated(const ModularAlgebra& alg, const FpVector& x)
{
    std::vector<FpVector> gens;
    for (Relation b = 0; b < alg.rank(); ++b) {
        const auto xb = alg.multiply(x, alg.basis(b));
        for (Relation a = 0; a < alg.rank(); ++a)
            gens.push_back(alg.multiply(alg.basis(a), xb));
    }
    return span_of(alg.field(), gens, alg.rank());
}

inline bool is_two_sided_ideal(const ModularAlgebra& alg, const FpMatrix& span)
{
    for (const auto& v : rows_of(span))
        for (Relation b = 0; b < alg.rank(); ++b)
            if (!in_span(alg.field(), span, alg.multiply(v, alg.basis(b))) ||
                !in_span(alg.field(), span, alg.multiply(alg.basis(b), v)))
                return false;
    return true;
}

/// Iterates S_{k+1} = span(S_k S) until the dimension stops changing.
inline bool is_nilpotent_span(const ModularAlgebra& alg, const FpMatrix& span)
{
    const auto base = rows_of(span);
    FpMatrix current = span;
    for (std::size_t iter = 0; iter <= alg.rank() + 1; ++iter) {
        if (current.rows() == 0)
            return true;
        std::vector<FpVector> products;
        for (const auto& a : rows_of(current))
            for (const auto& b : base)
                products.push_back(alg.multiply(a, b));
        FpMatrix next = span_of(alg.field(), products, alg.rank());
        if (next.rows() == current.rows() && next == current)
            return false;
        current = std::move(next);
    }
    return current.rows() == 0;
}

enum class RadicalMethod { chain, oracle };

struct RadicalResult {
    std::size_t dimension = 0;
    FpMatrix basis; ///< RREF rows, coefficients in the standard basis
    RadicalMethod method = RadicalMethod::chain;
    std::size_t steps = 0;
};

/// Largest k with p^k <= n.
inline std::size_t chain_length(std::uint64_t p, std::size_t n)
{
    std::size_t k = 0;
    std::uint64_t pk = p;
    while (pk <= n) {
        ++k;
        pk *= p;
    }
    return k;
}

inline RadicalResult radical_chain(const ModularAlgebra& alg, std::optional<std::size_t> forced_steps = std::nullopt)
{
    const auto& f = alg.field();
    const std::size_t r = alg.rank();
    const std::size_t k = forced_steps ? *forced_steps : chain_length(alg.prime(), alg.size());

    FpMatrix current = FpMatrix::identity(r, 0, 1);
    std::uint64_t m = 1;
    std::size_t steps = 0;
    for (std::size_t i = 0; i <= k && current.rows() != 0; ++i, m *= alg.prime()) {
        const auto basis = rows_of(current);
        FpMatrix constraints(r, basis.size(), 0);
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (Relation b = 0; b < r; ++b)
                constraints(b, a) = alg.eigen_symmetric(alg.multiply(basis[a], alg.basis(b)), m);
        const FpMatrix combos = kernel(f, constraints);
        std::vector<FpVector> next;
        for (std::size_t c = 0; c < combos.rows(); ++c) {
            FpVector v(r, 0);
            for (std::size_t a = 0; a < basis.size(); ++a)
                if (combos(c, a) != 0)
                    for (std::size_t j = 0; j < r; ++j)
                        v[j] = f.add(v[j], f.mul(combos(c, a), basis[a][j]));
            next.push_back(std::move(v));
        }
        current = span_of(f, next, r);
        ++steps;
    }

    if (!is_two_sided_ideal(alg, current) || !is_nilpotent_span(alg, current))
        throw InvariantViolation("radical chain over F_" + std::to_string(alg.prime()) +
                                 " returned a subspace that is not a nilpotent ideal");
    return {current.rows(), std::move(current), RadicalMethod::chain, steps};
}

class OracleBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p^r, or budget + 1 if that is larger than the budget.
inline std::uint64_t enumeration_size(std::uint64_t p, std::size_t r, std::uint64_t budget)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        total *= p;
        if (total > budget)
            return budget + 1;
    }
    return total;
}

inline RadicalResult radical_oracle(const ModularAlgebra& alg, std::uint64_t budget)
{
    const auto& f = alg.field();
    const std::size_t r = alg.rank();
    const std::uint64_t p = alg.prime();
    const std::uint64_t total = enumeration_size(p, r, budget);
    if (total > budget)
        throw OracleBudgetExceeded("oracle needs " + std::to_string(p) + "^" + std::to_string(r) +
                                   " elements, budget is " + std::to_string(budget));

    // Left regular matrices: (L_a)[t][s] = c_{a,s}^t mod p.
    std::vector<FpMatrix> left;
    for (Relation a = 0; a < r; ++a) {
        FpMatrix l(r, r, 0);
        for (Relation s = 0; s < r; ++s) {
            const auto col = alg.multiply(alg.basis(a), alg.basis(s));
            for (Relation t = 0; t < r; ++t)
                l(t, s) = col[t];
        }
        left.push_back(std::move(l));
    }
    // x is nilpotent iff its left regular matrix is.
    auto nilpotent_element = [&](const FpVector& x) {
        FpMatrix lx(r, r, 0);
        for (Relation a = 0; a < r; ++a)
            if (x[a] != 0)
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        lx(i, j) = f.add(lx(i, j), f.mul(x[a], left[a](i, j)));
        for (std::size_t power = 1; power < r; power *= 2)
            lx = multiply(f, lx, lx);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (lx(i, j) != 0)
                    return false;
        return true;
    };

    std::map<std::vector<PrimeField::value_type>, bool> ideal_cache;
    std::vector<FpVector> kept;
    FpVector x(r, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (idx != 0) {
            for (std::size_t j = 0; j < r; ++j) {
                if (++x[j] < p)
                    break;
                x[j] = 0;
            }
        }
        bool keep = false;
        if (idx == 0) {
            keep = true;
        } else if (nilpotent_element(x)) {
            const FpMatrix ideal = ideal_generated(alg, x);
            std::vector<PrimeField::value_type> key(ideal.rows() * r);
            for (std::size_t i = 0; i < ideal.rows(); ++i)
                std::copy(ideal.row(i).begin(), ideal.row(i).end(), key.begin() + static_cast<std::ptrdiff_t>(i * r));
            auto it = ideal_cache.find(key);
            if (it == ideal_cache.end())
                it = ideal_cache.emplace(std::move(key), is_nilpotent_span(alg, ideal)).first;
            keep = it->second;
        }
        if (keep)
            kept.push_back(x);
    }

    FpMatrix span = span_of(f, kept, r);
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < span.rows(); ++i)
        expected *= p;
    if (expected != kept.size())
        throw InvariantViolation("oracle: elements with nilpotent ideals do not form a subspace");
    return {span.rows(), std::move(span), RadicalMethod::oracle, 0};
}

inline bool is_semisimple(const CoherentConfiguration& cc, std::uint64_t p)
{
    return radical_chain(ModularAlgebra(cc, p)).dimension == 0;
}

enum class WitnessCase {
    some_cell_coprime,   ///< p divides some |X| but not all: coefficients prod_{Y != X} |Y|
    all_cells_divisible, ///< p divides every |X|: coefficients p^(lambda - alpha_X) / m_X
    coprime_fallback,    ///< first construction vanished mod p (several cells divisible by p)
};

struct NilpotentWitness {
    FpVector element; ///< sum of c_X J_X in the standard basis
    WitnessCase kind;
};

inline std::string to_string(WitnessCase k)
{
    switch (k) {
    case WitnessCase::some_cell_coprime:
        return "some-cell-coprime";
    case WitnessCase::all_cells_divisible:
        return "all-cells-divisible";
    case WitnessCase::coprime_fallback:
        return "coprime-fallback";
    }
    return "?";
}

/// A nonzero central element with square zero built from the cell
/// all-ones matrices J_X, or nothing when p divides no cell size.
inline std::optional<NilpotentWitness> central_nilpotent_witness(const CoherentConfiguration& cc, std::uint64_t p)
{
    const ModularAlgebra alg(cc, p);
    const auto& f = alg.field();
    const auto sizes = cc.cell_sizes();
    const std::size_t cells = sizes.size();

    bool any_divisible = false, all_divisible = true;
    for (auto sz : sizes) {
        any_divisible = any_divisible || sz % p == 0;
        all_divisible = all_divisible && sz % p == 0;
    }
    if (!any_divisible)
        return std::nullopt;

    auto divisible_construction = [&] {
        unsigned lambda = 0;
        for (auto sz : sizes)
            lambda = std::max(lambda, valuation(sz, p));
        std::vector<PrimeField::value_type> c(cells, 0);
        for (Cell x = 0; x < cells; ++x) {
            const unsigned alpha = valuation(sizes[x], p);
            if (alpha != lambda)
                continue; // p^(lambda - alpha) vanishes mod p
            std::uint64_t m = sizes[x];
            for (unsigned i = 0; i < alpha; ++i)
                m /= p;
            c[x] = f.inv(f.reduce(static_cast<std::int64_t>(m)));
        }
        return c;
    };

    std::vector<PrimeField::value_type> coeff(cells, 0);
    WitnessCase kind;
    if (all_divisible) {
        kind = WitnessCase::all_cells_divisible;
        coeff = divisible_construction();
    } else {
        kind = WitnessCase::some_cell_coprime;
        bool nonzero = false;
        for (Cell x = 0; x < cells; ++x) {
            PrimeField::value_type c = 1;
            for (Cell y = 0; y < cells; ++y)
                if (y != x)
                    c = f.mul(c, f.reduce(static_cast<std::int64_t>(sizes[y])));
            coeff[x] = c;
            nonzero = nonzero || c != 0;
        }
        if (!nonzero) {
            kind = WitnessCase::coprime_fallback;
            coeff = divisible_construction();
        }
    }

    FpVector w(cc.rank(), 0);
    for (Relation rel = 0; rel < cc.rank(); ++rel) {
        const auto [src, dst] = cc.scheme().fiber_of(rel);
        if (src == dst)
            w[rel] = coeff[src];
    }

    bool nonzero = false;
    for (auto c : w)
        nonzero = nonzero || c != 0;
    if (!nonzero)
        throw InvariantViolation("central nilpotent witness vanished mod " + std::to_string(p));
    for (Relation b = 0; b < cc.rank(); ++b)
        if (alg.multiply(w, alg.basis(b)) != alg.multiply(alg.basis(b), w))
            throw InvariantViolation("witness does not commute with A(" + std::to_string(b) + ")");
    if (alg.multiply(w, w) != alg.zero())
        throw InvariantViolation("witness does not square to zero mod " + std::to_string(p));
    return NilpotentWitness{std::move(w), kind};
}

} // namespace cellalg
