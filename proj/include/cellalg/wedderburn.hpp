#pragma once

// Complex Wedderburn data (degrees and standard-module multiplicities of the
// irreducible modules), the Frame number and the Frame quotient.
//
// The split is numerical: a random rational central element is
// diagonalized, its eigenvalue clusters give the central primitive
// idempotents, and every integer read off them is validated before use.
// Everything downstream of the integers is exact.

#include "cellalg/algebra.hpp"
#include "cellalg/discriminant.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellalg {

/// Exact basis (RREF, over Q) of the center {z : z A(R) = A(R) z for all R}.
inline std::vector<AlgebraElement<BigRat>> center_basis(const CoherentConfiguration& cc)
{
    const auto& tensor = cc.tensor();
    const std::size_t r = cc.rank();
    Matrix<BigRat> system(r * r, r, BigRat(0));
    for (Relation a = 0; a < r; ++a)
        for (Relation s = 0; s < r; ++s) {
            for (const auto& term : tensor.terms(s, a))
                system(a * r + term.t, s) += term.count;
            for (const auto& term : tensor.terms(a, s))
                system(a * r + term.t, s) -= term.count;
        }
    const auto k = kernel(RationalField{}, std::move(system));
    std::vector<AlgebraElement<BigRat>> out;
    for (std::size_t i = 0; i < k.rows(); ++i)
        out.push_back({std::vector<BigRat>(k.row(i).begin(), k.row(i).end())});
    return out;
}

struct WedderburnBlock {
    std::uint64_t degree = 0;
    std::uint64_t multiplicity = 0;
    friend auto operator<=>(const WedderburnBlock&, const WedderburnBlock&) = default;
};

struct WedderburnData {
    std::vector<WedderburnBlock> blocks; // sorted by (degree, multiplicity)
    std::uint64_t seed = 0;
    double residual = 0.0;
};

class DecompositionError : public std::runtime_error {
public:
    DecompositionError(const std::string& what, std::vector<std::uint64_t> seeds)
        : std::runtime_error(what), seeds_(std::move(seeds))
    {
    }
    const std::vector<std::uint64_t>& seeds_tried() const noexcept { return seeds_; }

private:
    std::vector<std::uint64_t> seeds_;
};

struct DecomposeOptions {
    double tol = 1e-8;
    std::size_t max_attempts = 8;
    int coefficient_bound = 9;
};

namespace detail {

using cplx = std::complex<double>;

inline std::vector<std::vector<std::size_t>> cluster_eigenvalues(const std::vector<cplx>& eig, double threshold)
{
    const std::size_t n = eig.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(eig[i] - eig[j]) <= threshold) {
                const auto a = find(i), b = find(j);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = find(i);
        if (slot[root] == n) {
            slot[root] = clusters.size();
            clusters.emplace_back();
        }
        clusters[slot[root]].push_back(i);
    }
    return clusters;
}

/// One attempt with a fixed seed. False (with a reason) when the element was
/// not generic or a rounded integer failed validation.
inline bool try_decompose(const CoherentConfiguration& cc, const std::vector<AlgebraElement<BigRat>>& center,
                          std::uint64_t seed, const DecomposeOptions& opt, WedderburnData& out, std::string& why)
{
    const auto& s = cc.scheme();
    const std::size_t n = s.size(), r = s.rank();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-opt.coefficient_bound, opt.coefficient_bound);
    std::vector<BigRat> z(r, BigRat(0));
    for (const auto& c : center) {
        const int a = dist(rng);
        for (std::size_t i = 0; i < r; ++i)
            z[i] += a * c.coeffs[i];
    }
    std::vector<double> zd(r);
    for (std::size_t i = 0; i < r; ++i)
        zd[i] = static_cast<double>(z[i]);

    Eigen::MatrixXcd zm(n, n);
    for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v)
            zm(u, v) = zd[s.color(u, v)];

    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(zm);
    if (schur.info() != Eigen::Success) {
        why = "Schur decomposition failed";
        return false;
    }
    const Eigen::MatrixXcd& unitary = schur.matrixU();
    std::vector<cplx> eig(n);
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = schur.matrixT()(i, i);
        scale = std::max(scale, std::abs(eig[i]));
    }
    const auto clusters = cluster_eigenvalues(eig, opt.tol * scale);
    if (clusters.size() != center.size()) {
        why = std::to_string(clusters.size()) + " eigenvalue clusters for a center of dimension " +
              std::to_string(center.size());
        return false;
    }
    std::vector<cplx> means;
    for (const auto& cl : clusters) {
        cplx m = 0;
        for (auto i : cl)
            m += eig[i];
        means.push_back(m / static_cast<double>(cl.size()));
    }

    // Complex products in the standard basis, for the compression map.
    auto alg_mul = [&](const std::vector<cplx>& x, const std::vector<cplx>& y) {
        std::vector<cplx> out(r, 0.0);
        for (Relation a = 0; a < r; ++a) {
            if (x[a] == 0.0)
                continue;
            for (Relation b = 0; b < r; ++b) {
                if (y[b] == 0.0)
                    continue;
                for (const auto& term : cc.tensor().terms(a, b))
                    out[term.t] += x[a] * y[b] * static_cast<double>(term.count);
            }
        }
        return out;
    };

    double residual = 0.0;
    std::vector<WedderburnBlock> blocks;
    for (std::size_t j = 0; j < clusters.size(); ++j) {
        // Lagrange interpolation polynomial of cluster j, applied through the
        // Schur basis of z.
        Eigen::VectorXcd weights(n);
        for (std::size_t i = 0; i < n; ++i) {
            cplx w = 1.0;
            for (std::size_t k = 0; k < means.size(); ++k)
                if (k != j)
                    w *= (eig[i] - means[k]) / (means[j] - means[k]);
            weights(static_cast<Eigen::Index>(i)) = w;
        }
        const Eigen::MatrixXcd proj = unitary * weights.asDiagonal() * unitary.adjoint();

        // Coordinates of the projector in the standard basis; the spread of
        // entries within one relation measures how far it is from W.
        std::vector<cplx> e(r, 0.0);
        for (Point u = 0; u < n; ++u)
            for (Point v = 0; v < n; ++v)
                e[s.color(u, v)] += proj(u, v);
        for (Relation t = 0; t < r; ++t)
            e[t] /= static_cast<double>(cc.stats()[t].size);
        for (Point u = 0; u < n; ++u)
            for (Point v = 0; v < n; ++v)
                residual = std::max(residual, std::abs(proj(u, v) - e[s.color(u, v)]));

        Eigen::MatrixXcd compression(r, r);
        for (Relation a = 0; a < r; ++a) {
            std::vector<cplx> basis(r, 0.0);
            basis[a] = 1.0;
            const auto col = alg_mul(alg_mul(e, basis), e);
            for (Relation t = 0; t < r; ++t)
                compression(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(a)) = col[t];
        }
        // An idempotent map: its trace is its rank and its nonzero singular
        // values are at least 1.
        const cplx tr_comp = compression.trace();
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(compression);
        std::size_t svd_rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            svd_rank += svd.singularValues()(i) > 0.5;
        const double f2 = std::round(tr_comp.real());
        residual = std::max({residual, std::abs(tr_comp - cplx(f2, 0.0))});
        const auto degree = static_cast<std::uint64_t>(std::llround(std::sqrt(f2)));
        if (f2 < 1 || degree * degree != static_cast<std::uint64_t>(f2) || svd_rank != degree * degree) {
            why = "compression rank " + std::to_string(tr_comp.real()) + " is not a positive square";
            return false;
        }
        const cplx tr = proj.trace();
        const double mf = std::round(tr.real());
        residual = std::max(residual, std::abs(tr - cplx(mf, 0.0)));
        const auto mf_int = static_cast<std::uint64_t>(std::llround(mf));
        if (mf_int == 0 || mf_int % degree != 0) {
            why = "projector trace " + std::to_string(tr.real()) + " is not a multiple of the degree";
            return false;
        }
        blocks.push_back({degree, mf_int / degree});
    }

    if (residual >= opt.tol) {
        why = "rounding residual " + std::to_string(residual) + " exceeds tolerance";
        return false;
    }
    std::uint64_t sum_f2 = 0, sum_mf = 0;
    for (const auto& b : blocks) {
        sum_f2 += b.degree * b.degree;
        sum_mf += b.multiplicity * b.degree;
    }
    if (sum_f2 != r || sum_mf != n) {
        why = "sum f^2 = " + std::to_string(sum_f2) + " (rank " + std::to_string(r) + "), sum m f = " +
              std::to_string(sum_mf) + " (size " + std::to_string(n) + ")";
        return false;
    }
    std::sort(blocks.begin(), blocks.end());
    out = {std::move(blocks), seed, residual};
    return true;
}

} // namespace detail

inline WedderburnData decompose(const CoherentConfiguration& cc, std::uint64_t seed,
                                const DecomposeOptions& opt = {})
{
    const auto center = center_basis(cc);
    std::vector<std::uint64_t> tried;
    std::string why;
    for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
        const std::uint64_t s = seed + attempt;
        tried.push_back(s);
        WedderburnData wd;
        if (detail::try_decompose(cc, center, s, opt, wd, why))
            return wd;
    }
    std::ostringstream os;
    os << "no generic central element after " << tried.size() << " seeds (last failure: " << why << "); seeds:";
    for (auto s : tried)
        os << ' ' << s;
    throw DecompositionError(os.str(), tried);
}

class FrameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FrameNumber {
    BigInt frame;          ///< prod |R| / prod m^(f^2)
    BigRat frame_quotient; ///< frame / (prod |X|)^2
    bool quotient_integral = false;
};

inline FrameNumber frame_number(const CoherentConfiguration& cc, const WedderburnData& wd)
{
    BigInt denom = 1;
    for (const auto& b : wd.blocks)
        denom *= pow(BigInt(b.multiplicity), b.degree * b.degree);
    const BigInt prod = product_relation_sizes(cc);
    if (prod % denom != 0)
        throw FrameError("product of relation sizes " + prod.str() + " is not divisible by prod m^(f^2) = " +
                         denom.str());
    FrameNumber fr;
    fr.frame = prod / denom;
    const BigInt cells = product_cell_sizes(cc);
    fr.frame_quotient = BigRat(fr.frame, cells * cells);
    fr.quotient_integral = is_integer(fr.frame_quotient);
    return fr;
}

} // namespace cellalg
