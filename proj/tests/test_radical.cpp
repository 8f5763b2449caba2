#include "support.hpp"

#include <gtest/gtest.h>

using namespace cellalg;
using namespace testing_support;

namespace {

RadicalResult chain(const std::string& spec, std::uint64_t p) { return radical_chain(ModularAlgebra(cc(spec), p)); }

RadicalResult oracle(const std::string& spec, std::uint64_t p, std::uint64_t budget = 1u << 16)
{
    return radical_oracle(ModularAlgebra(cc(spec), p), budget);
}

bool matrix_nilpotent(const PrimeField& f, const FpMatrix& m)
{
    FpMatrix power = m;
    for (std::size_t i = 1; i < m.rows(); ++i)
        power = multiply(f, power, m);
    for (std::size_t i = 0; i < power.rows(); ++i)
        for (std::size_t j = 0; j < power.cols(); ++j)
            if (power(i, j) != 0)
                return false;
    return true;
}

} // namespace

TEST(ModularAlgebraTest, MatchesAdjacencyMatrices)
{
    // the structure-constant product agrees with n x n matrix products mod p
    for (const char* spec : {"thin-sym:3", "direct-sum(rank2:2,rank2:3)", "johnson:5:2"}) {
        const ModularAlgebra alg(cc(spec), 3);
        for (Relation a = 0; a < alg.rank(); ++a)
            for (Relation b = 0; b < alg.rank(); ++b)
                EXPECT_EQ(alg.matrix(alg.multiply(alg.basis(a), alg.basis(b))),
                          multiply(alg.field(), alg.matrix(alg.basis(a)), alg.matrix(alg.basis(b))))
                    << spec;
    }
}

TEST(ModularAlgebraTest, TraceViaCharacter)
{
    const ModularAlgebra alg(cc("johnson:5:2"), 7);
    for (Relation a = 0; a < alg.rank(); ++a) {
        const auto x = alg.basis(a);
        EXPECT_EQ(alg.eigen_symmetric(x, 1), eigen_symmetric(alg.field(), alg.matrix(x), 1));
    }
}

TEST(RadicalChain, Examples)
{
    const auto z2 = chain("thin-cyclic:2", 2);
    EXPECT_EQ(z2.dimension, 1u);
    EXPECT_EQ(z2.basis, (FpMatrix{{1, 1}}));

    const auto r3 = chain("rank2:3", 3);
    EXPECT_EQ(r3.dimension, 1u);
    EXPECT_EQ(r3.basis, (FpMatrix{{1, 1}}));

    EXPECT_EQ(chain("rank2:3", 2).dimension, 0u);
    EXPECT_EQ(chain("thin-cyclic:4", 2).dimension, 3u);
    EXPECT_EQ(chain("thin-sym:3", 3).dimension, 4u);
    EXPECT_EQ(chain("thin-sym:3", 2).dimension, 1u);
}

TEST(RadicalChain, SemisimpleFlag)
{
    EXPECT_FALSE(is_semisimple(cc("thin-cyclic:2"), 2));
    EXPECT_FALSE(is_semisimple(cc("rank2:3"), 3));
    EXPECT_TRUE(is_semisimple(cc("rank2:3"), 2));
    for (std::uint64_t p : {2, 3, 5, 7})
        EXPECT_TRUE(is_semisimple(cc("discrete:2"), p));
}

TEST(RadicalChain, ChainLength)
{
    EXPECT_EQ(chain_length(2, 1), 0u);
    EXPECT_EQ(chain_length(2, 8), 3u);
    EXPECT_EQ(chain_length(3, 8), 1u);
    EXPECT_EQ(chain_length(11, 10), 0u);
}

TEST(RadicalChain, ExtraStepsChangeNothing)
{
    for (const char* spec : {"thin-cyclic:8", "thin-sym:3", "johnson:6:2", "direct-sum(rank2:3,rank2:3)"}) {
        const auto c = cc(spec);
        for (std::uint64_t p : {2, 3, 5, 29}) {
            const ModularAlgebra alg(c, p);
            const auto plain = radical_chain(alg);
            const auto k = chain_length(p, c.size());
            EXPECT_EQ(radical_chain(alg, k + 1).basis, plain.basis) << spec << " p=" << p;
            if (p > c.size()) {
                EXPECT_EQ(plain.steps, 1u);
                EXPECT_EQ(radical_chain(alg, 0).basis, plain.basis);
            }
        }
    }
}

TEST(RadicalOracle, Examples)
{
    EXPECT_EQ(oracle("thin-cyclic:4", 2).dimension, 3u);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
        EXPECT_EQ(oracle("discrete:2", p).dimension, 0u);
    const auto r3 = oracle("rank2:3", 3);
    EXPECT_EQ(r3.dimension, 1u);
    EXPECT_EQ(r3.basis, chain("rank2:3", 3).basis);
    EXPECT_EQ(r3.method, RadicalMethod::oracle);
}

TEST(RadicalOracle, Budget)
{
    EXPECT_EQ(enumeration_size(2, 10, 1u << 16), 1024u);
    EXPECT_EQ(enumeration_size(3, 20, 1u << 16), (1u << 16) + 1);
    EXPECT_THROW(oracle("thin-cyclic:8", 5), OracleBudgetExceeded);
    EXPECT_THROW(oracle("thin-cyclic:4", 2, 15), OracleBudgetExceeded);
}

TEST(RadicalOracle, AgreesWithChainOnSmallCorpus)
{
    std::size_t compared = 0;
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            if (enumeration_size(p, c.rank(), 4096) > 4096)
                continue;
            const ModularAlgebra alg(c, p);
            EXPECT_EQ(radical_oracle(alg, 4096).basis, radical_chain(alg).basis) << e.id << " p=" << p;
            ++compared;
        }
    }
    EXPECT_GT(compared, 40u);
}

TEST(RadicalChain, BasisElementsAreNilpotentMatrices)
{
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        if (c.size() > 16)
            continue;
        for (std::uint64_t p : {2, 3, 5}) {
            const ModularAlgebra alg(c, p);
            for (const auto& v : rows_of(radical_chain(alg).basis))
                EXPECT_TRUE(matrix_nilpotent(alg.field(), alg.matrix(v))) << e.id << " p=" << p;
        }
    }
}

TEST(RadicalChain, CoprimeToRelationSizesIsSemisimple)
{
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        const auto prod = product_relation_sizes(c);
        for (auto p : primes_up_to(100))
            if (prod % p != 0)
                EXPECT_TRUE(is_semisimple(c, p)) << e.id << " p=" << p;
    }
}

TEST(Witness, Examples)
{
    const auto ds = cc("direct-sum(rank2:2,rank2:3)");
    const auto w = central_nilpotent_witness(ds, 2);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->kind, WitnessCase::some_cell_coprime);
    for (Relation rel = 0; rel < ds.rank(); ++rel) {
        const auto [x, y] = ds.scheme().fiber_of(rel);
        EXPECT_EQ(w->element[rel], (x == 0 && y == 0) ? 1u : 0u) << rel;
    }

    const auto dd = cc("direct-sum(rank2:2,rank2:2)");
    const auto v = central_nilpotent_witness(dd, 2);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->kind, WitnessCase::all_cells_divisible);
    for (Relation rel = 0; rel < dd.rank(); ++rel) {
        const auto [x, y] = dd.scheme().fiber_of(rel);
        EXPECT_EQ(v->element[rel], x == y ? 1u : 0u) << rel;
    }

    EXPECT_FALSE(central_nilpotent_witness(cc("rank2:3"), 2));
}

TEST(Witness, FallbackWhenSeveralCellsDivisible)
{
    const auto c = cc("direct-sum(direct-sum(rank2:2,rank2:2),discrete:1)");
    const auto w = central_nilpotent_witness(c, 2);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->kind, WitnessCase::coprime_fallback);
    EXPECT_EQ(to_string(w->kind), "coprime-fallback");
}

TEST(Witness, LiesInRadicalOnCorpus)
{
    std::size_t checked = 0;
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            const auto w = central_nilpotent_witness(c, p);
            EXPECT_EQ(w.has_value(), product_cell_sizes(c) % p == 0) << e.id;
            if (!w)
                continue;
            const ModularAlgebra alg(c, p);
            const auto rad = radical_chain(alg);
            EXPECT_GT(rad.dimension, 0u);
            EXPECT_TRUE(in_span(alg.field(), rad.basis, w->element)) << e.id << " p=" << p;
            EXPECT_EQ(alg.multiply(w->element, w->element), alg.zero());
            ++checked;
        }
    }
    EXPECT_GT(checked, 20u);
}
