#include "support.hpp"

#include <gtest/gtest.h>

using namespace cellalg;
using namespace testing_support;

TEST(StandardCharacter, Examples)
{
    const auto r2 = cc("rank2:3");
    EXPECT_EQ(standard_character(r2, 0), 3);
    EXPECT_EQ(standard_character(r2, 1), 0);
    const auto ds = cc("direct-sum(rank2:2,discrete:1)");
    EXPECT_EQ(standard_character(ds, 1), 1); // diagonal relation of the singleton cell
    EXPECT_EQ(standard_character(ds, 0), 2);
}

TEST(StandardCharacter, IdentityAndAllOnes)
{
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        BigInt identity = 0, all = 0;
        for (Relation rel = 0; rel < c.rank(); ++rel) {
            if (c.scheme().is_diagonal(rel))
                identity += standard_character(c, rel);
            all += standard_character(c, rel);
        }
        EXPECT_EQ(identity, c.size()) << e.id;
        EXPECT_EQ(all, c.size()) << e.id;
    }
}

TEST(Gram, Examples)
{
    EXPECT_EQ(gram_standard(cc("rank2:3")).g, (IntMatrix{{3, 0}, {0, 6}}));
    EXPECT_EQ(gram_standard(cc("thin-cyclic:2")).g, (IntMatrix{{2, 0}, {0, 2}}));
    EXPECT_EQ(gram_standard(cc("discrete:2")).g, (IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
}

TEST(Gram, PermutedDiagonalOnCorpus)
{
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        const auto& g = gram_standard(c).g;
        for (std::size_t i = 0; i < c.rank(); ++i) {
            std::size_t nonzero = 0;
            for (std::size_t j = 0; j < c.rank(); ++j) {
                EXPECT_EQ(g(i, j), g(j, i));
                nonzero += g(i, j) != 0;
            }
            EXPECT_EQ(nonzero, 1u) << e.id;
            EXPECT_EQ(g(i, c.scheme().transpose_of(i)), c.stats()[i].size);
        }
    }
}

TEST(Discriminant, Examples)
{
    const auto a = discriminant_standard(cc("rank2:3"));
    EXPECT_EQ(a.value, 18);
    EXPECT_EQ(a.sign, 1);
    const auto b = discriminant_standard(cc("discrete:2"));
    EXPECT_EQ(b.value, -1);
    EXPECT_EQ(b.sign, -1);
    const auto c = discriminant_standard(cc("thin-cyclic:3"));
    EXPECT_EQ(c.value, -27);
    EXPECT_EQ(c.sign, -1);
}

TEST(Discriminant, Products)
{
    const auto r2 = cc("rank2:3");
    EXPECT_EQ(product_relation_sizes(r2), 18);
    EXPECT_EQ(product_cell_sizes(r2), 3);
    const auto d2 = cc("discrete:2");
    EXPECT_EQ(product_relation_sizes(d2), 1);
    EXPECT_EQ(product_cell_sizes(d2), 1);
    const auto ds = cc("direct-sum(rank2:2,rank2:3)");
    EXPECT_EQ(product_relation_sizes(ds), 2592);
    EXPECT_EQ(product_cell_sizes(ds), 6);
}

TEST(Discriminant, CofactorOracleOnSmallRank)
{
    // Laplace expansion is independent of the Bareiss code path.
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        if (c.rank() > 6)
            continue;
        const auto g = gram_standard(c).g;
        EXPECT_EQ(det_cofactor(g), discriminant_standard(c).value) << e.id;
    }
}

TEST(Discriminant, IdentityOnCorpus)
{
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        const auto d = discriminant_standard(c);
        EXPECT_EQ(abs(d.value), product_relation_sizes(c)) << e.id;
        EXPECT_EQ(d.sign, transpose_pair_count(c.scheme()) % 2 ? -1 : 1) << e.id;
        EXPECT_EQ(d.value < 0 ? -1 : 1, d.sign) << e.id;
    }
}

TEST(Discriminant, LargeValuesAreExact)
{
    const auto c = cc("thin-cyclic:12");
    EXPECT_EQ(discriminant_standard(c).value, -pow(BigInt(12), 12));
    const auto h = cc("hamming:3:2");
    EXPECT_EQ(product_relation_sizes(h), BigInt(8) * 24 * 24 * 8);
}
