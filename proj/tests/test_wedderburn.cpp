#include "support.hpp"

#include <gtest/gtest.h>

using namespace cellalg;
using namespace testing_support;

namespace {

using Blocks = std::vector<WedderburnBlock>;

Blocks blocks_of(const std::string& spec, std::uint64_t seed = 1) { return decompose(cc(spec), seed).blocks; }

FrameNumber frame_of(const std::string& spec)
{
    const auto c = cc(spec);
    return frame_number(c, decompose(c, 1));
}

} // namespace

TEST(Center, Dimensions)
{
    EXPECT_EQ(center_basis(cc("rank2:4")).size(), 2u);
    EXPECT_EQ(center_basis(cc("thin-sym:3")).size(), 3u);
    EXPECT_EQ(center_basis(cc("discrete:2")).size(), 1u);
    EXPECT_EQ(center_basis(cc("thin-quaternion")).size(), 5u);
    EXPECT_EQ(center_basis(cc("thin-dihedral:5")).size(), 4u);
}

TEST(Center, ElementsCommuteWithBasis)
{
    for (const char* spec : {"thin-sym:3", "direct-sum(rank2:2,rank2:3)", "schurian:5:1.2.0.3.4"}) {
        const auto c = cc(spec);
        const RationalField q;
        for (const auto& z : center_basis(c))
            for (Relation a = 0; a < c.rank(); ++a) {
                const auto e = basis_element(q, c.rank(), a);
                EXPECT_EQ(multiply(q, z, e, c.tensor()), multiply(q, e, z, c.tensor())) << spec;
            }
    }
}

TEST(Decompose, Examples)
{
    EXPECT_EQ(blocks_of("rank2:3"), (Blocks{{1, 1}, {1, 2}}));
    EXPECT_EQ(blocks_of("discrete:2"), (Blocks{{2, 1}}));
    EXPECT_EQ(blocks_of("thin-cyclic:3"), (Blocks{{1, 1}, {1, 1}, {1, 1}}));
    EXPECT_EQ(blocks_of("thin-sym:3"), (Blocks{{1, 1}, {1, 1}, {2, 2}}));
    EXPECT_EQ(blocks_of("thin-quaternion"), (Blocks{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 2}}));
    EXPECT_EQ(blocks_of("johnson:5:2"), (Blocks{{1, 1}, {1, 4}, {1, 5}}));
    EXPECT_EQ(blocks_of("direct-sum(rank2:2,rank2:3)"), (Blocks{{1, 1}, {1, 2}, {2, 1}}));
}

TEST(Decompose, SumsAndSeedStabilityOnCorpus)
{
    for (const auto& e : corpus()) {
        const auto c = cc(e.id);
        const auto first = decompose(c, 1);
        std::uint64_t f2 = 0, mf = 0;
        for (const auto& b : first.blocks) {
            f2 += b.degree * b.degree;
            mf += b.multiplicity * b.degree;
        }
        EXPECT_EQ(f2, c.rank()) << e.id;
        EXPECT_EQ(mf, c.size()) << e.id;
        EXPECT_LT(first.residual, 1e-8) << e.id;
        for (std::uint64_t seed : {7, 1234567})
            EXPECT_EQ(decompose(c, seed).blocks, first.blocks) << e.id << " seed " << seed;
        if (classify(c.scheme(), c.tensor()).commutative)
            for (const auto& b : first.blocks)
                EXPECT_EQ(b.degree, 1u) << e.id;
    }
}

TEST(Decompose, NoAttemptsIsAnError)
{
    DecomposeOptions opt;
    opt.max_attempts = 0;
    EXPECT_THROW(decompose(cc("rank2:3"), 1, opt), DecompositionError);
}

TEST(Frame, Examples)
{
    const auto r2 = frame_of("rank2:3");
    EXPECT_EQ(r2.frame, 9);
    EXPECT_EQ(r2.frame_quotient, 1);
    const auto z2 = frame_of("thin-cyclic:2");
    EXPECT_EQ(z2.frame, 4);
    EXPECT_EQ(z2.frame_quotient, 1);
    EXPECT_EQ(frame_of("discrete:2").frame, 1);
    const auto ds = frame_of("direct-sum(rank2:2,rank2:3)");
    EXPECT_EQ(ds.frame, 1296);
    EXPECT_EQ(ds.frame_quotient, 36);
}

TEST(Frame, ClosedForms)
{
    for (std::size_t n = 2; n <= 24; ++n)
        EXPECT_EQ(frame_of("rank2:" + std::to_string(n)).frame, n * n) << n;
    for (std::size_t n = 1; n <= 5; ++n)
        EXPECT_EQ(frame_of("discrete:" + std::to_string(n)).frame, 1) << n;
    for (std::size_t n = 1; n <= 12; ++n)
        EXPECT_EQ(frame_of("thin-cyclic:" + std::to_string(n)).frame, pow(BigInt(n), n)) << n;
    // nonabelian groups: n^n / prod f^(f^2)
    EXPECT_EQ(frame_of("thin-sym:3").frame, pow(BigInt(6), 6) / 16);
    EXPECT_EQ(frame_of("thin-quaternion").frame, pow(BigInt(8), 8) / 16);
    EXPECT_EQ(frame_of("thin-dihedral:4").frame, pow(BigInt(8), 8) / 16);
    EXPECT_EQ(frame_of("thin-dihedral:5").frame, pow(BigInt(10), 10) / 256);
    // Hamming: multiplicities equal valencies, so F = n^(d+1)
    EXPECT_EQ(frame_of("hamming:3:2").frame, 4096);
    EXPECT_EQ(frame_of("hamming:2:3").frame, 729);
    EXPECT_EQ(frame_of("johnson:5:2").frame, 900);
}

TEST(Frame, QuotientIntegralOnCorpus)
{
    for (const auto& e : corpus()) {
        const auto fr = frame_of(e.id);
        EXPECT_TRUE(fr.quotient_integral) << e.id << " N=" << to_string(fr.frame_quotient);
        const auto c = cc(e.id);
        EXPECT_EQ(product_relation_sizes(c) % fr.frame, 0) << e.id;
    }
}

TEST(Frame, IndivisibleDataIsRejected)
{
    const auto c = cc("rank2:3");
    WedderburnData bogus;
    bogus.blocks = {{1, 5}};
    EXPECT_THROW(frame_number(c, bogus), FrameError);
}
