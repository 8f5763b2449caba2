#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cellalg;
using namespace testing_support;

TEST(PermutationTest, Validation)
{
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 3}), std::invalid_argument);
    const auto p = Permutation::from_cycles(4, {{0, 2, 3}});
    EXPECT_EQ(p.image(), (std::vector<Point>{2, 1, 3, 0}));
    EXPECT_EQ(Permutation::identity(3).image(), (std::vector<Point>{0, 1, 2}));
}

TEST(Schurian, Examples)
{
    const auto s3 = schurian({Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})}, 3);
    EXPECT_EQ(s3, rank2(3));

    const auto swap = schurian({Permutation::from_cycles(3, {{0, 1}})}, 3);
    EXPECT_EQ(swap.rank(), 5u);
    EXPECT_EQ(swap.cells(), (std::vector<std::vector<Point>>{{0, 1}, {2}}));

    EXPECT_EQ(schurian({}, 2), discrete(2));
    EXPECT_THROW(schurian({Permutation::identity(3)}, 4), std::invalid_argument);
}

TEST(Schurian, CellsAreOrbits)
{
    // <(0 1 2)> x <(3 4)> on 6 points: orbits {0,1,2}, {3,4}, {5}
    const auto s = schurian({Permutation::from_cycles(6, {{0, 1, 2}}), Permutation::from_cycles(6, {{3, 4}})}, 6);
    EXPECT_EQ(s.cells(), (std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4}, {5}}));
    const CoherentConfiguration c(s);
    EXPECT_EQ(c.rank(), 12u); // 3 + 2 + 1 inside the orbits, one each way between orbit pairs
    // transitive group: homogeneous
    EXPECT_EQ(build_scheme("schurian:5:1.2.3.4.0:4.3.2.1.0").cell_count(), 1u);
}

TEST(GroupTableTest, Builders)
{
    EXPECT_EQ(cyclic_group(5).order(), 5u);
    EXPECT_TRUE(cyclic_group(5).abelian());
    EXPECT_EQ(symmetric_group(3).order(), 6u);
    EXPECT_FALSE(symmetric_group(3).abelian());
    EXPECT_EQ(symmetric_group(4).order(), 24u);
    EXPECT_EQ(dihedral_group(4).order(), 8u);
    EXPECT_FALSE(dihedral_group(4).abelian());
    EXPECT_TRUE(dihedral_group(2).abelian());
    const auto q = quaternion_group();
    EXPECT_EQ(q.order(), 8u);
    EXPECT_FALSE(q.abelian());
    // exactly one element of order 2 in Q8
    std::size_t involutions = 0;
    for (std::size_t g = 0; g < 8; ++g)
        involutions += g != q.identity() && q(g, g) == q.identity();
    EXPECT_EQ(involutions, 1u);
    EXPECT_EQ(direct_product(cyclic_group(2), cyclic_group(3)).order(), 6u);
}

TEST(GroupTableTest, RejectsNonGroups)
{
    EXPECT_THROW(GroupTable(2, {0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(GroupTable(2, {0, 1, 1, 1}), std::invalid_argument);
    EXPECT_THROW(GroupTable(2, {0, 1}), std::invalid_argument);
}

TEST(ThinScheme, Examples)
{
    const auto z2 = thin_group_scheme(cyclic_group(2));
    EXPECT_EQ(z2, rank2(2));
    const auto z3 = thin_group_scheme(cyclic_group(3));
    EXPECT_EQ(z3.rank(), 3u);
    EXPECT_EQ(z3.transpose_of(1), 2u);
    const CoherentConfiguration s3(thin_group_scheme(symmetric_group(3)));
    EXPECT_EQ(s3.rank(), 6u);
    EXPECT_EQ(s3.scheme().cell_count(), 1u);
    EXPECT_FALSE(classify(s3.scheme(), s3.tensor()).commutative);
}

TEST(ThinScheme, TensorIsGroupMultiplication)
{
    for (const auto& g : {quaternion_group(), dihedral_group(5), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(4))}) {
        const CoherentConfiguration c(thin_group_scheme(g));
        const auto& s = c.scheme();
        const std::size_t n = g.order();
        ASSERT_EQ(c.rank(), n);
        for (const auto& st : c.stats())
            EXPECT_EQ(st.d_out, 1u);
        // relation of (x, y) is x^-1 y; A(g) A(h) = A(gh)
        auto rel = [&](std::size_t h) { return s.color(g.identity(), h); };
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t t = 0; t < n; ++t)
                    ASSERT_EQ(c.tensor()(rel(a), rel(b), rel(t)), g(a, b) == t ? 1u : 0u);
    }
}

TEST(Families, Examples)
{
    const CoherentConfiguration h(hamming(2, 2));
    EXPECT_EQ(h.size(), 4u);
    EXPECT_EQ(h.rank(), 3u);
    std::multiset<std::uint64_t> degrees;
    for (const auto& st : h.stats())
        degrees.insert(st.d_out);
    EXPECT_EQ(degrees, (std::multiset<std::uint64_t>{1, 1, 2}));

    const CoherentConfiguration j(johnson(4, 2));
    EXPECT_EQ(j.size(), 6u);
    EXPECT_EQ(j.rank(), 3u);
    EXPECT_EQ(johnson(6, 3).rank(), 4u);
    EXPECT_EQ(hamming(3, 2).rank(), 4u);

    EXPECT_EQ(discrete(3).rank(), 9u);
    EXPECT_EQ(rank2(1).rank(), 1u);
    EXPECT_THROW(johnson(3, 3), std::invalid_argument);
    EXPECT_THROW(hamming(2, 1), std::invalid_argument);
}

TEST(DirectSum, Examples)
{
    const auto ds = direct_sum(rank2(2), discrete(1));
    EXPECT_EQ(ds, schurian({Permutation::from_cycles(3, {{0, 1}})}, 3));
    EXPECT_EQ(direct_sum(discrete(1), discrete(1)), discrete(2));

    const CoherentConfiguration c(direct_sum(rank2(2), rank2(3)));
    EXPECT_EQ(c.size(), 5u);
    EXPECT_EQ(c.rank(), 6u);
    EXPECT_EQ(c.cell_sizes(), (std::vector<std::uint64_t>{2, 3}));
}

TEST(DirectSum, RelationCount)
{
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"rank2:3", "thin-cyclic:3"}, {"direct-sum(rank2:2,rank2:2)", "discrete:1"}, {"discrete:2", "rank2:2"}}) {
        const auto sa = build_scheme(a), sb = build_scheme(b);
        const CoherentConfiguration c(direct_sum(sa, sb));
        EXPECT_EQ(c.scheme().cell_count(), sa.cell_count() + sb.cell_count());
        EXPECT_EQ(c.rank(), sa.rank() + sb.rank() + 2 * sa.cell_count() * sb.cell_count()) << a << " + " << b;
    }
}

TEST(Corpus, Registry)
{
    const auto all = corpus();
    EXPECT_GE(all.size(), 25u);
    std::set<std::string> ids;
    std::size_t inhomogeneous_sums = 0;
    for (const auto& e : all) {
        EXPECT_TRUE(ids.insert(e.id).second) << "duplicate " << e.id;
        const auto s = build_scheme(e.id);
        EXPECT_LE(s.size(), 64u);
        if (e.id.rfind("direct-sum", 0) == 0 && s.cell_count() > 1)
            ++inhomogeneous_sums;
    }
    EXPECT_GE(inhomogeneous_sums, 5u);
    for (const char* required : {"hamming:2:2", "hamming:3:2", "johnson:4:2", "johnson:5:2", "rank2:24",
                                 "thin-quaternion", "thin-dihedral:4", "thin-abelian:2:2:2", "thin-cyclic:8"})
        EXPECT_TRUE(ids.count(required)) << required;
}

TEST(Corpus, FilterAndCaps)
{
    CorpusOptions opt;
    opt.filter = "^thin-cyclic:";
    EXPECT_EQ(corpus(opt).size(), 12u);
    opt.filter = "no-such-family";
    EXPECT_TRUE(corpus(opt).empty());
    opt.filter.clear();
    opt.max_points = 4;
    for (const auto& e : corpus(opt))
        EXPECT_LE(build_scheme(e.id).size(), 4u);
    opt.seed = 42;
    for (const auto& e : corpus(opt))
        EXPECT_EQ(e.seed, 42u);
}

TEST(Corpus, SpecErrors)
{
    for (const char* bad : {"", "rank2", "rank2:x", "rank2:3:4", "torus:3", "direct-sum(rank2:2)", "direct-sum(rank2:2,",
                            "schurian:3:0.0.1", "thin-sym:9", "rank2:100000", "johnson:4:4"})
        EXPECT_THROW(build_scheme(bad), std::invalid_argument) << bad;
}
