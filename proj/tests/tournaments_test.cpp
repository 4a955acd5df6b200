#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace qrt;

namespace {

Tournament random_tournament(Rng &rng, int n)
{
        Tournament t(n);
        for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                        if (uniform_below(rng, 2))
                                t.orient(j, i);
        return t;
}

std::vector<int> random_perm(Rng &rng, int n)
{
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
}

} // namespace

TEST(Enumerate, ClassCounts)
{
        const std::vector<std::size_t> expected = {1, 1, 2, 4, 12, 56, 456};
        for (int n = 1; n <= 7; ++n)
                EXPECT_EQ(enumerate(n).size(), expected[static_cast<std::size_t>(n - 1)]) << "n=" << n;
}

TEST(Enumerate, CountsAgreeWithBurnside)
{
        for (int n = 1; n <= 7; ++n)
                EXPECT_EQ(static_cast<long>(enumerate(n).size()), oracle::burnside_classes(n)) << "n=" << n;
}

TEST(Enumerate, OrderedAndDistinct)
{
        for (int n = 1; n <= 6; ++n) {
                const auto &cls = enumerate(n);
                EXPECT_EQ(cls.front().encode(), Tournament::transitive(n).encode());
                for (std::size_t i = 0; i + 1 < cls.size(); ++i)
                        EXPECT_GT(cls[i].encode(), cls[i + 1].encode());
                for (const auto &t : cls)
                        EXPECT_EQ(canonical_form(t), t.encode());
        }
}

TEST(Enumerate, RangeChecked)
{
        EXPECT_THROW(enumerate(0), std::out_of_range);
        EXPECT_THROW(enumerate(8), std::out_of_range);
}

// Every labelled tournament on n <= 5 vertices is isomorphic (by exhaustive permutation
// search) to exactly one listed class, and the orbit of each class has n!/|Aut| members.
TEST(Enumerate, ExhaustiveLabelledCover)
{
        for (int n = 1; n <= 5; ++n) {
                const auto &cls = enumerate(n);
                std::vector<long> orbit(cls.size(), 0);
                const unsigned long total = 1UL << (n * (n - 1) / 2);
                for (unsigned long code = 0; code < total; ++code) {
                        Tournament t = oracle::from_code(n, code);
                        int hits = 0;
                        for (std::size_t c = 0; c < cls.size(); ++c)
                                if (oracle::isomorphic(t, cls[c])) {
                                        ++hits;
                                        ++orbit[c];
                                }
                        ASSERT_EQ(hits, 1) << t.encode();
                }
                for (std::size_t c = 0; c < cls.size(); ++c)
                        EXPECT_EQ(orbit[c], oracle::factorial(n) / oracle::automorphisms(cls[c]));
        }
}

TEST(Enumerate, SixVertexOrbitSizes)
{
        const int n = 6;
        std::map<std::string, long> orbit;
        for (unsigned long code = 0; code < (1UL << 15); ++code)
                ++orbit[canonical_form(oracle::from_code(n, code))];
        const auto &cls = enumerate(n);
        ASSERT_EQ(orbit.size(), cls.size());
        long sum = 0;
        for (const auto &t : cls) {
                ASSERT_TRUE(orbit.count(t.encode()));
                EXPECT_EQ(orbit[t.encode()], 720 / oracle::automorphisms(t));
                sum += 720 / automorphism_count(t);
        }
        EXPECT_EQ(sum, 1L << 15);
}

TEST(Canonical, InvariantUnderRelabelling)
{
        Rng rng = make_stream(21, 0);
        for (int trial = 0; trial < 50; ++trial) {
                const int n = static_cast<int>(uniform_int(rng, 1, 10));
                Tournament t = random_tournament(rng, n);
                const std::string key = canonical_form(t);
                for (int k = 0; k < 5; ++k) {
                        auto p = random_perm(rng, n);
                        ASSERT_EQ(canonical_form(t.relabeled(p)), key);
                }
                EXPECT_TRUE(oracle::isomorphic(t, canonical(t)));
        }
}

TEST(Canonical, IsomorphismAgreesWithBruteForce)
{
        Rng rng = make_stream(22, 0);
        int same = 0;
        for (int trial = 0; trial < 400; ++trial) {
                const int n = static_cast<int>(uniform_int(rng, 3, 6));
                Tournament a = random_tournament(rng, n);
                Tournament b = trial % 3 == 0 ? a.relabeled(random_perm(rng, n)) : random_tournament(rng, n);
                bool expect = oracle::isomorphic(a, b);
                same += expect;
                ASSERT_EQ(isomorphic(a, b), expect) << a.encode() << " " << b.encode();
        }
        EXPECT_GT(same, 100);
}

TEST(Automorphisms, AgreeWithBruteForce)
{
        for (int n = 1; n <= 6; ++n)
                for (const auto &t : enumerate(n))
                        EXPECT_EQ(automorphism_count(t), oracle::automorphisms(t)) << t.encode();
}

TEST(Automorphisms, NamedExamples)
{
        EXPECT_EQ(automorphism_count(catalog()[5]), 3);
        EXPECT_EQ(automorphism_count(catalog()[7]), 3);
        EXPECT_EQ(automorphism_count(catalog()[19]), 5);
        EXPECT_EQ(automorphism_count(cyclic_triangle()), 3);
        EXPECT_EQ(automorphism_count(Tournament::transitive(9)), 1);
}

TEST(Encoding, RoundTrip)
{
        Rng rng = make_stream(23, 0);
        for (int trial = 0; trial < 100; ++trial) {
                Tournament t = random_tournament(rng, static_cast<int>(uniform_int(rng, 1, 12)));
                EXPECT_EQ(Tournament::decode(t.encode()), t);
        }
        EXPECT_EQ(Tournament::transitive(3).encode(), "t3:111");
        EXPECT_EQ(cyclic_triangle().encode(), "t3:101");
}

TEST(Encoding, RejectsMalformed)
{
        for (const char *bad : {"", "t", "t3", "t3:11", "t3:1111", "t3:1a1", "x3:111", "t0:", "t:1"})
                EXPECT_THROW(Tournament::decode(bad), std::invalid_argument) << bad;
}

TEST(Structure, ScoresAndReversal)
{
        Tournament t = Tournament::transitive(5);
        EXPECT_EQ(t.out_degrees(), (std::vector<int>{4, 3, 2, 1, 0}));
        EXPECT_EQ(t.score_sequence(), (std::vector<int>{0, 1, 2, 3, 4}));
        Tournament r = t.reversed();
        EXPECT_EQ(r.out_degree(0), 0);
        EXPECT_TRUE(isomorphic(t, r));
        EXPECT_TRUE(is_regular(catalog()[19]));
        EXPECT_FALSE(is_regular(Tournament::transitive(3)));
}

TEST(Structure, FromAdjacencyValidates)
{
        EXPECT_THROW(Tournament::from_adjacency({{0, 1}, {1, 0}}), std::invalid_argument);
        EXPECT_THROW(Tournament::from_adjacency({{0, 0}, {0, 0}}), std::invalid_argument);
        EXPECT_THROW(Tournament::from_adjacency({{1, 0}, {1, 0}}), std::invalid_argument);
}

TEST(Catalog, ResolvedUniquely)
{
        const Catalog &cat = catalog();
        EXPECT_TRUE(cat.unique);
        ASSERT_EQ(cat.entries.size(), 20U);
        const std::map<int, std::string> five = {
            {8, "t5:1111111111"},  {9, "t5:1011111111"},  {10, "t5:1101111111"}, {11, "t5:1111101111"},
            {12, "t5:1110101111"}, {13, "t5:1101101110"}, {14, "t5:1110111111"}, {15, "t5:1111110111"},
            {16, "t5:1111111101"}, {17, "t5:1011111101"}, {18, "t5:1101110111"}, {19, "t5:1100110111"}};
        for (const auto &[i, enc] : five)
                EXPECT_EQ(cat[i].encode(), enc) << "H" << i;
        // Every class on at most 5 vertices appears exactly once.
        std::size_t listed = 0;
        for (int n = 1; n <= 5; ++n)
                for (const auto &t : enumerate(n)) {
                        ASSERT_TRUE(cat.index_of(t).has_value()) << t.encode();
                        ++listed;
                }
        EXPECT_EQ(listed, 20U);
}

TEST(Catalog, SmallNamedEntries)
{
        const Catalog &cat = catalog();
        EXPECT_EQ(cat.label(Tournament::transitive(3)), "TT3/H2");
        EXPECT_EQ(cat.label(cyclic_triangle()), "C3/H3");
        EXPECT_EQ(cat.label(Tournament::transitive(5)), "TT5/H8");
        EXPECT_EQ(cat.label(cat[6]), "C4/H6");
        EXPECT_EQ(cat.label(cat[9]), "H9");
        EXPECT_EQ(cat.label(Tournament::transitive(7)), "TT7");
        // C3 plus a sink, C3 plus a source.
        Tournament sink = Tournament::from_arcs(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
        EXPECT_EQ(cat.index_of(sink), 5);
        EXPECT_EQ(cat.index_of(sink.reversed()), 7);
        // C4 is the strongly connected 4-vertex class: score sequence (1,1,2,2).
        EXPECT_EQ(cat[6].score_sequence(), (std::vector<int>{1, 1, 2, 2}));
}

TEST(Catalog, ReversalPairs)
{
        const Catalog &cat = catalog();
        EXPECT_TRUE(oracle::isomorphic(cat[9].reversed(), cat[16]));
        EXPECT_TRUE(oracle::isomorphic(cat[10].reversed(), cat[15]));
        EXPECT_TRUE(oracle::isomorphic(cat[19].reversed(), cat[19]));
        EXPECT_TRUE(oracle::isomorphic(cat[8].reversed(), cat[8]));
}

TEST(Catalog, ParseNames)
{
        EXPECT_EQ(parse_tournament("H12"), catalog()[12]);
        EXPECT_EQ(parse_tournament("TT4").encode(), "t4:111111");
        EXPECT_EQ(parse_tournament("C3"), catalog()[3]);
        EXPECT_EQ(parse_tournament("C4"), catalog()[6]);
        EXPECT_EQ(parse_tournament("t3:101"), cyclic_triangle());
        for (const char *bad : {"H20", "H", "TT0", "TT17", "C5", "q", "H1x"})
                EXPECT_THROW(parse_tournament(bad), std::invalid_argument) << bad;
}

TEST(SevenVertex, ExampleTournamentIsRegular)
{
        Tournament t = example_seven();
        EXPECT_TRUE(is_regular(t));
        EXPECT_EQ(canonical_form(t), "t7:111000101101101011101");
        int regular = 0;
        for (const auto &c : enumerate(7))
                regular += is_regular(c);
        EXPECT_EQ(regular, 3);
}
