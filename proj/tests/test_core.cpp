#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include <ramsey/core.hpp>
#include <ramsey/io.hpp>

#include "oracles.hpp"

using namespace ramsey;

TEST(LexRank, FirstAndLastTriple)
{
    EXPECT_EQ(lex_rank({1, 2, 3}, 5), 0u);
    EXPECT_EQ(lex_rank({3, 4, 5}, 5), 9u);
}

TEST(LexRank, MatchesEnumeration)
{
    // 123 124 125 134 ... -> (1,3,4) sits at index 3
    const auto all = oracle::lex_triples(5);
    const auto it = std::find(all.begin(), all.end(), Triple{1, 3, 4});
    EXPECT_EQ(static_cast<std::uint64_t>(it - all.begin()), 3u);
    EXPECT_EQ(lex_rank({1, 3, 4}, 5), 3u);
}

TEST(LexRank, InverseOfUnrankExhaustive)
{
    for (int N = 0; N <= 12; ++N)
    {
        const auto all = oracle::lex_triples(N);
        ASSERT_EQ(all.size(), triple_count(N));
        for (std::uint64_t r = 0; r < all.size(); ++r)
        {
            EXPECT_EQ(lex_rank(all[r], N), r);
            EXPECT_EQ(lex_unrank(r, N), all[r]);
        }
    }
}

TEST(LexRank, RejectsBadTriples)
{
    EXPECT_THROW(lex_rank({2, 1, 3}, 5), InputError);
    EXPECT_THROW(lex_rank({1, 2, 6}, 5), InputError);
    EXPECT_THROW(lex_rank({0, 2, 3}, 5), InputError);
    EXPECT_THROW(lex_rank({1, 1, 3}, 5), InputError);
    EXPECT_THROW(lex_unrank(10, 5), InputError);
}

TEST(OrderedTripleSystem, Invariants)
{
    EXPECT_THROW(OrderedTripleSystem(3, {{1, 2, 3}, {1, 2, 3}}), InputError);
    EXPECT_THROW(OrderedTripleSystem(3, {{1, 3, 2}}), InputError);
    EXPECT_THROW(OrderedTripleSystem(3, {{1, 2, 4}}), InputError);
    EXPECT_THROW(OrderedTripleSystem(2, {{1, 2, 3}}), InputError);
    EXPECT_NO_THROW(OrderedTripleSystem(2, {}));
    EXPECT_NO_THROW(OrderedTripleSystem(0, {}));

    const OrderedTripleSystem h(5, {{2, 3, 5}, {1, 2, 3}});
    EXPECT_EQ(h.edges().front(), (Triple{1, 2, 3}));
    EXPECT_TRUE(h.contains({2, 3, 5}));
    EXPECT_FALSE(h.contains({1, 2, 4}));
    EXPECT_EQ(h.width(), 3);

    const auto merged = OrderedTripleSystem::from_union(4, {{1, 2, 3}, {1, 2, 3}, {2, 3, 4}});
    EXPECT_EQ(merged.edge_count(), 2u);
}

TEST(TripleColoring, BitCountEqualsTripleCount)
{
    for (int N = 0; N <= 20; ++N)
    {
        TripleColoring c(N);
        EXPECT_EQ(c.size(), oracle::lex_triples(N).size());
        const auto text = to_text(c);
        EXPECT_EQ(text.substr(text.find('\n') + 1).size(), c.size() + 1);
    }
}

TEST(TripleColoring, RankLookupAgreesWithLexRank)
{
    std::mt19937_64 rng(7);
    const auto c = oracle::random_triples(9, rng);
    for (const auto& t : oracle::lex_triples(9))
    {
        EXPECT_EQ(c.rank(t.a, t.b, t.c), lex_rank(t, 9));
        EXPECT_EQ(c.color(t), c.at_rank(lex_rank(t, 9)));
    }
}

TEST(PairColoring, RejectsOutOfRangeColors)
{
    EXPECT_THROW(PairColoring(3, 2, {1, 2, 3}), InputError);
    EXPECT_THROW(PairColoring(3, 2, {1, 2}), InputError);
    const PairColoring chi(3, 2, {1, 2, 1});
    EXPECT_EQ(chi(1, 3), 2);
    EXPECT_EQ(chi(3, 1), 2);
}

TEST(Embedding, MustIncrease)
{
    EXPECT_THROW(Embedding::make({1, 3, 3}), InputError);
    EXPECT_EQ(Embedding::make({2, 4, 7})(2), 4);
}

// ---------------------------------------------------------------------------
// Formats

TEST(Format, ConstantPairColoring)
{
    const auto chi = pair_coloring_from_text("pairs 3 1\n2 3 1\n1 2 1\n1 3 1\n");
    EXPECT_EQ(chi.vertex_count(), 3);
    EXPECT_EQ(chi.palette(), 1);
    EXPECT_EQ(to_text(chi), "pairs 3 1\n1 2 1\n1 3 1\n2 3 1\n");
}

TEST(Format, AllBlueTriples)
{
    const auto c = triple_coloring_from_text("triples 4\n0000\n");
    EXPECT_EQ(c, TripleColoring(4));
    EXPECT_EQ(c.red_count(), 0u);
}

TEST(Format, PatternP3)
{
    const auto p = pattern_from_text("pattern 3\n1 2 3\n");
    EXPECT_EQ(p.pattern, OrderedTripleSystem(3, {{1, 2, 3}}));
    EXPECT_FALSE(p.jumps.has_value());
    const auto q = pattern_from_text("pattern 3\n1 2 3\njumps 2\n");
    ASSERT_TRUE(q.jumps.has_value());
    EXPECT_EQ(*q.jumps, std::vector<int>{2});
}

TEST(Format, PairErrorsNameTheLine)
{
    try
    {
        pair_coloring_from_text("pairs 3 2\n1 2 1\n1 2 2\n2 3 1\n");
        FAIL() << "duplicate accepted";
    }
    catch (const FormatError& e)
    {
        EXPECT_EQ(e.line(), 3u);
    }
    try
    {
        pair_coloring_from_text("pairs 3 2\n1 2 1\n1 3 3\n2 3 1\n");
        FAIL() << "color out of range accepted";
    }
    catch (const FormatError& e)
    {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(pair_coloring_from_text("pairs 3 2\n1 2 1\n2 3 1\n"), FormatError); // missing (1,3)
    EXPECT_THROW(pair_coloring_from_text("pairs 3 2\n1 4 1\n"), FormatError);
    EXPECT_THROW(pair_coloring_from_text("pairs 3 2\n2 1 1\n"), FormatError);
    EXPECT_THROW(pair_coloring_from_text(""), FormatError);
    EXPECT_THROW(pair_coloring_from_text("triples 3\n0\n"), FormatError);
}

TEST(Format, TripleErrors)
{
    EXPECT_THROW(triple_coloring_from_text("triples 4\n000\n"), FormatError);
    EXPECT_THROW(triple_coloring_from_text("triples 4\n00x0\n"), FormatError);
    EXPECT_THROW(triple_coloring_from_text("triples 4\n"), FormatError);
    EXPECT_THROW(triple_coloring_from_text("triples 4\n0000\n1\n"), FormatError);
    EXPECT_NO_THROW(triple_coloring_from_text("triples 2\n"));
}

TEST(Format, PatternErrors)
{
    EXPECT_THROW(pattern_from_text("pattern 3\n1 2 3\n1 2 3\n"), FormatError);
    EXPECT_THROW(pattern_from_text("pattern 3\n1 2 4\n"), FormatError);
    EXPECT_THROW(pattern_from_text("pattern 3\n2 1 3\n"), FormatError);
    EXPECT_THROW(pattern_from_text("pattern 5\njumps 2\n1 2 3\n"), FormatError);
}

TEST(Format, WitnessFields)
{
    const auto w = witness_from_text("vertices 1 3 5\njumps 2\nblocks 4\n");
    EXPECT_EQ(w.vertices, (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(w.jumps, std::vector<int>{2});
    EXPECT_EQ(w.blocks, std::vector<int>{4});
    EXPECT_THROW(witness_from_text("jumps 2\n"), FormatError);
    EXPECT_THROW(witness_from_text("vertices 3 1\n"), FormatError);
    EXPECT_THROW(witness_from_text("vertices 1\ncolor 2\n"), FormatError);
}

TEST(Format, RoundTripRandomValues)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial)
    {
        const int N = static_cast<int>(rng() % 12);
        const int k = 1 + static_cast<int>(rng() % 5);
        const auto chi = oracle::random_pairs(N, k, rng);
        EXPECT_EQ(pair_coloring_from_text(to_text(chi)), chi);

        const auto c = oracle::random_triples(N, rng);
        EXPECT_EQ(triple_coloring_from_text(to_text(c)), c);

        std::vector<Triple> edges;
        for (const auto& t : oracle::lex_triples(N))
            if (rng() % 3 == 0)
                edges.push_back(t);
        std::shuffle(edges.begin(), edges.end(), rng);
        PatternFile p{OrderedTripleSystem(N, edges), std::nullopt};
        if (N >= 3 && trial % 2 == 0)
            p.jumps = std::vector<int>{2};
        EXPECT_EQ(pattern_from_text(to_text(p)), p);

        Witness w;
        for (int v = 1; v <= N; ++v)
            if (rng() % 2)
                w.vertices.push_back(v);
        if (trial % 3 == 0)
            w.blocks = std::vector<int>{3, 2};
        EXPECT_EQ(witness_from_text(to_text(w)), w);
    }
}

TEST(Format, ShuffledPairInputSerializesCanonically)
{
    std::mt19937_64 rng(5);
    const auto chi = oracle::random_pairs(7, 3, rng);
    std::vector<std::string> lines;
    for (int u = 1; u <= 7; ++u)
        for (int v = u + 1; v <= 7; ++v)
            lines.push_back(std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(chi(u, v)));
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string text = "pairs 7 3\n";
    for (const auto& l : lines)
        text += l + "\n";
    EXPECT_EQ(to_text(pair_coloring_from_text(text)), to_text(chi));
}
