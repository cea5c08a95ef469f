#include <set>

#include <gtest/gtest.h>

#include <ramsey/family.hpp>

#include "oracles.hpp"

using namespace ramsey;

namespace
{

std::vector<Triple> extra_edges(const OrderedTripleSystem& h)
{
    std::vector<Triple> out;
    for (const auto& e : h.edges())
        if (!(e.b == e.a + 1 && e.c == e.b + 1))
            out.push_back(e);
    return out;
}

// All valid jump sets on 1..m, by subset enumeration.
std::vector<std::vector<int>> all_jump_sets(int m)
{
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask)
    {
        const auto J = oracle::subset_members(mask);
        if (!JumpSpec::violation(m, J))
            out.push_back(J);
    }
    return out;
}

} // namespace

TEST(MonotonePath, Examples)
{
    EXPECT_EQ(monotone_path(3).edges(), (std::vector<Triple>{{1, 2, 3}}));
    EXPECT_TRUE(monotone_path(2).edges().empty());
    EXPECT_EQ(monotone_path(2).vertex_count(), 2);
    const auto p6 = monotone_path(6);
    EXPECT_EQ(p6.edge_count(), 4u);
    EXPECT_EQ(p6.edges().back(), (Triple{4, 5, 6}));
}

TEST(PowerPath, WindowThreeIsMonotonePath)
{
    for (int m = 0; m <= 10; ++m)
        EXPECT_EQ(power_path(m, 3), monotone_path(m)) << m;
}

TEST(PowerPath, Examples)
{
    // windows {1,2,3,4} and {2,3,4,5}: 4 + 4 triples sharing (2,3,4)
    std::set<Triple> expected;
    for (int start : {1, 2})
        for (const auto& t : oracle::lex_triples(4))
            expected.insert({t.a + start - 1, t.b + start - 1, t.c + start - 1});
    EXPECT_EQ(expected.size(), 7u);
    EXPECT_EQ(power_path(5, 4).edges(), std::vector<Triple>(expected.begin(), expected.end()));

    EXPECT_EQ(power_path(4, 4).edges(), oracle::lex_triples(4));
    EXPECT_THROW(power_path(5, 2), InputError);
}

TEST(JumpMin, IsTwoWithFigureEdges)
{
    const auto [h, J] = jump_min(2);
    EXPECT_EQ(h.vertex_count(), 5);
    EXPECT_EQ(extra_edges(h), (std::vector<Triple>{{1, 3, 4}, {1, 3, 5}, {2, 3, 5}}));
    EXPECT_EQ(J.positions(), (std::vector<int>{2, 4}));
}

TEST(JumpMin, SmallCases)
{
    const auto one = jump_min(1);
    EXPECT_EQ(one.pattern, monotone_path(3));
    EXPECT_EQ(one.jumps.positions(), std::vector<int>{2});

    // i = 1: (1,3,4) (2,3,5) (1,3,5); i = 2: (3,5,6) (4,5,7) (3,5,7); i = 3: all out of range
    const auto three = jump_min(3);
    EXPECT_EQ(three.pattern.vertex_count(), 7);
    EXPECT_EQ(three.pattern.edge_count(), 5u + 6u);
    EXPECT_EQ(extra_edges(three.pattern),
              (std::vector<Triple>{{1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {3, 5, 6}, {3, 5, 7}, {4, 5, 7}}));
    EXPECT_THROW(jump_min(0), InputError);
}

TEST(JumpMin, ValidMemberForAllSmallN)
{
    for (int n = 1; n <= 30; ++n)
    {
        const auto [h, J] = jump_min(n);
        EXPECT_FALSE(JumpSpec::violation(h.vertex_count(), J.positions()));
        EXPECT_TRUE(validate_jump_member(h, J).valid) << n;
        EXPECT_EQ(h, required_edges(J)) << n;
    }
}

TEST(JumpSpec, ConditionZero)
{
    EXPECT_THROW(JumpSpec(5, {1}), InputError);
    EXPECT_THROW(JumpSpec(5, {5}), InputError);
    EXPECT_THROW(JumpSpec(5, {2, 3}), InputError);
    EXPECT_THROW(JumpSpec(5, {6}), InputError);
    EXPECT_NO_THROW(JumpSpec(5, {}));
    EXPECT_EQ(JumpSpec(5, {4, 2}).positions(), (std::vector<int>{2, 4}));
}

TEST(RequiredEdges, Examples)
{
    EXPECT_EQ(required_edges(5, JumpSpec(5, {2, 4})), jump_min(2).pattern);
    EXPECT_EQ(required_edges(5, JumpSpec(5, {})), monotone_path(5));
    const auto spread = required_edges(9, JumpSpec(9, {2, 5, 8}));
    EXPECT_TRUE(power_path(9, 4).contains_all(spread));
    EXPECT_THROW(required_edges(6, JumpSpec(5, {2})), InputError);
}

TEST(RequiredEdges, MatchesConditionsForAllJumpSets)
{
    for (int m = 0; m <= 12; ++m)
        for (const auto& J : all_jump_sets(m))
        {
            const auto expected = oracle::required(m, J);
            EXPECT_EQ(required_edges(JumpSpec(m, J)).edges(), std::vector<Triple>(expected.begin(), expected.end()));
        }
}

TEST(RequiredEdges, MonotoneInJumpSet)
{
    for (int m = 3; m <= 11; ++m)
    {
        const auto sets = all_jump_sets(m);
        for (const auto& small : sets)
            for (const auto& big : sets)
                if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
                {
                    EXPECT_TRUE(required_edges(JumpSpec(m, big)).contains_all(required_edges(JumpSpec(m, small))));
                }
    }
}

TEST(RequiredEdges, SpreadJumpsFitPowerPath)
{
    for (int n = 1; n <= 30; ++n)
    {
        std::vector<int> J;
        for (int i = 1; i <= n; ++i)
            J.push_back(3 * i - 1);
        const JumpSpec spec(3 * n, J);
        EXPECT_TRUE(power_path(3 * n, 4).contains_all(required_edges(spec))) << n;
        EXPECT_TRUE(validate_jump_member(power_path(3 * n, 4), spec).valid) << n;
    }
}

TEST(ValidateJumpMember, Reports)
{
    const auto [i2, J] = jump_min(2);
    EXPECT_TRUE(validate_jump_member(i2, J).valid);

    const std::vector<int> two{2};
    const auto report = validate_jump_member(monotone_path(5), two);
    EXPECT_FALSE(report.valid);
    ASSERT_TRUE(report.missing_edge.has_value());
    EXPECT_EQ(*report.missing_edge, (Triple{1, 3, 4}));

    const std::vector<int> bad{2, 3};
    const auto consecutive = validate_jump_member(i2, bad);
    EXPECT_FALSE(consecutive.valid);
    EXPECT_FALSE(consecutive.missing_edge.has_value());
    EXPECT_NE(consecutive.violation.find("consecutive"), std::string::npos);

    const std::vector<int> last{5};
    EXPECT_FALSE(validate_jump_member(i2, last).valid);
}

TEST(ValidateJumpMember, SupersetsStayMembers)
{
    auto [h, J] = jump_min(2);
    auto edges = h.edges();
    edges.push_back({1, 2, 5});
    EXPECT_TRUE(validate_jump_member(OrderedTripleSystem::from_union(5, edges), J).valid);
}

TEST(AssociatedGraph, Examples)
{
    EXPECT_EQ(associated_graph(JumpSpec(3, {2})).pairs, (std::vector<Pair>{{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(associated_graph(JumpSpec(5, {2, 4})).pairs,
              (std::vector<Pair>{{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}));
    EXPECT_EQ(associated_graph(JumpSpec(4, {})).pairs, (std::vector<Pair>{{1, 2}, {2, 3}, {3, 4}}));
}

TEST(AssociatedGraph, CoversPairsOfRequiredEdges)
{
    for (int m = 0; m <= 15; ++m)
        for (const auto& J : all_jump_sets(m))
        {
            const JumpSpec spec(m, J);
            const auto g = associated_graph(spec);
            for (const auto& e : required_edges(spec).edges())
            {
                EXPECT_TRUE(g.contains(e.a, e.b)) << m;
                EXPECT_TRUE(g.contains(e.b, e.c)) << m;
            }
        }
}

TEST(JumpSpec, MinimalHostSizeIsTwoNPlusOne)
{
    for (int n = 1; n <= 6; ++n)
    {
        int smallest = -1;
        for (int m = 0; m <= 2 * n + 3 && smallest < 0; ++m)
            for (const auto& J : all_jump_sets(m))
                if (static_cast<int>(J.size()) == n)
                {
                    smallest = m;
                    break;
                }
        EXPECT_EQ(smallest, 2 * n + 1) << n;
    }
}
