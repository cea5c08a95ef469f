#pragma once

// Pattern hypergraphs: monotone paths P_m, power paths P_m^t, the minimal
// jump member I_n, and membership in the family of monotone paths with
// jumps together with the associated ordered graph G_H.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"

namespace ramsey
{

/// A jump set J inside a pattern on positions 1..m. J never holds the first
/// or last position and never two consecutive positions.
class JumpSpec
{
public:
    JumpSpec() = default;

    JumpSpec(int m, std::vector<int> positions) : m_(m), positions_(std::move(positions))
    {
        std::sort(positions_.begin(), positions_.end());
        if (auto why = violation(m, positions_))
            throw InputError("invalid jump set: " + *why);
    }

    /// Describes the first breach of the jump-set rules, scanning positions
    /// in increasing order; nullopt when the set is valid.
    static std::optional<std::string> violation(int m, std::span<const int> positions)
    {
        std::vector<int> sorted(positions.begin(), positions.end());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
        {
            const int p = sorted[i];
            if (p < 1 || p > m)
                return "position " + std::to_string(p) + " outside 1.." + std::to_string(m);
            if (p == 1)
                return "position 1 is the first vertex";
            if (p == m)
                return "position " + std::to_string(p) + " is the last vertex";
            if (i > 0 && sorted[i - 1] == p)
                return "position " + std::to_string(p) + " listed twice";
            if (i > 0 && sorted[i - 1] + 1 == p)
                return "positions " + std::to_string(p - 1) + " and " + std::to_string(p) + " are consecutive";
        }
        return std::nullopt;
    }

    int host_size() const noexcept { return m_; }
    const std::vector<int>& positions() const noexcept { return positions_; }
    std::size_t size() const noexcept { return positions_.size(); }
    bool contains(int p) const { return std::binary_search(positions_.begin(), positions_.end(), p); }
    int largest() const { return positions_.back(); }

    bool operator==(const JumpSpec&) const = default;

private:
    int m_ = 0;
    std::vector<int> positions_;
};

inline OrderedTripleSystem monotone_path(int m)
{
    if (m < 0)
        throw InputError("path size must be non-negative");
    std::vector<Triple> edges;
    for (int i = 1; i + 2 <= m; ++i)
        edges.push_back({i, i + 1, i + 2});
    return OrderedTripleSystem(m, std::move(edges));
}

/// Every window of t consecutive vertices spans all C(t,3) triples.
inline OrderedTripleSystem power_path(int m, int t)
{
    if (t < 3)
        throw InputError("power path window must be at least 3");
    if (m < 0)
        throw InputError("path size must be non-negative");
    std::vector<Triple> edges;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m && b < a + t; ++b)
            for (int c = b + 1; c <= m && c < a + t; ++c)
                edges.push_back({a, b, c});
    return OrderedTripleSystem(m, std::move(edges));
}

struct JumpMember
{
    OrderedTripleSystem pattern;
    JumpSpec jumps;
};

/// I_n: vertices 1..2n+1, consecutive triples plus (2i-1,2i+1,2i+2),
/// (2i,2i+1,2i+3) and (2i-1,2i+1,2i+3) where in range; jumps at even positions.
inline JumpMember jump_min(int n)
{
    if (n < 1)
        throw InputError("jump count must be at least 1");
    const int m = 2 * n + 1;
    std::vector<Triple> edges = monotone_path(m).edges();
    for (int i = 1; i <= n; ++i)
        for (const Triple& e : {Triple{2 * i - 1, 2 * i + 1, 2 * i + 2}, Triple{2 * i, 2 * i + 1, 2 * i + 3},
                                Triple{2 * i - 1, 2 * i + 1, 2 * i + 3}})
            if (e.c <= m)
                edges.push_back(e);
    std::vector<int> jumps;
    for (int i = 1; i <= n; ++i)
        jumps.push_back(2 * i);
    return {OrderedTripleSystem::from_union(m, std::move(edges)), JumpSpec(m, std::move(jumps))};
}

/// The minimal edge set of a member with jump set J. Jump-edges are only
/// required when every position they mention lies in 1..m.
inline OrderedTripleSystem required_edges(const JumpSpec& J)
{
    const int m = J.host_size();
    auto in_range = [m](int p) { return 1 <= p && p <= m; };
    std::vector<Triple> edges = monotone_path(m).edges();
    for (int v : J.positions())
    {
        if (in_range(v - 2))
            edges.push_back({v - 2, v - 1, v + 1});
        if (in_range(v + 2))
            edges.push_back({v - 1, v + 1, v + 2});
        if (J.contains(v + 2) && in_range(v - 1) && in_range(v + 3))
            edges.push_back({v - 1, v + 1, v + 3});
    }
    return OrderedTripleSystem::from_union(m, std::move(edges));
}

inline OrderedTripleSystem required_edges(int m, const JumpSpec& J)
{
    if (J.host_size() != m)
        throw InputError("jump set was built for a different pattern size");
    return required_edges(J);
}

struct MembershipReport
{
    bool valid = false;
    std::string violation;
    std::optional<Triple> missing_edge;

    explicit operator bool() const noexcept { return valid; }
};

/// Checks that `jumps` is a valid jump set and H contains every required edge.
inline MembershipReport validate_jump_member(const OrderedTripleSystem& H, std::span<const int> jumps)
{
    if (auto why = JumpSpec::violation(H.vertex_count(), jumps))
        return {false, *why, std::nullopt};
    const JumpSpec J(H.vertex_count(), std::vector<int>(jumps.begin(), jumps.end()));
    for (const auto& e : required_edges(J).edges())
        if (!H.contains(e))
            return {false, "missing edge " + to_string(e), e};
    return {true, {}, std::nullopt};
}

inline MembershipReport validate_jump_member(const OrderedTripleSystem& H, const JumpSpec& J)
{
    return validate_jump_member(H, std::span<const int>(J.positions()));
}

/// A vertex-ordered simple graph with sorted pairs.
struct OrderedGraph
{
    int m = 0;
    std::vector<Pair> pairs;

    bool contains(const Pair& p) const { return std::binary_search(pairs.begin(), pairs.end(), p); }
    bool contains(int u, int v) const { return contains(u < v ? Pair{u, v} : Pair{v, u}); }

    bool operator==(const OrderedGraph&) const = default;
};

/// G_H: consecutive pairs plus the chord (v-1, v+1) over every jump v.
inline OrderedGraph associated_graph(const JumpSpec& J)
{
    OrderedGraph g{J.host_size(), {}};
    for (int i = 1; i < g.m; ++i)
        g.pairs.push_back({i, i + 1});
    for (int v : J.positions())
        g.pairs.push_back({v - 1, v + 1});
    std::sort(g.pairs.begin(), g.pairs.end());
    return g;
}

} // namespace ramsey
