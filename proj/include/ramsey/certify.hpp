#pragma once

// Certificates extracted from the two halves of the r(3;n) sandwich:
//   - the monochromatic-triangle finder on the associated graph G_H, which
//     turns any blue jump member of a lifted coloring back into a
//     monochromatic triangle of the pair coloring;
//   - beta chains, profile staircases D(v) and the same-profile argument,
//     which bound the number of vertices without a red P_{n+2} or blue I_n.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "detect.hpp"
#include "family.hpp"

namespace ramsey
{

// ---------------------------------------------------------------------------
// Beta chains

/// v_1 < ... < v_{2l-1} cut into blocks (v_{2i-1}, v_{2i}, v_{2i+1}) that
/// share end vertices. Each block has all three alpha values equal, and block
/// values never increase along the chain.
struct BetaChain
{
    std::vector<int> vertices;
    std::vector<int> block_values;

    int ell() const noexcept { return static_cast<int>(vertices.size() + 1) / 2; }

    /// The chain formed by the last `l` - 1 blocks.
    BetaChain suffix(int l) const
    {
        if (l < 2 || l > ell())
            throw InputError("chain suffix length out of range");
        const auto drop_blocks = static_cast<std::size_t>(ell() - l);
        return BetaChain{std::vector<int>(vertices.begin() + static_cast<std::ptrdiff_t>(2 * drop_blocks), vertices.end()),
                         std::vector<int>(block_values.begin() + static_cast<std::ptrdiff_t>(drop_blocks), block_values.end())};
    }

    bool operator==(const BetaChain&) const = default;
};

/// nullopt if the chain is valid for alpha, else the first broken rule.
inline std::optional<std::string> chain_violation(const AlphaTable& alpha, const BetaChain& chain)
{
    const auto& v = chain.vertices;
    if (v.size() < 3 || v.size() % 2 == 0)
        return "chain needs an odd number (at least 3) of vertices";
    if (chain.block_values.size() != v.size() / 2)
        return "chain needs one block value per block";
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i])
            return "chain vertices must increase";
    for (std::size_t i = 0; i < chain.block_values.size(); ++i)
    {
        const int x = v[2 * i], y = v[2 * i + 1], z = v[2 * i + 2];
        const int value = chain.block_values[i];
        if (alpha(x, y) != value || alpha(y, z) != value || alpha(x, z) != value)
            return "block " + to_string(Triple{x, y, z}) + " is not alpha-monochromatic with value " + std::to_string(value);
        if (i > 0 && chain.block_values[i - 1] < value)
            return "block values increase at block " + std::to_string(i + 1);
    }
    return std::nullopt;
}

/// beta(u,v) for every pair, with one optimal chain per pair.
///
/// blocks(u,v) is the largest number of blocks in a chain whose last block
/// ends with (u,v):
///   blocks(u,v) = max over t < u with alpha(t,u) = alpha(u,v) = alpha(t,v) of
///                 1 + max(0, max over s < t with blocks(s,t) >= 1 and
///                                 alpha(s,t) >= alpha(t,u) of blocks(s,t)).
/// beta = blocks + 1 when a block exists, else 1.
class BetaTable
{
public:
    BetaTable() = default;

    explicit BetaTable(const AlphaTable& alpha) : N_(alpha.vertex_count()), alpha_(alpha)
    {
        const auto cells = static_cast<std::size_t>(N_ + 1) * static_cast<std::size_t>(N_ + 1);
        blocks_.assign(cells, 0);
        via_t_.assign(cells, 0);
        via_s_.assign(cells, 0);
        for (int u = 1; u <= N_; ++u)
            for (int v = u + 1; v <= N_; ++v)
                fill(u, v);
    }

    explicit BetaTable(const TripleColoring& c) : BetaTable(alpha_table(c, Color::Red)) {}

    int vertex_count() const noexcept { return N_; }
    const AlphaTable& alpha() const noexcept { return alpha_; }

    int blocks(int u, int v) const noexcept { return blocks_[index(u, v)]; }
    int operator()(int u, int v) const noexcept { return blocks(u, v) >= 1 ? blocks(u, v) + 1 : 1; }

    int max() const noexcept
    {
        int best = 0;
        for (int u = 1; u <= N_; ++u)
            for (int v = u + 1; v <= N_; ++v)
                best = std::max(best, (*this)(u, v));
        return best;
    }

    /// An optimal chain ending at (u,v); nullopt when beta(u,v) = 1. Ties
    /// prefer the smallest t, then the smallest s.
    std::optional<BetaChain> chain(int u, int v) const
    {
        if (blocks(u, v) < 1)
            return std::nullopt;
        std::vector<int> rev{v, u};
        std::vector<int> values_rev;
        int x = u, y = v;
        while (true)
        {
            const int t = via_t_[index(x, y)];
            const int s = via_s_[index(x, y)];
            values_rev.push_back(alpha_(x, y));
            rev.push_back(t);
            if (s == 0)
                break;
            rev.push_back(s);
            y = t;
            x = s;
        }
        BetaChain out{{rev.rbegin(), rev.rend()}, {values_rev.rbegin(), values_rev.rend()}};
        return out;
    }

private:
    std::size_t index(int u, int v) const noexcept
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(N_ + 1) + static_cast<std::size_t>(v);
    }

    void fill(int u, int v)
    {
        const int value = alpha_(u, v);
        int best = 0, best_t = 0, best_s = 0;
        for (int t = 1; t < u; ++t)
        {
            if (alpha_(t, u) != value || alpha_(t, v) != value)
                continue;
            int inner = 0, inner_s = 0;
            for (int s = 1; s < t; ++s)
            {
                const int b = blocks(s, t);
                if (b >= 1 && alpha_(s, t) >= value && b > inner)
                {
                    inner = b;
                    inner_s = s;
                }
            }
            if (1 + inner > best)
            {
                best = 1 + inner;
                best_t = t;
                best_s = inner_s;
            }
        }
        blocks_[index(u, v)] = best;
        via_t_[index(u, v)] = best_t;
        via_s_[index(u, v)] = best_s;
    }

    int N_ = 0;
    AlphaTable alpha_;
    std::vector<int> blocks_;
    std::vector<int> via_t_;
    std::vector<int> via_s_;
};

inline BetaTable beta_table(const TripleColoring& c) { return BetaTable(c); }

/// Reads a blue copy of I_n off a chain with n blocks. Every edge of I_n is
/// re-checked against the coloring.
inline Embedding extract_blue_jump_witness(const TripleColoring& c, const BetaChain& chain)
{
    const int n = chain.ell() - 1;
    if (n < 1)
        throw CertificationError("chain has no blocks");
    if (auto why = chain_violation(alpha_table(c, Color::Red), chain))
        throw CertificationError("invalid chain: " + *why);
    const Embedding phi = Embedding::make(chain.vertices);
    for (const auto& e : jump_min(n).pattern.edges())
    {
        const Triple host{phi(e.a), phi(e.b), phi(e.c)};
        if (!c.is_blue(host.a, host.b, host.c))
            throw CertificationError("edge " + to_string(e) + " of I_" + std::to_string(n) + " maps to red triple " +
                                     to_string(host));
    }
    return phi;
}

// ---------------------------------------------------------------------------
// Profiles

/// Downward-closed subset of the grid, stored as max_b[a-1] = largest b
/// with (a,b) in the set. Width is the largest a present.
struct ProfileStaircase
{
    std::vector<int> max_b;

    int width() const noexcept { return static_cast<int>(max_b.size()); }
    bool empty() const noexcept { return max_b.empty(); }
    bool contains(int a, int b) const noexcept
    {
        return a >= 1 && b >= 1 && a <= width() && b <= max_b[static_cast<std::size_t>(a - 1)];
    }

    bool operator==(const ProfileStaircase&) const = default;
    auto operator<=>(const ProfileStaircase&) const = default;
};

/// D(v) from the pairs (alpha(u,v), beta(u,v)) over u < v. Index 0 unused.
inline std::vector<ProfileStaircase> profile_table(const BetaTable& beta)
{
    const int N = beta.vertex_count();
    const auto& alpha = beta.alpha();
    std::vector<ProfileStaircase> out(static_cast<std::size_t>(N + 1));
    for (int v = 1; v <= N; ++v)
    {
        auto& stairs = out[static_cast<std::size_t>(v)].max_b;
        for (int u = 1; u < v; ++u)
        {
            const int a = alpha(u, v);
            if (static_cast<int>(stairs.size()) < a)
                stairs.resize(static_cast<std::size_t>(a), 0);
            for (int x = 0; x < a; ++x)
                stairs[static_cast<std::size_t>(x)] = std::max(stairs[static_cast<std::size_t>(x)], beta(u, v));
        }
    }
    return out;
}

inline std::vector<ProfileStaircase> profile_table(const TripleColoring& c) { return profile_table(BetaTable(c)); }

namespace detail
{

inline std::uint64_t count_staircases(int columns_left, int ceiling, int height)
{
    if (columns_left == 0)
        return 1;
    std::uint64_t total = 0;
    for (int h = 0; h <= ceiling && h <= height; ++h)
        total += count_staircases(columns_left - 1, h, height);
    return total;
}

} // namespace detail

/// Number of downward-closed subsets of [n] x [n], by enumerating the
/// non-increasing column heights.
inline std::uint64_t count_downsets(int n)
{
    if (n < 0)
        throw InputError("grid size must be non-negative");
    return detail::count_staircases(n, n, n);
}

struct ProfileReport
{
    int n = 0;
    bool red_path = false;     // red P_{n+2}
    bool blue_jump_min = false; // blue I_n
    int max_alpha = 0;
    int max_beta = 0;
    std::uint64_t downset_bound = 0;
    std::vector<std::vector<int>> groups; // vertices with identical D(v), by first vertex
    std::optional<std::array<int, 3>> triangle;
    std::optional<BetaChain> extended_chain;

    bool precondition_holds() const noexcept { return !red_path && !blue_jump_min; }
    bool clean() const noexcept { return !triangle; }
};

/// Groups vertices by profile and looks for an alpha-monochromatic triangle
/// inside a group. A triangle u < v < w with D(u) = D(w) extends an optimal
/// chain at some (t,u) by (v,w), which beats beta(v,w); the chain is
/// reported so the contradiction can be inspected.
inline ProfileReport verify_profile_property(const TripleColoring& c, int n)
{
    if (n < 1)
        throw InputError("parameter n must be at least 1");
    const BetaTable beta(c);
    const auto& alpha = beta.alpha();
    const auto profiles = profile_table(beta);
    const int N = c.vertex_count();

    ProfileReport report;
    report.n = n;
    report.max_alpha = alpha.max();
    report.max_beta = beta.max();
    report.red_path = report.max_alpha >= n + 1;
    report.blue_jump_min = find_blue_embedding(c, jump_min(n).pattern).has_value();
    report.downset_bound = count_downsets(n);

    std::map<ProfileStaircase, std::size_t> group_of;
    for (int v = 1; v <= N; ++v)
    {
        const auto& p = profiles[static_cast<std::size_t>(v)];
        auto [it, fresh] = group_of.try_emplace(p, report.groups.size());
        if (fresh)
            report.groups.emplace_back();
        report.groups[it->second].push_back(v);
    }

    for (const auto& group : report.groups)
    {
        for (std::size_t i = 0; i < group.size() && !report.triangle; ++i)
            for (std::size_t j = i + 1; j < group.size() && !report.triangle; ++j)
                for (std::size_t k = j + 1; k < group.size(); ++k)
                {
                    const int u = group[i], v = group[j], w = group[k];
                    if (alpha(u, v) == alpha(v, w) && alpha(u, v) == alpha(u, w))
                    {
                        report.triangle = std::array<int, 3>{u, v, w};
                        break;
                    }
                }
        if (report.triangle)
            break;
    }

    if (report.triangle)
    {
        const auto [u, v, w] = *report.triangle;
        for (int t = 1; t < u; ++t)
            if (alpha(t, u) >= alpha(v, w) && beta(t, u) >= beta(v, w))
            {
                if (auto base = beta.chain(t, u))
                {
                    base->vertices.push_back(v);
                    base->vertices.push_back(w);
                    base->block_values.push_back(alpha(u, v));
                    report.extended_chain = *base;
                }
                break;
            }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Monochromatic triangles in G_H

/// A coloring of the pairs of an ordered graph.
class GraphColoring
{
public:
    GraphColoring() = default;

    /// `colors` is aligned with graph.pairs.
    GraphColoring(OrderedGraph graph, const std::vector<int>& colors) : graph_(std::move(graph))
    {
        if (colors.size() != graph_.pairs.size())
            throw InputError("graph coloring needs one color per pair");
        for (std::size_t i = 0; i < colors.size(); ++i)
            colors_[graph_.pairs[i]] = colors[i];
    }

    const OrderedGraph& graph() const noexcept { return graph_; }

    int operator()(int u, int v) const
    {
        auto it = colors_.find(u < v ? Pair{u, v} : Pair{v, u});
        if (it == colors_.end())
            throw InputError("pair " + to_string(Pair{u, v}) + " is not an edge of the graph");
        return it->second;
    }

private:
    OrderedGraph graph_;
    std::map<Pair, int> colors_;
};

/// Restricts chi to the host copy described by a jump witness and reads it
/// as a coloring of G_H on pattern positions.
inline GraphColoring pull_back(const PairColoring& chi, const JumpWitness& witness)
{
    auto graph = associated_graph(witness.jumps);
    std::vector<int> colors;
    colors.reserve(graph.pairs.size());
    for (const auto& p : graph.pairs)
        colors.push_back(chi(witness.vertices[static_cast<std::size_t>(p.u - 1)],
                             witness.vertices[static_cast<std::size_t>(p.v - 1)]));
    return GraphColoring(std::move(graph), colors);
}

/// Finds a monochromatic triangle of G_H, given a coloring with at most |J|
/// colors that never increases along a required edge: for every required
/// (u,v,w), chi(u,v) >= chi(v,w).
///
/// Let c be the smallest color and w the largest jump. If c is absent from
/// the graph on vertices before w, recurse there with w dropped. Otherwise c
/// reaches the pair (w-2,w-1), either directly, through the chord
/// (w-3,w-1), or by walking right along consecutive pairs, and then
/// {w-1, w, w+1} is monochromatic in c.
inline std::array<int, 3> gh_triangle_finder(const JumpSpec& J, const GraphColoring& chi)
{
    const int n = static_cast<int>(J.size());
    if (n < 1)
        throw InputError("triangle finder needs at least one jump");
    const auto graph = associated_graph(J);
    if (!(graph == chi.graph()))
        throw InputError("coloring is not defined on the associated graph of this jump set");
    for (const auto& p : graph.pairs)
    {
        const int col = chi(p.u, p.v);
        if (col < 1 || col > n)
            throw InputError("pair " + to_string(p) + " has color " + std::to_string(col) + " outside 1.." + std::to_string(n));
    }
    for (const auto& e : required_edges(J).edges())
        if (chi(e.a, e.b) < chi(e.b, e.c))
            throw InputError("required edge " + to_string(e) + " increases in color");

    std::vector<int> jumps = J.positions();
    int top = J.host_size(); // current prefix is vertices 1..top
    std::optional<std::array<int, 3>> found;
    while (!found)
    {
        if (jumps.empty())
            throw CertificationError("triangle finder ran out of jumps");
        const int w = jumps.back();
        if (jumps.size() == 1)
        {
            found = std::array<int, 3>{w - 1, w, w + 1};
            break;
        }
        int c = n + 1;
        for (const auto& p : graph.pairs)
            if (p.v <= top)
                c = std::min(c, chi(p.u, p.v));

        std::optional<Pair> early; // least pair of color c left of w
        for (const auto& p : graph.pairs)
            if (p.v <= w - 1 && chi(p.u, p.v) == c)
            {
                early = p;
                break;
            }
        if (!early)
        {
            jumps.pop_back();
            top = w - 1;
            continue;
        }
        const bool via_chord = std::binary_search(jumps.begin(), jumps.end(), w - 2) && chi(w - 3, w - 1) == c;
        if (chi(w - 2, w - 1) != c && !via_chord)
        {
            // c propagates along consecutive pairs up to (w-2, w-1)
            for (int z = early->v; z < w - 1; ++z)
                if (chi(z, z + 1) != c)
                    throw CertificationError("color " + std::to_string(c) + " failed to propagate to pair " +
                                             to_string(Pair{z, z + 1}));
        }
        found = std::array<int, 3>{w - 1, w, w + 1};
    }

    const auto [x, y, z] = *found;
    if (!graph.contains(x, y) || !graph.contains(y, z) || !graph.contains(x, z))
        throw CertificationError("triangle " + to_string(Triple{x, y, z}) + " is not in the associated graph");
    if (chi(x, y) != chi(y, z) || chi(x, y) != chi(x, z))
        throw CertificationError("triangle " + to_string(Triple{x, y, z}) + " is not monochromatic");
    return *found;
}

} // namespace ramsey
