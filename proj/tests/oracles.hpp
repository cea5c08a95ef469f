#pragma once

// Brute-force oracles and random generators for the test suites. Nothing in
// here calls the DP or search code it is used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <ramsey/core.hpp>

namespace oracle
{

using ramsey::Color;
using ramsey::PairColoring;
using ramsey::Triple;
using ramsey::TripleColoring;

inline std::vector<Triple> lex_triples(int N)
{
    std::vector<Triple> out;
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b)
            for (int c = b + 1; c <= N; ++c)
                out.push_back({a, b, c});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> subset_members(std::uint32_t mask, int offset = 1)
{
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask & (1U << i))
            out.push_back(i + offset);
    return out;
}

/// Longest red path ending at (u,v) by trying every subset of [u-1] as the
/// earlier vertices; returns 1 + edge count.
inline int alpha(const TripleColoring& c, int u, int v)
{
    int best = 1;
    for (std::uint32_t mask = 0; mask < (1U << (u - 1)); ++mask)
    {
        auto seq = subset_members(mask);
        seq.push_back(u);
        seq.push_back(v);
        bool red = true;
        for (std::size_t i = 0; i + 2 < seq.size() && red; ++i)
            red = c.is_red(seq[i], seq[i + 1], seq[i + 2]);
        if (red)
            best = std::max(best, static_cast<int>(seq.size()) - 1);
    }
    return best;
}

inline std::vector<std::vector<int>> alpha_matrix(const TripleColoring& c)
{
    const int N = c.vertex_count();
    std::vector<std::vector<int>> a(static_cast<std::size_t>(N + 1), std::vector<int>(static_cast<std::size_t>(N + 1), 0));
    for (int u = 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v)
            a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = alpha(c, u, v);
    return a;
}

/// Checks the chain rule on an explicit sequence v_1 < ... < v_{2l-1}.
inline bool is_beta_chain(const std::vector<std::vector<int>>& a, const std::vector<int>& seq)
{
    auto A = [&](int x, int y) { return a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
    if (seq.size() < 3 || seq.size() % 2 == 0)
        return false;
    int previous = 0;
    for (std::size_t i = 0; i + 2 < seq.size(); i += 2)
    {
        const int x = seq[i], y = seq[i + 1], z = seq[i + 2];
        if (!(A(x, y) == A(y, z) && A(y, z) == A(x, z)))
            return false;
        if (i > 0 && previous < A(x, y))
            return false;
        previous = A(x, y);
    }
    return true;
}

/// beta(u,v) by trying every subset of [u-1] as the chain prefix.
inline int beta(const std::vector<std::vector<int>>& a, int u, int v)
{
    int best = 1;
    for (std::uint32_t mask = 0; mask < (1U << (u - 1)); ++mask)
    {
        auto seq = subset_members(mask);
        if (seq.size() % 2 == 0)
            continue;
        seq.push_back(u);
        seq.push_back(v);
        if (is_beta_chain(a, seq))
            best = std::max(best, static_cast<int>(seq.size() + 1) / 2);
    }
    return best;
}

/// Required edges written straight from the membership conditions, for an
/// arbitrary jump set on positions 1..m.
inline std::set<Triple> required(int m, const std::vector<int>& jumps)
{
    std::set<Triple> out;
    auto J = [&](int p) { return std::find(jumps.begin(), jumps.end(), p) != jumps.end(); };
    auto ok = [&](int p) { return p >= 1 && p <= m; };
    for (int i = 1; i + 2 <= m; ++i)
        out.insert({i, i + 1, i + 2});
    for (int v = 1; v <= m; ++v)
    {
        if (J(v) && ok(v - 2))
            out.insert({v - 2, v - 1, v + 1});
        if (J(v) && ok(v + 2))
            out.insert({v - 1, v + 1, v + 2});
        if (J(v - 1) && J(v + 1) && ok(v - 2) && ok(v + 2))
            out.insert({v - 2, v, v + 2});
    }
    return out;
}

struct JumpCandidate
{
    std::vector<int> vertices;
    std::vector<int> jumps;
};

/// Least blue member by enumerating every host subset and every jump set.
/// The order compares (vertex, is-jump) pairs position by position with a
/// prefix first.
inline std::optional<JumpCandidate> jump_member(const TripleColoring& c, int n)
{
    const int N = c.vertex_count();
    std::optional<std::vector<std::pair<int, int>>> best_key;
    std::optional<JumpCandidate> best;
    for (std::uint32_t mask = 1; mask < (1U << N); ++mask)
    {
        const auto host = subset_members(mask);
        const int m = static_cast<int>(host.size());
        if (m < 2 * n + 1)
            continue;
        // jump sets: subsets of 2..m-1, size n, no two consecutive
        for (std::uint32_t jm = 0; jm < (1U << m); ++jm)
        {
            if (__builtin_popcount(jm) != n)
                continue;
            const auto J = subset_members(jm);
            bool valid = true;
            for (std::size_t i = 0; i < J.size() && valid; ++i)
                valid = J[i] != 1 && J[i] != m && (i == 0 || J[i - 1] + 1 != J[i]);
            if (!valid)
                continue;
            bool blue = true;
            for (const auto& e : required(m, J))
                if (!c.is_blue(host[static_cast<std::size_t>(e.a - 1)], host[static_cast<std::size_t>(e.b - 1)],
                               host[static_cast<std::size_t>(e.c - 1)]))
                {
                    blue = false;
                    break;
                }
            if (!blue)
                continue;
            std::vector<std::pair<int, int>> key;
            for (int p = 1; p <= m; ++p)
                key.push_back({host[static_cast<std::size_t>(p - 1)],
                               std::find(J.begin(), J.end(), p) != J.end() ? 1 : 0});
            if (!best_key || key < *best_key)
            {
                best_key = key;
                best = JumpCandidate{host, J};
            }
        }
    }
    return best;
}

/// Plain backtracking embedding search in lexicographic order, no caching.
template <class Blue>
bool embed_from(int N, int m, const std::vector<Triple>& edges, Blue&& blue, std::vector<int>& img)
{
    const int p = static_cast<int>(img.size()) + 1;
    if (p > m)
        return true;
    for (int x = img.empty() ? 1 : img.back() + 1; x <= N; ++x)
    {
        img.push_back(x);
        bool ok = true;
        for (const auto& e : edges)
            if (e.c == p && !blue(img[static_cast<std::size_t>(e.a - 1)], img[static_cast<std::size_t>(e.b - 1)], x))
            {
                ok = false;
                break;
            }
        if (ok && embed_from(N, m, edges, blue, img))
            return true;
        img.pop_back();
    }
    return false;
}

inline std::optional<std::vector<int>> blue_embedding(const TripleColoring& c, int m, const std::vector<Triple>& edges)
{
    std::vector<int> img;
    if (embed_from(c.vertex_count(), m, edges, [&](int a, int b, int d) { return c.is_blue(a, b, d); }, img))
        return img;
    return std::nullopt;
}

inline bool has_mono_triangle(const PairColoring& chi)
{
    const int N = chi.vertex_count();
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b)
            for (int c = b + 1; c <= N; ++c)
                if (chi(a, b) == chi(b, c) && chi(a, b) == chi(a, c))
                    return true;
    return false;
}

inline TripleColoring random_triples(int N, std::mt19937_64& rng, double p_red = 0.5)
{
    std::bernoulli_distribution red(p_red);
    return TripleColoring::from_function(N, [&](int, int, int) { return red(rng) ? Color::Red : Color::Blue; });
}

inline TripleColoring triples_from_mask(int N, std::uint64_t mask)
{
    std::uint64_t r = 0;
    return TripleColoring::from_function(N, [&](int, int, int) { return (mask >> r++) & 1U ? Color::Red : Color::Blue; });
}

inline PairColoring random_pairs(int N, int k, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> color(1, k);
    return PairColoring::from_function(N, k, [&](int, int) { return color(rng); });
}

/// Random k-coloring of K_N with one monochromatic triangle forced in.
inline PairColoring planted_triangle_pairs(int N, int k, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> color(1, k);
    std::vector<int> pick(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pick.begin(), pick.end(), rng);
    std::sort(pick.begin(), pick.begin() + 3);
    const int planted = color(rng);
    auto in_tri = [&](int x) { return x == pick[0] || x == pick[1] || x == pick[2]; };
    return PairColoring::from_function(N, k, [&](int u, int v) { return in_tri(u) && in_tri(v) ? planted : color(rng); });
}

inline std::uint64_t binomial(int n, int k)
{
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// Downward-closed subsets of [n]x[n] by testing every subset (n <= 4).
inline std::uint64_t downsets_by_subsets(int n)
{
    const int cells = n * n;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask)
    {
        auto in = [&](int a, int b) { return (mask >> ((a - 1) * n + (b - 1))) & 1U; };
        bool closed = true;
        for (int a = 1; a <= n && closed; ++a)
            for (int b = 1; b <= n && closed; ++b)
                if (in(a, b) && ((a > 1 && !in(a - 1, b)) || (b > 1 && !in(a, b - 1))))
                    closed = false;
        count += closed ? 1 : 0;
    }
    return count;
}

} // namespace oracle
