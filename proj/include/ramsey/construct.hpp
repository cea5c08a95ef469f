#pragma once

// Pair colorings without monochromatic cliques, and the lift that turns a
// pair coloring into a red/blue coloring of triples.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "core.hpp"

namespace ramsey
{

/// Triple (u,v,w) is Red iff chi(u,v) < chi(v,w).
inline TripleColoring lift(const PairColoring& chi)
{
    return TripleColoring::from_function(chi.vertex_count(), [&](int u, int v, int w) {
        return chi(u, v) < chi(v, w) ? Color::Red : Color::Blue;
    });
}

/// The 5-cycle (color 1) and its complement (color 2).
inline PairColoring pentagon_coloring()
{
    return PairColoring::from_function(5, 2, [](int u, int v) {
        const int d = v - u;
        return (d == 1 || d == 4) ? 1 : 2;
    });
}

namespace gf16
{

// x^4 + x + 1
inline constexpr unsigned modulus = 0b10011;

/// exp[i] = x^i for i in 0..14, log[e] inverse for e != 0.
struct Tables
{
    std::array<unsigned, 15> exp{};
    std::array<int, 16> log{};
};

inline constexpr Tables tables = [] {
    Tables t;
    unsigned e = 1;
    t.log[0] = -1;
    for (int i = 0; i < 15; ++i)
    {
        t.exp[static_cast<std::size_t>(i)] = e;
        t.log[e] = i;
        e <<= 1;
        if (e & 0b10000)
            e ^= modulus;
    }
    return t;
}();

} // namespace gf16

/// Greenwood–Gleason coloring of K_16. Vertex v is the field element whose
/// bit pattern is v-1; the pair {u,v} gets 1 + (log_x(u+v) mod 3).
inline PairColoring gf16_coloring()
{
    return PairColoring::from_function(16, 3, [](int u, int v) {
        const auto sum = static_cast<unsigned>(u - 1) ^ static_cast<unsigned>(v - 1);
        return gf16::tables.log[sum] % 3 + 1;
    });
}

/// True if no a + b = c inside the set (a = b allowed).
inline bool is_sum_free(const std::vector<int>& set)
{
    for (int a : set)
        for (int b : set)
            if (std::find(set.begin(), set.end(), a + b) != set.end())
                return false;
    return true;
}

/// chi(u,v) = index (1-based) of the class holding v - u. The classes must
/// partition 1..N-1; N is one more than the number of elements.
inline PairColoring schur_coloring(const std::vector<std::vector<int>>& partition)
{
    if (partition.empty() || partition.size() > 255)
        throw InputError("partition needs between 1 and 255 classes");
    std::size_t total = 0;
    for (const auto& cls : partition)
        total += cls.size();
    const int N = static_cast<int>(total) + 1;
    std::vector<int> class_of(static_cast<std::size_t>(N), 0);
    for (std::size_t i = 0; i < partition.size(); ++i)
        for (int d : partition[i])
        {
            if (d < 1 || d >= N)
                throw InputError("partition element " + std::to_string(d) + " leaves a gap in 1.." + std::to_string(N - 1));
            if (class_of[static_cast<std::size_t>(d)] != 0)
                throw InputError("partition element " + std::to_string(d) + " appears twice");
            class_of[static_cast<std::size_t>(d)] = static_cast<int>(i) + 1;
        }
    return PairColoring::from_function(N, static_cast<int>(partition.size()),
                                       [&](int u, int v) { return class_of[static_cast<std::size_t>(v - u)]; });
}

/// Vertices are pairs (a,b) in lexicographic order. Pairs differing in the
/// first coordinate use chi1; the rest use k1 + chi2.
inline PairColoring product_coloring(const PairColoring& chi1, const PairColoring& chi2)
{
    const int n1 = chi1.vertex_count();
    const int n2 = chi2.vertex_count();
    const int k1 = chi1.palette();
    if (k1 + chi2.palette() > 255)
        throw InputError("product palette exceeds 255 colors");
    return PairColoring::from_function(n1 * n2, k1 + chi2.palette(), [&](int x, int y) {
        const int a = (x - 1) / n2 + 1, b = (x - 1) % n2 + 1;
        const int a2 = (y - 1) / n2 + 1, b2 = (y - 1) % n2 + 1;
        return a != a2 ? chi1(a, a2) : k1 + chi2(b, b2);
    });
}

inline bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

/// Paley coloring: color 1 when v - u is a nonzero square mod q, else 2.
inline PairColoring paley_coloring(int q)
{
    if (!is_prime(q) || q % 4 != 1)
        throw InputError("paley coloring needs a prime q = 1 mod 4, got " + std::to_string(q));
    std::vector<bool> square(static_cast<std::size_t>(q), false);
    for (int x = 1; x < q; ++x)
        square[static_cast<std::size_t>(x * x % q)] = true;
    return PairColoring::from_function(q, 2, [&](int u, int v) { return square[static_cast<std::size_t>(v - u)] ? 1 : 2; });
}

namespace detail
{

// Extends `chosen` (already monochromatic in `color`) to m vertices using
// only vertices after chosen.back(), in lexicographic order.
inline bool extend_clique(const PairColoring& chi, int m, int color, std::vector<int>& chosen)
{
    if (static_cast<int>(chosen.size()) == m)
        return true;
    const int N = chi.vertex_count();
    const int need = m - static_cast<int>(chosen.size());
    for (int x = chosen.back() + 1; x + need - 1 <= N; ++x)
    {
        bool ok = true;
        for (int y : chosen)
            if (chi(y, x) != color)
            {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        chosen.push_back(x);
        if (extend_clique(chi, m, color, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

inline std::optional<std::vector<int>> mono_clique_from(const PairColoring& chi, int m, int first)
{
    const int N = chi.vertex_count();
    for (int second = first + 1; second + m - 2 <= N; ++second)
    {
        std::vector<int> chosen{first, second};
        if (extend_clique(chi, m, chi(first, second), chosen))
            return chosen;
    }
    return std::nullopt;
}

} // namespace detail

/// Lexicographically least monochromatic m-clique, or nullopt. With more
/// than one worker the first vertices are scanned concurrently; the result
/// does not depend on the worker count.
inline std::optional<std::vector<int>> has_mono_clique(const PairColoring& chi, int m, int workers = 1)
{
    if (m < 2)
        throw InputError("clique size must be at least 2");
    const int N = chi.vertex_count();
    if (m > N)
        return std::nullopt;
    const int firsts = N - m + 1;
    std::vector<std::optional<std::vector<int>>> found(static_cast<std::size_t>(firsts));

    if (workers <= 1)
    {
        for (int v = 1; v <= firsts; ++v)
            if (auto c = detail::mono_clique_from(chi, m, v))
                return c;
        return std::nullopt;
    }

    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int v = 1 + w; v <= firsts; v += workers)
                    found[static_cast<std::size_t>(v - 1)] = detail::mono_clique_from(chi, m, v);
            });
    }
    for (auto& f : found)
        if (f)
            return f;
    return std::nullopt;
}

/// Small multicolor Ramsey values r(m;n) used as named constants.
class KnownValueRegistry
{
public:
    struct Entry
    {
        int value = 0;
        bool upper_side_verified = false;
        std::string provenance;
        std::optional<PairColoring> witness;
    };

    KnownValueRegistry()
    {
        entries_[{3, 1}] = {3, true, "trivial; exhaustively re-verified in tests",
                            PairColoring::from_function(2, 1, [](int, int) { return 1; })};
        entries_[{3, 2}] = {6, true, "classical; exhaustively re-verified in tests", pentagon_coloring()};
        entries_[{3, 3}] = {17, false, "Greenwood-Gleason 1955; witness side verified", gf16_coloring()};
        entries_[{4, 2}] = {18, false, "Greenwood-Gleason 1955; witness side verified", paley_coloring(17)};
    }

    const Entry* find(int clique, int colors) const
    {
        auto it = entries_.find({clique, colors});
        return it == entries_.end() ? nullptr : &it->second;
    }

    const std::map<std::pair<int, int>, Entry>& entries() const noexcept { return entries_; }

private:
    std::map<std::pair<int, int>, Entry> entries_;
};

} // namespace ramsey
