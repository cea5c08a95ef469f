#pragma once

// Detectors over red/blue triple colorings.
//
// All searches are generic over a predicate `blue(a, b, c)` so the search
// engine can run them on partial colorings; the TripleColoring overloads
// are thin wrappers. Every search returns the lexicographically least
// witness in the order described at each function.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "core.hpp"
#include "family.hpp"

namespace ramsey
{

/// alpha(u,v) = 1 + edges of the longest monotone path in the target color
/// whose last two vertices are u < v.
class AlphaTable
{
public:
    explicit AlphaTable(int N = 0) : N_(N), values_(static_cast<std::size_t>(N + 1) * static_cast<std::size_t>(N + 1), 0) {}

    int vertex_count() const noexcept { return N_; }
    int operator()(int u, int v) const noexcept { return values_[index(u, v)]; }
    int& at(int u, int v) noexcept { return values_[index(u, v)]; }

    /// Largest entry; 0 when there are no pairs.
    int max() const noexcept
    {
        int best = 0;
        for (int u = 1; u <= N_; ++u)
            for (int v = u + 1; v <= N_; ++v)
                best = std::max(best, (*this)(u, v));
        return best;
    }

    bool operator==(const AlphaTable&) const = default;

private:
    std::size_t index(int u, int v) const noexcept
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(N_ + 1) + static_cast<std::size_t>(v);
    }

    int N_;
    std::vector<int> values_;
};

template <class InTarget>
AlphaTable alpha_table(int N, InTarget&& in_target)
{
    AlphaTable alpha(N);
    for (int u = 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v)
        {
            int best = 0;
            for (int t = 1; t < u; ++t)
                if (in_target(t, u, v))
                    best = std::max(best, alpha(t, u));
            alpha.at(u, v) = best + 1;
        }
    return alpha;
}

inline AlphaTable alpha_table(const TripleColoring& c, Color target = Color::Red)
{
    return alpha_table(c.vertex_count(), [&](int a, int b, int d) { return c.color(a, b, d) == target; });
}

struct RedPath
{
    int max_alpha = 0;
    std::vector<int> vertices;
};

/// Longest red monotone path; the witness is the lexicographically least
/// vertex sequence of that length.
inline RedPath longest_red_path(const TripleColoring& c)
{
    const int N = c.vertex_count();
    if (N < 2)
        return {};
    const int best = alpha_table(c, Color::Red).max();
    const int length = best + 1;

    // forward[u][v]: edges of the longest red path starting with (u, v)
    std::vector<int> forward(static_cast<std::size_t>(N + 1) * static_cast<std::size_t>(N + 1), 0);
    auto fw = [&](int u, int v) -> int& { return forward[static_cast<std::size_t>(u) * static_cast<std::size_t>(N + 1) + static_cast<std::size_t>(v)]; };
    for (int u = N; u >= 1; --u)
        for (int v = N; v > u; --v)
        {
            int f = 0;
            for (int w = v + 1; w <= N; ++w)
                if (c.is_red(u, v, w))
                    f = std::max(f, fw(v, w) + 1);
            fw(u, v) = f;
        }

    RedPath out{best, {}};
    for (int u = 1; u <= N && out.vertices.empty(); ++u)
        for (int v = u + 1; v <= N; ++v)
            if (fw(u, v) >= length - 2)
            {
                out.vertices = {u, v};
                break;
            }
    while (static_cast<int>(out.vertices.size()) < length)
    {
        const int u = out.vertices[out.vertices.size() - 2];
        const int v = out.vertices.back();
        const int remaining = length - static_cast<int>(out.vertices.size());
        for (int w = v + 1; w <= N; ++w)
            if (c.is_red(u, v, w) && fw(v, w) >= remaining - 1)
            {
                out.vertices.push_back(w);
                break;
            }
    }
    return out;
}

namespace detail
{

struct VectorHash
{
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        std::size_t h = v.size();
        for (int x : v)
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

template <class Blue>
class EmbeddingSearch
{
public:
    EmbeddingSearch(int N, const OrderedTripleSystem& pattern, Blue& blue)
        : N_(N), m_(pattern.vertex_count()), tail_(std::max(pattern.width(), 1)), blue_(blue),
          ending_at_(static_cast<std::size_t>(m_ + 1))
    {
        for (const auto& e : pattern.edges())
            ending_at_[static_cast<std::size_t>(e.c)].push_back(e);
    }

    std::optional<Embedding> run()
    {
        if (m_ > N_)
            return std::nullopt;
        image_.assign(1, 0); // position 0 is a sentinel host vertex 0
        if (!place(1))
            return std::nullopt;
        return Embedding{std::vector<int>(image_.begin() + 1, image_.end())};
    }

private:
    bool place(int p)
    {
        if (p > m_)
            return true;
        auto key = memo_key(p);
        if (dead_.count(key))
            return false;
        const int lo = image_.back() + 1;
        const int hi = N_ - (m_ - p);
        for (int x = lo; x <= hi; ++x)
        {
            bool ok = true;
            for (const auto& e : ending_at_[static_cast<std::size_t>(p)])
                if (!blue_(image_[static_cast<std::size_t>(e.a)], image_[static_cast<std::size_t>(e.b)], x))
                {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            image_.push_back(x);
            if (place(p + 1))
                return true;
            image_.pop_back();
        }
        dead_.insert(std::move(key));
        return false;
    }

    // Only the last `tail_` images can constrain positions >= p.
    std::vector<int> memo_key(int p) const
    {
        std::vector<int> key{p};
        const int from = std::max(1, p - tail_);
        for (int q = from; q < p; ++q)
            key.push_back(image_[static_cast<std::size_t>(q)]);
        return key;
    }

    int N_;
    int m_;
    int tail_;
    Blue& blue_;
    std::vector<std::vector<Triple>> ending_at_;
    std::vector<int> image_;
    std::unordered_set<std::vector<int>, VectorHash> dead_;
};

} // namespace detail

/// Least order-preserving map sending every pattern edge to a triple
/// accepted by `blue`. Images are chosen position by position, smallest
/// host vertex first; failed (position, recent images) states are cached,
/// so for a pattern of width w the work is polynomial in N.
template <class Blue>
std::optional<Embedding> find_embedding(int N, const OrderedTripleSystem& pattern, Blue&& blue)
{
    detail::EmbeddingSearch<std::remove_reference_t<Blue>> search(N, pattern, blue);
    return search.run();
}

inline std::optional<Embedding> find_blue_embedding(const TripleColoring& c, const OrderedTripleSystem& pattern)
{
    return find_embedding(c.vertex_count(), pattern, [&](int a, int b, int d) { return c.is_blue(a, b, d); });
}

/// A host copy of some member of the jump family: host vertices for pattern
/// positions 1..m and the jump set on those positions.
struct JumpWitness
{
    std::vector<int> vertices;
    JumpSpec jumps;

    bool operator==(const JumpWitness&) const = default;
};

namespace detail
{

// Left-to-right search over pattern positions. After placing position q the
// state is the images of positions q-3..q, whether q-2, q-1, q are jumps,
// and the number of jumps so far: every required edge spans at most five
// consecutive positions, so nothing older can matter.
template <class Blue>
class JumpSearch
{
public:
    JumpSearch(int N, int n, Blue& blue) : N_(N), n_(n), blue_(blue) {}

    std::optional<JumpWitness> run()
    {
        if (N_ < 2 * n_ + 1)
            return std::nullopt;
        for (int x = 1; x <= N_; ++x)
        {
            images_.assign(1, x);
            flags_.assign(1, false);
            if (extend(0))
            {
                std::vector<int> jumps;
                for (std::size_t i = 0; i < flags_.size(); ++i)
                    if (flags_[i])
                        jumps.push_back(static_cast<int>(i) + 1);
                const int m = static_cast<int>(images_.size());
                return JumpWitness{images_, JumpSpec(m, std::move(jumps))};
            }
        }
        return std::nullopt;
    }

private:
    std::size_t q() const noexcept { return images_.size(); }
    int image(std::size_t pos) const noexcept { return images_[pos - 1]; }
    bool jump(std::size_t pos) const noexcept { return flags_[pos - 1]; }

    // Positions 1..q are placed; `count` of them are jumps.
    bool extend(int count)
    {
        const std::size_t p = q();
        if (count == n_ && !jump(p))
            return true;
        const std::uint64_t key = memo_key(count);
        if (dead_.count(key))
            return false;

        const std::size_t next = p + 1;
        for (int x = image(p) + 1; x <= N_; ++x)
        {
            if (!edges_ok(next, x))
                continue;
            for (bool as_jump : {false, true})
            {
                if (as_jump && (jump(p) || count == n_))
                    continue;
                const int after = count + (as_jump ? 1 : 0);
                // room for the remaining jumps: each needs its own position
                // plus a successor, and a jump cannot be last
                const int needed = 2 * (n_ - after) + (as_jump ? 1 : 0);
                if (x + needed > N_)
                    continue;
                images_.push_back(x);
                flags_.push_back(as_jump);
                if (extend(after))
                    return true;
                images_.pop_back();
                flags_.pop_back();
            }
        }
        dead_.insert(key);
        return false;
    }

    // Required edges whose last position is `next`, with x as its image.
    bool edges_ok(std::size_t next, int x) const
    {
        if (next >= 3 && !blue_(image(next - 2), image(next - 1), x))
            return false;
        if (next >= 4 && jump(next - 1) && !blue_(image(next - 3), image(next - 2), x))
            return false;
        if (next >= 4 && jump(next - 2) && !blue_(image(next - 3), image(next - 1), x))
            return false;
        if (next >= 5 && jump(next - 3) && jump(next - 1) && !blue_(image(next - 4), image(next - 2), x))
            return false;
        return true;
    }

    std::uint64_t memo_key(int count) const
    {
        const std::size_t p = q();
        std::uint64_t key = std::min<std::uint64_t>(p, 5);
        for (std::size_t back = 0; back < 4; ++back)
            key = (key << 8) | (back < p ? static_cast<std::uint64_t>(image(p - back)) : 0);
        for (std::size_t back = 0; back < 3; ++back)
            key = (key << 1) | (back < p && jump(p - back) ? 1U : 0U);
        key = (key << 8) | static_cast<std::uint64_t>(count);
        return key;
    }

    int N_;
    int n_;
    Blue& blue_;
    std::vector<int> images_;
    std::vector<bool> flags_;
    std::unordered_set<std::uint64_t> dead_;
};

} // namespace detail

/// Least host copy of a member of the jump family with n jumps whose
/// required edges are all accepted by `blue`. Candidates are ordered by
/// their sequence of (host vertex, is-jump) pairs, non-jump first, and a
/// completed witness precedes its extensions. Any member size m is allowed.
template <class Blue>
std::optional<JumpWitness> find_jump_member(int N, int n, Blue&& blue)
{
    if (n < 1)
        throw InputError("jump count must be at least 1");
    if (N > 255)
        throw InputError("jump detection supports at most 255 host vertices");
    detail::JumpSearch<std::remove_reference_t<Blue>> search(N, n, blue);
    return search.run();
}

inline std::optional<JumpWitness> find_blue_jump_member(const TripleColoring& c, int n)
{
    return find_jump_member(c.vertex_count(), n, [&](int a, int b, int d) { return c.is_blue(a, b, d); });
}

} // namespace ramsey
