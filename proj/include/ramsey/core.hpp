#pragma once

// Value types shared by every module: triples, ordered triple systems,
// pair colorings of K_N and red/blue colorings of the complete ordered
// 3-uniform hypergraph K^(3)_N. Vertices are 1-based; ranks are 0-based.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey
{

/// Raised on malformed arguments (out-of-range vertices, bad parameters).
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers; carries the 1-based offending line.
class FormatError : public std::runtime_error
{
public:
    FormatError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when a certificate fails re-verification. Always a bug, never data.
class CertificationError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

struct Triple
{
    int a = 0;
    int b = 0;
    int c = 0;

    auto operator<=>(const Triple&) const = default;
};

struct Pair
{
    int u = 0;
    int v = 0;

    auto operator<=>(const Pair&) const = default;
};

inline std::string to_string(const Triple& t)
{
    return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

inline std::string to_string(const Pair& p)
{
    return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
}

constexpr std::uint64_t choose(std::uint64_t n, std::uint64_t k) noexcept
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

constexpr std::uint64_t triple_count(int N) noexcept { return N < 3 ? 0 : choose(static_cast<std::uint64_t>(N), 3); }
constexpr std::uint64_t pair_count(int N) noexcept { return N < 2 ? 0 : choose(static_cast<std::uint64_t>(N), 2); }

/// Position of (a,b,c) among all increasing triples of [N] in lexicographic order.
inline std::uint64_t lex_rank(Triple t, int N)
{
    if (!(1 <= t.a && t.a < t.b && t.b < t.c && t.c <= N))
        throw InputError("triple " + to_string(t) + " is not an increasing triple of [" + std::to_string(N) + "]");
    const auto n = static_cast<std::uint64_t>(N);
    const auto a = static_cast<std::uint64_t>(t.a);
    const auto b = static_cast<std::uint64_t>(t.b);
    // triples starting before a, then those (a, j, *) with j < b, then the offset of c
    return (choose(n, 3) - choose(n - a + 1, 3)) + (choose(n - a, 2) - choose(n - b + 1, 2)) +
           static_cast<std::uint64_t>(t.c - t.b - 1);
}

inline Triple lex_unrank(std::uint64_t rank, int N)
{
    if (rank >= triple_count(N))
        throw InputError("rank " + std::to_string(rank) + " out of range for N=" + std::to_string(N));
    const auto n = static_cast<std::uint64_t>(N);
    Triple t;
    std::uint64_t r = rank;
    for (t.a = 1;; ++t.a)
    {
        const std::uint64_t block = choose(n - static_cast<std::uint64_t>(t.a), 2);
        if (r < block)
            break;
        r -= block;
    }
    for (t.b = t.a + 1;; ++t.b)
    {
        const std::uint64_t block = n - static_cast<std::uint64_t>(t.b);
        if (r < block)
            break;
        r -= block;
    }
    t.c = t.b + 1 + static_cast<int>(r);
    return t;
}

/// An ordered 3-uniform hypergraph on vertices 1..m. Edges are kept sorted.
class OrderedTripleSystem
{
public:
    OrderedTripleSystem() = default;

    /// Rejects out-of-range, non-increasing and duplicate edges.
    OrderedTripleSystem(int m, std::vector<Triple> edges) : m_(m), edges_(std::move(edges))
    {
        if (m < 0)
            throw InputError("vertex count must be non-negative");
        for (const auto& e : edges_)
            if (!(1 <= e.a && e.a < e.b && e.b < e.c && e.c <= m))
                throw InputError("edge " + to_string(e) + " is not an increasing triple of [" + std::to_string(m) + "]");
        std::sort(edges_.begin(), edges_.end());
        const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw InputError("duplicate edge " + to_string(*dup));
    }

    /// Like the constructor but merges duplicate edges.
    static OrderedTripleSystem from_union(int m, std::vector<Triple> edges)
    {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return OrderedTripleSystem(m, std::move(edges));
    }

    int vertex_count() const noexcept { return m_; }
    const std::vector<Triple>& edges() const& noexcept { return edges_; }
    // keeps `for (e : make_system().edges())` safe
    std::vector<Triple> edges() && noexcept { return std::move(edges_); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool contains(const Triple& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    /// True if every edge of `other` is an edge here.
    bool contains_all(const OrderedTripleSystem& other) const
    {
        return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
    }

    /// Largest c - a over the edges; 0 for an edgeless system.
    int width() const noexcept
    {
        int w = 0;
        for (const auto& e : edges_)
            w = std::max(w, e.c - e.a);
        return w;
    }

    bool operator==(const OrderedTripleSystem&) const = default;

private:
    int m_ = 0;
    std::vector<Triple> edges_;
};

/// A total coloring of the pairs of [N] with colors 1..k.
class PairColoring
{
public:
    PairColoring() = default;

    /// `colors` lists one color per pair in lexicographic pair order.
    PairColoring(int N, int k, const std::vector<int>& colors) : N_(N), k_(k), matrix_(static_cast<std::size_t>(N) * N, 0)
    {
        if (N < 0 || k < 1 || k > 255)
            throw InputError("pair coloring needs N >= 0 and 1 <= k <= 255");
        if (colors.size() != pair_count(N))
            throw InputError("pair coloring on " + std::to_string(N) + " vertices needs " + std::to_string(pair_count(N)) +
                             " colors, got " + std::to_string(colors.size()));
        std::size_t i = 0;
        for (int u = 1; u <= N; ++u)
            for (int v = u + 1; v <= N; ++v)
                set(u, v, colors[i++]);
    }

    template <class F>
    static PairColoring from_function(int N, int k, F&& color_of)
    {
        std::vector<int> colors;
        colors.reserve(pair_count(N));
        for (int u = 1; u <= N; ++u)
            for (int v = u + 1; v <= N; ++v)
                colors.push_back(color_of(u, v));
        return PairColoring(N, k, colors);
    }

    int vertex_count() const noexcept { return N_; }
    int palette() const noexcept { return k_; }

    /// Color of the pair {u, v}; argument order does not matter.
    int operator()(int u, int v) const noexcept { return matrix_[index(u, v)]; }

    std::vector<int> lex_colors() const
    {
        std::vector<int> out;
        out.reserve(pair_count(N_));
        for (int u = 1; u <= N_; ++u)
            for (int v = u + 1; v <= N_; ++v)
                out.push_back((*this)(u, v));
        return out;
    }

    bool operator==(const PairColoring&) const = default;

private:
    std::size_t index(int u, int v) const noexcept
    {
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(N_) + static_cast<std::size_t>(v - 1);
    }

    void set(int u, int v, int c)
    {
        if (c < 1 || c > k_)
            throw InputError("color " + std::to_string(c) + " of pair " + to_string(Pair{u, v}) + " outside 1.." +
                             std::to_string(k_));
        matrix_[index(u, v)] = static_cast<std::uint8_t>(c);
        matrix_[index(v, u)] = static_cast<std::uint8_t>(c);
    }

    int N_ = 0;
    int k_ = 1;
    std::vector<std::uint8_t> matrix_;
};

enum class Color : std::uint8_t
{
    Blue = 0,
    Red = 1,
};

constexpr Color opposite(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }

inline const char* to_string(Color c) noexcept { return c == Color::Red ? "red" : "blue"; }

/// Red/blue coloring of every increasing triple of [N], one bit per triple
/// at its lexicographic rank (1 = Red).
class TripleColoring
{
public:
    TripleColoring() : TripleColoring(0) {}

    /// All-blue coloring.
    explicit TripleColoring(int N) : N_(N)
    {
        if (N < 0)
            throw InputError("vertex count must be non-negative");
        words_.assign((triple_count(N) + 63) / 64, 0);
        build_offsets();
    }

    static TripleColoring from_bits(int N, const std::vector<bool>& bits)
    {
        TripleColoring out(N);
        if (bits.size() != out.size())
            throw InputError("triple coloring on " + std::to_string(N) + " vertices needs " + std::to_string(out.size()) +
                             " bits, got " + std::to_string(bits.size()));
        for (std::uint64_t r = 0; r < bits.size(); ++r)
            if (bits[r])
                out.words_[r / 64] |= std::uint64_t{1} << (r % 64);
        return out;
    }

    template <class F>
    static TripleColoring from_function(int N, F&& color_of)
    {
        TripleColoring out(N);
        std::uint64_t r = 0;
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                for (int c = b + 1; c <= N; ++c, ++r)
                    if (color_of(a, b, c) == Color::Red)
                        out.words_[r / 64] |= std::uint64_t{1} << (r % 64);
        return out;
    }

    int vertex_count() const noexcept { return N_; }
    std::uint64_t size() const noexcept { return triple_count(N_); }

    /// Rank of an increasing triple; no range checking.
    std::uint64_t rank(int a, int b, int c) const noexcept
    {
        return offsets_[static_cast<std::size_t>(a) * static_cast<std::size_t>(N_ + 1) + static_cast<std::size_t>(b)] +
               static_cast<std::uint64_t>(c - b - 1);
    }

    bool red_at(std::uint64_t r) const noexcept { return (words_[r / 64] >> (r % 64)) & 1U; }
    Color at_rank(std::uint64_t r) const noexcept { return red_at(r) ? Color::Red : Color::Blue; }

    bool is_red(int a, int b, int c) const noexcept { return red_at(rank(a, b, c)); }
    bool is_blue(int a, int b, int c) const noexcept { return !is_red(a, b, c); }
    Color color(int a, int b, int c) const noexcept { return at_rank(rank(a, b, c)); }
    Color color(const Triple& t) const noexcept { return color(t.a, t.b, t.c); }

    std::uint64_t red_count() const noexcept
    {
        std::uint64_t n = 0;
        for (auto w : words_)
            n += static_cast<std::uint64_t>(__builtin_popcountll(w));
        return n;
    }

    /// The coloring induced on the first `M` vertices.
    TripleColoring restrict_to(int M) const
    {
        if (M < 0 || M > N_)
            throw InputError("cannot restrict to " + std::to_string(M) + " vertices");
        return from_function(M, [&](int a, int b, int c) { return color(a, b, c); });
    }

    bool operator==(const TripleColoring& other) const { return N_ == other.N_ && words_ == other.words_; }

private:
    void build_offsets()
    {
        offsets_.assign(static_cast<std::size_t>(N_ + 1) * static_cast<std::size_t>(N_ + 1), 0);
        std::uint64_t r = 0;
        for (int a = 1; a <= N_; ++a)
            for (int b = a + 1; b <= N_; ++b)
            {
                offsets_[static_cast<std::size_t>(a) * static_cast<std::size_t>(N_ + 1) + static_cast<std::size_t>(b)] = r;
                r += static_cast<std::uint64_t>(N_ - b);
            }
    }

    int N_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> offsets_;
};

/// Order-preserving map from pattern positions 1..m to host vertices.
struct Embedding
{
    std::vector<int> vertices;

    static Embedding make(std::vector<int> vertices)
    {
        for (std::size_t i = 1; i < vertices.size(); ++i)
            if (vertices[i - 1] >= vertices[i])
                throw InputError("embedding must be strictly increasing");
        return Embedding{std::move(vertices)};
    }

    /// Host vertex of 1-based pattern position p.
    int operator()(int p) const { return vertices[static_cast<std::size_t>(p - 1)]; }
    std::size_t size() const noexcept { return vertices.size(); }

    bool operator==(const Embedding&) const = default;
};

} // namespace ramsey
