#pragma once

// Text formats.
//
//   pairs N k          one line "u v c" per pair, any order on input,
//                      lexicographic on output; every pair exactly once.
//   triples N          second line: C(N,3) characters over {0,1} in rank
//                      order, 1 = Red, 0 = Blue.
//   pattern m          one line "a b c" per edge, optional final line
//                      "jumps p1 p2 ...".
//   witness files      "key values..." lines; keys vertices (required),
//                      jumps and blocks (optional).
//
// Blank lines are ignored. Parsers throw FormatError naming the line.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace ramsey
{

struct PatternFile
{
    OrderedTripleSystem pattern;
    std::optional<std::vector<int>> jumps;

    bool operator==(const PatternFile&) const = default;
};

struct Witness
{
    std::vector<int> vertices;
    std::optional<std::vector<int>> jumps;
    std::optional<std::vector<int>> blocks;

    bool operator==(const Witness&) const = default;
};

namespace detail
{

struct Line
{
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text))
    {
        ++number;
        std::istringstream ss(text);
        Line line{number, {}};
        std::string tok;
        while (ss >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

inline long long to_int(const std::string& tok, std::size_t line)
{
    std::size_t used = 0;
    long long value = 0;
    try
    {
        value = std::stoll(tok, &used);
    }
    catch (const std::exception&)
    {
        throw FormatError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size())
        throw FormatError(line, "expected an integer, got '" + tok + "'");
    return value;
}

inline int to_int_in(const std::string& tok, std::size_t line, long long lo, long long hi, std::string_view what)
{
    const long long v = to_int(tok, line);
    if (v < lo || v > hi)
        throw FormatError(line, std::string(what) + " " + tok + " out of range " + std::to_string(lo) + ".." +
                                    std::to_string(hi));
    return static_cast<int>(v);
}

inline const Line& header(const std::vector<Line>& lines, std::string_view keyword, std::size_t arity)
{
    if (lines.empty())
        throw FormatError(1, "empty input, expected '" + std::string(keyword) + "' header");
    const auto& h = lines.front();
    if (h.tokens.front() != keyword || h.tokens.size() != arity + 1)
        throw FormatError(h.number, "expected header '" + std::string(keyword) + "' with " + std::to_string(arity) +
                                        " argument(s)");
    return h;
}

inline void write_list(std::ostream& out, std::string_view key, const std::vector<int>& values)
{
    out << key;
    for (int v : values)
        out << ' ' << v;
    out << '\n';
}

} // namespace detail

// ---------------------------------------------------------------------------
// PairColoring

inline PairColoring parse_pair_coloring(std::istream& in)
{
    const auto lines = detail::tokenize(in);
    const auto& h = detail::header(lines, "pairs", 2);
    const int N = detail::to_int_in(h.tokens[1], h.number, 0, 4096, "vertex count");
    const int k = detail::to_int_in(h.tokens[2], h.number, 1, 255, "palette size");

    std::vector<int> colors(pair_count(N), 0);
    auto slot = [N](int u, int v) {
        // lexicographic pair index
        return static_cast<std::size_t>((u - 1) * N - (u - 1) * u / 2 + (v - u - 1));
    };
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const auto& line = lines[i];
        if (line.tokens.size() != 3)
            throw FormatError(line.number, "expected 'u v c'");
        const int u = detail::to_int_in(line.tokens[0], line.number, 1, N, "vertex");
        const int v = detail::to_int_in(line.tokens[1], line.number, 1, N, "vertex");
        const int c = detail::to_int_in(line.tokens[2], line.number, 1, k, "color");
        if (u >= v)
            throw FormatError(line.number, "pair must satisfy u < v");
        auto& cell = colors[slot(u, v)];
        if (cell != 0)
            throw FormatError(line.number, "duplicate pair " + to_string(Pair{u, v}));
        cell = c;
    }
    for (int u = 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v)
            if (colors[slot(u, v)] == 0)
                throw FormatError(lines.back().number, "missing pair " + to_string(Pair{u, v}));
    return PairColoring(N, k, colors);
}

inline void write_pair_coloring(std::ostream& out, const PairColoring& chi)
{
    const int N = chi.vertex_count();
    out << "pairs " << N << ' ' << chi.palette() << '\n';
    for (int u = 1; u <= N; ++u)
        for (int v = u + 1; v <= N; ++v)
            out << u << ' ' << v << ' ' << chi(u, v) << '\n';
}

// ---------------------------------------------------------------------------
// TripleColoring

inline TripleColoring parse_triple_coloring(std::istream& in)
{
    const auto lines = detail::tokenize(in);
    const auto& h = detail::header(lines, "triples", 1);
    const int N = detail::to_int_in(h.tokens[1], h.number, 0, 2048, "vertex count");
    const std::uint64_t expected = triple_count(N);

    std::string bits;
    std::size_t where = h.number;
    if (lines.size() > 2)
        throw FormatError(lines[2].number, "unexpected content after the bit string");
    if (lines.size() == 2)
    {
        if (lines[1].tokens.size() != 1)
            throw FormatError(lines[1].number, "bit string must not contain spaces");
        bits = lines[1].tokens[0];
        where = lines[1].number;
    }
    if (bits.size() != expected)
        throw FormatError(where, "expected " + std::to_string(expected) + " bits, got " + std::to_string(bits.size()));
    std::vector<bool> values(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
    {
        if (bits[i] != '0' && bits[i] != '1')
            throw FormatError(where, "bit string may only contain 0 and 1");
        values[i] = bits[i] == '1';
    }
    return TripleColoring::from_bits(N, values);
}

inline void write_triple_coloring(std::ostream& out, const TripleColoring& c)
{
    out << "triples " << c.vertex_count() << '\n';
    std::string bits(c.size(), '0');
    for (std::uint64_t r = 0; r < c.size(); ++r)
        if (c.red_at(r))
            bits[r] = '1';
    out << bits << '\n';
}

// ---------------------------------------------------------------------------
// Pattern

inline PatternFile parse_pattern(std::istream& in)
{
    const auto lines = detail::tokenize(in);
    const auto& h = detail::header(lines, "pattern", 1);
    const int m = detail::to_int_in(h.tokens[1], h.number, 0, 1 << 20, "vertex count");

    PatternFile out;
    std::vector<Triple> edges;
    for (std::size_t i = 1; i < lines.size(); ++i)
    {
        const auto& line = lines[i];
        if (line.tokens.front() == "jumps")
        {
            if (i + 1 != lines.size())
                throw FormatError(line.number, "'jumps' must be the final line");
            std::vector<int> jumps;
            for (std::size_t j = 1; j < line.tokens.size(); ++j)
                jumps.push_back(detail::to_int_in(line.tokens[j], line.number, 1, m, "jump position"));
            out.jumps = std::move(jumps);
            continue;
        }
        if (line.tokens.size() != 3)
            throw FormatError(line.number, "expected 'a b c'");
        Triple e{detail::to_int_in(line.tokens[0], line.number, 1, m, "vertex"),
                 detail::to_int_in(line.tokens[1], line.number, 1, m, "vertex"),
                 detail::to_int_in(line.tokens[2], line.number, 1, m, "vertex")};
        if (!(e.a < e.b && e.b < e.c))
            throw FormatError(line.number, "edge must satisfy a < b < c");
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw FormatError(line.number, "duplicate edge " + to_string(e));
        edges.push_back(e);
    }
    out.pattern = OrderedTripleSystem(m, std::move(edges));
    return out;
}

inline void write_pattern(std::ostream& out, const OrderedTripleSystem& pattern,
                          const std::optional<std::vector<int>>& jumps = std::nullopt)
{
    out << "pattern " << pattern.vertex_count() << '\n';
    for (const auto& e : pattern.edges())
        out << e.a << ' ' << e.b << ' ' << e.c << '\n';
    if (jumps)
    {
        auto sorted = *jumps;
        std::sort(sorted.begin(), sorted.end());
        detail::write_list(out, "jumps", sorted);
    }
}

// ---------------------------------------------------------------------------
// Witness

inline Witness parse_witness(std::istream& in)
{
    const auto lines = detail::tokenize(in);
    Witness w;
    bool have_vertices = false;
    for (const auto& line : lines)
    {
        const auto& key = line.tokens.front();
        std::vector<int> values;
        for (std::size_t j = 1; j < line.tokens.size(); ++j)
            values.push_back(detail::to_int_in(line.tokens[j], line.number, 0, 1 << 30, key));
        if (key == "vertices")
        {
            if (have_vertices)
                throw FormatError(line.number, "duplicate 'vertices' field");
            for (std::size_t j = 1; j < values.size(); ++j)
                if (values[j - 1] >= values[j])
                    throw FormatError(line.number, "vertices must be strictly increasing");
            w.vertices = std::move(values);
            have_vertices = true;
        }
        else if (key == "jumps")
        {
            if (w.jumps)
                throw FormatError(line.number, "duplicate 'jumps' field");
            w.jumps = std::move(values);
        }
        else if (key == "blocks")
        {
            if (w.blocks)
                throw FormatError(line.number, "duplicate 'blocks' field");
            w.blocks = std::move(values);
        }
        else
        {
            throw FormatError(line.number, "unknown witness field '" + key + "'");
        }
    }
    if (!have_vertices)
        throw FormatError(lines.empty() ? 1 : lines.back().number, "witness lacks a 'vertices' field");
    return w;
}

inline void write_witness(std::ostream& out, const Witness& w)
{
    detail::write_list(out, "vertices", w.vertices);
    if (w.jumps)
        detail::write_list(out, "jumps", *w.jumps);
    if (w.blocks)
        detail::write_list(out, "blocks", *w.blocks);
}

// String conveniences, mostly for tests and golden files.

template <class T, class Writer>
std::string to_text(const T& value, Writer&& write)
{
    std::ostringstream ss;
    write(ss, value);
    return ss.str();
}

inline std::string to_text(const PairColoring& chi) { return to_text(chi, [](auto& o, const auto& v) { write_pair_coloring(o, v); }); }
inline std::string to_text(const TripleColoring& c) { return to_text(c, [](auto& o, const auto& v) { write_triple_coloring(o, v); }); }
inline std::string to_text(const Witness& w) { return to_text(w, [](auto& o, const auto& v) { write_witness(o, v); }); }
inline std::string to_text(const PatternFile& p)
{
    std::ostringstream ss;
    write_pattern(ss, p.pattern, p.jumps);
    return ss.str();
}

inline PairColoring pair_coloring_from_text(const std::string& text)
{
    std::istringstream ss(text);
    return parse_pair_coloring(ss);
}

inline TripleColoring triple_coloring_from_text(const std::string& text)
{
    std::istringstream ss(text);
    return parse_triple_coloring(ss);
}

inline PatternFile pattern_from_text(const std::string& text)
{
    std::istringstream ss(text);
    return parse_pattern(ss);
}

inline Witness witness_from_text(const std::string& text)
{
    std::istringstream ss(text);
    return parse_witness(ss);
}

} // namespace ramsey
