#pragma once

// Exhaustive decision procedure: is there a red/blue coloring of the
// triples of [N] with no red copy of one pattern and no blue copy of a
// pattern (or of any member of the jump family)?
//
// Triples are assigned in lexicographic rank order, Red before Blue, so the
// first witness found is the lexicographically least one (Red < Blue).
// Monotone paths are pruned with incremental alpha tables: in rank order the
// last edge of a monotone path is always the most recently assigned one, so
// a new path is complete exactly when alpha of its first pair reaches the
// threshold. Other patterns are pruned by running the embedding detectors
// on the assigned triples of one color (unassigned triples never count),
// which only ever rejects complete structures.
//
// Parallel runs fix the first few assignments, solve the resulting
// subproblems concurrently and merge them in order, so answers, witnesses
// and node counts match the sequential run exactly.

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "core.hpp"
#include "detect.hpp"
#include "family.hpp"
#include "io.hpp"

namespace ramsey
{

struct JumpsSelector
{
    int n = 1;

    bool operator==(const JumpsSelector&) const = default;
};

using BlueSpec = std::variant<OrderedTripleSystem, JumpsSelector>;

struct AvoidanceProblem
{
    int N = 0;
    OrderedTripleSystem red;
    BlueSpec blue;
};

enum class Status
{
    Sat,
    Unsat,
    Inconclusive,
};

inline const char* to_string(Status s) noexcept
{
    switch (s)
    {
    case Status::Sat: return "SAT";
    case Status::Unsat: return "UNSAT";
    case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct SearchOptions
{
    std::uint64_t budget = 1'000'000'000;
    int workers = 1;
    int split_depth = 12;
};

struct SearchResult
{
    Status status = Status::Inconclusive;
    std::optional<TripleColoring> witness;
    std::uint64_t nodes = 0;
    int max_depth = 0;
};

/// "path:m", "power:m,t" or "pattern:m:<edges>" for certificates.
inline std::string describe(const OrderedTripleSystem& p)
{
    const int m = p.vertex_count();
    if (p == monotone_path(m))
        return "path:" + std::to_string(m);
    for (int t = 4; t <= std::max(m, 4); ++t)
        if (p == power_path(m, t))
            return "power:" + std::to_string(m) + "," + std::to_string(t);
    std::string out = "pattern:" + std::to_string(m) + ":";
    for (std::size_t i = 0; i < p.edges().size(); ++i)
    {
        const auto& e = p.edges()[i];
        out += (i ? ";" : "") + std::to_string(e.a) + "," + std::to_string(e.b) + "," + std::to_string(e.c);
    }
    return out;
}

inline std::string describe(const BlueSpec& spec)
{
    if (const auto* j = std::get_if<JumpsSelector>(&spec))
        return "jumps:" + std::to_string(j->n);
    return describe(std::get<OrderedTripleSystem>(spec));
}

/// Full, independent check that `c` avoids both sides of the problem.
inline bool avoids(const AvoidanceProblem& problem, const TripleColoring& c)
{
    if (find_embedding(c.vertex_count(), problem.red, [&](int a, int b, int d) { return c.is_red(a, b, d); }))
        return false;
    if (const auto* j = std::get_if<JumpsSelector>(&problem.blue))
        return !find_blue_jump_member(c, j->n);
    return !find_blue_embedding(c, std::get<OrderedTripleSystem>(problem.blue));
}

namespace detail
{

class SearchEngine
{
public:
    SearchEngine(const AvoidanceProblem& problem, std::uint64_t budget, const std::atomic<bool>* cancel = nullptr)
        : problem_(problem), N_(problem.N), total_(static_cast<int>(triple_count(problem.N))), budget_(budget),
          cancel_(cancel), state_(static_cast<std::size_t>(total_), kUnassigned)
    {
        for (int r = 0; r < total_; ++r)
            triples_.push_back(lex_unrank(static_cast<std::uint64_t>(r), N_));
        rank_of_.assign(static_cast<std::size_t>(N_ + 1) * (N_ + 1) * (N_ + 1), -1);
        for (int r = 0; r < total_; ++r)
        {
            const auto& t = triples_[static_cast<std::size_t>(r)];
            rank_of_[cube(t.a, t.b, t.c)] = r;
        }
        red_path_ = path_length(problem.red);
        if (const auto* fixed = std::get_if<OrderedTripleSystem>(&problem.blue))
        {
            blue_path_ = path_length(*fixed);
            symmetric_ = *fixed == problem.red;
        }
        alpha_[0].assign(static_cast<std::size_t>(N_ + 1) * (N_ + 1), 1);
        alpha_[1].assign(static_cast<std::size_t>(N_ + 1) * (N_ + 1), 1);
    }

    int total() const noexcept { return total_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    int max_depth() const noexcept { return max_depth_; }
    bool aborted() const noexcept { return aborted_; }

    /// Edgeless patterns embed whenever they fit, independent of colors.
    bool trivially_unsat() const
    {
        auto forced = [&](const OrderedTripleSystem& p) { return p.edge_count() == 0 && p.vertex_count() <= N_; };
        if (forced(problem_.red))
            return true;
        if (const auto* fixed = std::get_if<OrderedTripleSystem>(&problem_.blue))
            return forced(*fixed);
        return false;
    }

    /// Depth-first search from `depth`; true when every triple is assigned.
    bool solve(int depth)
    {
        if (depth == total_)
            return true;
        for (Color color : {Color::Red, Color::Blue})
        {
            if (depth == 0 && symmetric_ && color == Color::Blue)
                continue;
            ++nodes_;
            if (nodes_ > budget_ || (cancel_ && (nodes_ & 0xFFF) == 0 && cancel_->load(std::memory_order_relaxed)))
            {
                aborted_ = true;
                return false;
            }
            if (assign(depth, color))
            {
                max_depth_ = std::max(max_depth_, depth + 1);
                if (solve(depth + 1))
                    return true;
                unassign(depth);
                if (aborted_)
                    return false;
            }
        }
        return false;
    }

    /// Enumerates surviving assignments of the first `depth` triples in
    /// search order. Each leaf reports the node count at the moment it is
    /// reached.
    template <class Leaf>
    void enumerate_prefixes(int depth, int target, std::vector<Color>& prefix, Leaf&& on_leaf)
    {
        if (depth == target)
        {
            on_leaf(prefix, nodes_);
            return;
        }
        for (Color color : {Color::Red, Color::Blue})
        {
            if (depth == 0 && symmetric_ && color == Color::Blue)
                continue;
            ++nodes_;
            if (nodes_ > budget_)
            {
                aborted_ = true;
                return;
            }
            if (assign(depth, color))
            {
                max_depth_ = std::max(max_depth_, depth + 1);
                prefix.push_back(color);
                enumerate_prefixes(depth + 1, target, prefix, on_leaf);
                prefix.pop_back();
                unassign(depth);
                if (aborted_)
                    return;
            }
        }
    }

    /// Re-applies a surviving prefix without counting nodes.
    void replay(const std::vector<Color>& prefix)
    {
        for (std::size_t r = 0; r < prefix.size(); ++r)
            if (!assign(static_cast<int>(r), prefix[r]))
                throw CertificationError("replayed prefix was rejected");
    }

    TripleColoring coloring() const
    {
        return TripleColoring::from_function(N_, [&](int a, int b, int c) {
            return state_[static_cast<std::size_t>(rank_of_[cube(a, b, c)])] == kRed ? Color::Red : Color::Blue;
        });
    }

private:
    static constexpr std::int8_t kUnassigned = -1;
    static constexpr std::int8_t kBlue = 0;
    static constexpr std::int8_t kRed = 1;

    struct Undo
    {
        int rank;
        std::size_t cell;
        int previous;
        int side;
    };

    static int path_length(const OrderedTripleSystem& p)
    {
        return p.edge_count() > 0 && p == monotone_path(p.vertex_count()) ? p.vertex_count() : 0;
    }

    std::size_t cube(int a, int b, int c) const noexcept
    {
        const auto n = static_cast<std::size_t>(N_ + 1);
        return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c);
    }

    std::size_t cell(int u, int v) const noexcept
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(N_ + 1) + static_cast<std::size_t>(v);
    }

    bool assigned_as(int a, int b, int c, std::int8_t want) const noexcept
    {
        return state_[static_cast<std::size_t>(rank_of_[cube(a, b, c)])] == want;
    }

    // Sets triple `rank` to `color` unless that completes a forbidden copy.
    bool assign(int rank, Color color)
    {
        const Triple& t = triples_[static_cast<std::size_t>(rank)];
        const int side = color == Color::Red ? 1 : 0;
        const int path = color == Color::Red ? red_path_ : blue_path_;
        auto& alpha = alpha_[static_cast<std::size_t>(side)];
        const std::int8_t mark = color == Color::Red ? kRed : kBlue;

        if (path > 0)
        {
            // the new copy ends with (t.b, t.c) and has alpha(a,b)+1 pairs' worth of edges
            if (alpha[cell(t.a, t.b)] + 1 >= path - 1)
                return false;
        }

        state_[static_cast<std::size_t>(rank)] = mark;
        if (path == 0 && !pattern_free(color))
        {
            state_[static_cast<std::size_t>(rank)] = kUnassigned;
            return false;
        }
        if (path > 0)
        {
            const std::size_t target = cell(t.b, t.c);
            const int candidate = alpha[cell(t.a, t.b)] + 1;
            if (candidate > alpha[target])
            {
                undo_.push_back({rank, target, alpha[target], side});
                alpha[target] = candidate;
            }
        }
        return true;
    }

    void unassign(int rank)
    {
        while (!undo_.empty() && undo_.back().rank == rank)
        {
            const auto& u = undo_.back();
            alpha_[static_cast<std::size_t>(u.side)][u.cell] = u.previous;
            undo_.pop_back();
        }
        state_[static_cast<std::size_t>(rank)] = kUnassigned;
    }

    // No copy of the color's pattern among triples assigned that color.
    bool pattern_free(Color color) const
    {
        const std::int8_t want = color == Color::Red ? kRed : kBlue;
        auto has = [&](int a, int b, int c) { return assigned_as(a, b, c, want); };
        if (color == Color::Red)
            return !find_embedding(N_, problem_.red, has);
        if (const auto* j = std::get_if<JumpsSelector>(&problem_.blue))
            return !find_jump_member(N_, j->n, has);
        return !find_embedding(N_, std::get<OrderedTripleSystem>(problem_.blue), has);
    }

    const AvoidanceProblem& problem_;
    int N_;
    int total_;
    std::uint64_t budget_;
    const std::atomic<bool>* cancel_;
    std::vector<std::int8_t> state_;
    std::vector<Triple> triples_;
    std::vector<int> rank_of_;
    int red_path_ = 0;
    int blue_path_ = 0;
    bool symmetric_ = false;
    std::array<std::vector<int>, 2> alpha_;
    std::vector<Undo> undo_;
    std::uint64_t nodes_ = 0;
    int max_depth_ = 0;
    bool aborted_ = false;
};

} // namespace detail

/// Decides the avoidance problem exhaustively within the node budget.
inline SearchResult decide(const AvoidanceProblem& problem, const SearchOptions& options = {})
{
    if (problem.N < 0)
        throw InputError("host size must be non-negative");
    if (const auto* j = std::get_if<JumpsSelector>(&problem.blue); j && j->n < 1)
        throw InputError("jump count must be at least 1");

    auto verified = [&](TripleColoring c) {
        if (!avoids(problem, c))
            throw CertificationError("search produced a coloring that fails re-verification");
        return c;
    };

    detail::SearchEngine root(problem, options.budget);
    if (root.trivially_unsat())
        return {Status::Unsat, std::nullopt, 0, 0};

    const int total = root.total();
    const int split = std::clamp(options.split_depth, 0, total);

    struct Leaf
    {
        std::vector<Color> prefix;
        std::uint64_t nodes_before = 0; // prefix-tree nodes counted when this leaf is reached
    };
    std::vector<Leaf> leaves;
    std::vector<Color> prefix;
    root.enumerate_prefixes(0, split, prefix, [&](const std::vector<Color>& p, std::uint64_t nodes) {
        leaves.push_back({p, nodes});
    });
    const std::uint64_t prefix_nodes = root.nodes();
    if (root.aborted())
        return {Status::Inconclusive, std::nullopt, prefix_nodes, root.max_depth()};

    struct Outcome
    {
        bool done = false;
        bool sat = false;
        bool aborted = false;
        std::uint64_t nodes = 0;
        int max_depth = 0;
        std::optional<TripleColoring> witness;
    };
    std::vector<Outcome> outcomes(leaves.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_sat{std::numeric_limits<std::size_t>::max()};
    std::vector<std::unique_ptr<std::atomic<bool>>> cancels;
    for (std::size_t i = 0; i < leaves.size(); ++i)
        cancels.push_back(std::make_unique<std::atomic<bool>>(false));
    std::mutex cancel_mutex;

    auto work = [&] {
        while (true)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= leaves.size())
                return;
            if (i > first_sat.load())
                continue;
            detail::SearchEngine engine(problem, options.budget, cancels[i].get());
            engine.replay(leaves[i].prefix);
            Outcome& out = outcomes[i];
            out.sat = engine.solve(split);
            out.aborted = engine.aborted();
            out.nodes = engine.nodes();
            out.max_depth = std::max(engine.max_depth(), split);
            if (out.sat)
            {
                out.witness = engine.coloring();
                std::lock_guard lock(cancel_mutex);
                std::size_t seen = first_sat.load();
                while (i < seen && !first_sat.compare_exchange_weak(seen, i))
                {
                }
                for (std::size_t j = i + 1; j < leaves.size(); ++j)
                    cancels[j]->store(true);
            }
            out.done = !out.aborted || out.sat;
        }
    };

    const int workers = std::max(1, options.workers);
    if (workers == 1 || leaves.size() <= 1)
    {
        work();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    // Merge in search order.
    SearchResult result;
    result.max_depth = root.max_depth();
    std::uint64_t subtree_nodes = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i)
    {
        const Outcome& out = outcomes[i];
        const std::uint64_t before = leaves[i].nodes_before + subtree_nodes;
        if (out.sat)
        {
            const std::uint64_t nodes = before + out.nodes;
            if (nodes > options.budget)
                return {Status::Inconclusive, std::nullopt, options.budget + 1, result.max_depth};
            return {Status::Sat, verified(*out.witness), nodes, total};
        }
        if (out.aborted || !out.done)
            return {Status::Inconclusive, std::nullopt, std::max(before + out.nodes, options.budget + 1), result.max_depth};
        subtree_nodes += out.nodes;
        result.max_depth = std::max(result.max_depth, out.max_depth);
    }
    result.nodes = prefix_nodes + subtree_nodes;
    if (result.nodes > options.budget)
        return {Status::Inconclusive, std::nullopt, result.nodes, result.max_depth};
    result.status = Status::Unsat;
    return result;
}

/// Certificate text for one level: problem, outcome, node count, depth.
inline std::string certificate_text(const AvoidanceProblem& problem, const SearchResult& result)
{
    std::ostringstream out;
    out << "certificate\n";
    out << "N " << problem.N << '\n';
    out << "red " << describe(problem.red) << '\n';
    out << "blue " << describe(problem.blue) << '\n';
    out << "status " << to_string(result.status) << '\n';
    out << "nodes " << result.nodes << '\n';
    out << "max_depth " << result.max_depth << '\n';
    return out.str();
}

struct BracketLevel
{
    int N = 0;
    SearchResult result;
    bool implied = false; // UNSAT inferred from a smaller UNSAT level
};

struct BracketResult
{
    Status status = Status::Inconclusive; // Sat: open at Nmax; Unsat: bracket closed
    int largest_sat = -1;
    std::vector<BracketLevel> levels;
};

/// Decides N = 1, 2, ... up to nmax, stopping at the first UNSAT level:
/// a witness on N vertices restricts to one on N-1, so every larger level
/// is UNSAT too.
inline BracketResult bracket(const OrderedTripleSystem& red, const BlueSpec& blue, int nmax,
                             const SearchOptions& options = {})
{
    if (nmax < 3)
        throw InputError("bracket needs nmax >= 3");
    BracketResult out;
    for (int N = 1; N <= nmax; ++N)
    {
        AvoidanceProblem problem{N, red, blue};
        auto result = decide(problem, options);
        const Status status = result.status;
        out.levels.push_back({N, std::move(result), false});
        if (status == Status::Inconclusive)
        {
            out.status = Status::Inconclusive;
            return out;
        }
        if (status == Status::Unsat)
        {
            for (int M = N + 1; M <= nmax; ++M)
                out.levels.push_back({M, {Status::Unsat, std::nullopt, 0, 0}, true});
            out.status = Status::Unsat;
            return out;
        }
        out.largest_sat = N;
    }
    out.status = Status::Sat;
    return out;
}

} // namespace ramsey
