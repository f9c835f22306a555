#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "jacobsthal/domain.hpp"

namespace jacobsthal::detail {

/// Class masks for one (context, kind, length) triple. Immutable; shared by
/// all workers of one feasibility call.
struct CoverTables {
    CoverTables(const PrimeContext& ctx, ProblemKind kind, std::uint32_t length);

    using Word = std::uint64_t;

    const PrimeContext* ctx;
    ProblemKind kind;
    std::uint32_t length;
    std::size_t words;
    std::vector<std::uint32_t> primes;
    std::vector<std::uint8_t> initial_slots;
    std::vector<std::size_t> class_offset; // first flat class index of prime i
    std::size_t class_total;
    std::vector<Word> masks; // masks[(class_offset[i] + r) * words + w]
    std::vector<Word> padding; // bits past `length` preset so they read as covered

    const Word* mask(std::size_t prime, std::uint32_t residue) const noexcept
    {
        return masks.data() + (class_offset[prime] + residue) * words;
    }
};

/// Self-contained search node; subtrees rooted at distinct snapshots are
/// independent.
struct NodeSnapshot {
    std::vector<CoverTables::Word> covered;
    std::vector<std::uint8_t> slots;
    std::vector<std::uint8_t> flags;
    unsigned next_leading = 0;
};

/// Branch-and-bound over residue classes. The first `leading_primes` primes
/// get their class sets enumerated in prime order; after that the search
/// branches on which prime covers the leftmost uncovered position, and
/// later siblings forbid the classes tried by earlier ones.
class CoverSolver {
public:
    CoverSolver(std::shared_ptr<const CoverTables> tables, unsigned leading_primes, bool check_invariants);

    NodeSnapshot root() const;

    /// Exhaustive search below `start`. True when a full cover was found.
    /// Gives up early (returning false) once `stop` reads true.
    bool solve(const NodeSnapshot& start, const std::atomic<bool>* stop = nullptr);

    /// Expanded-node counts are added here in batches while searching.
    void report_nodes_to(std::atomic<std::uint64_t>* sink) noexcept { node_sink_ = sink; }

    /// Snapshots every live node at `depth` below `start`. True when a full
    /// cover turned up before reaching that depth.
    bool collect(const NodeSnapshot& start, unsigned depth, std::vector<NodeSnapshot>& out);

    const std::optional<ResidueAssignment>& solution() const noexcept { return solution_; }
    const SearchStats& stats() const noexcept { return stats_; }

private:
    enum Flag : std::uint8_t { Free = 0, Chosen = 1, Forbidden = 2 };
    using Word = CoverTables::Word;

    void load(const NodeSnapshot& snapshot);
    NodeSnapshot snapshot(unsigned depth) const;
    bool expand(unsigned depth);
    bool prune(unsigned depth, std::uint32_t uncovered, std::uint32_t leftmost);
    bool branch_leading(unsigned depth);
    bool branch_position(unsigned depth, std::uint32_t leftmost);
    void record_solution();
    void flush_nodes() noexcept;
    void check_node(unsigned depth) const;
    std::uint32_t uncovered_in(const Word* covered, std::size_t prime, std::uint32_t residue) const noexcept;

    Word* covered_at(unsigned depth) noexcept { return covered_.data() + depth * tables_->words; }
    const Word* covered_at(unsigned depth) const noexcept { return covered_.data() + depth * tables_->words; }
    std::uint8_t& flag(std::size_t prime, std::uint32_t residue) noexcept
    {
        return flags_[tables_->class_offset[prime] + residue];
    }

    std::shared_ptr<const CoverTables> tables_;
    unsigned leading_primes_;
    bool check_invariants_;

    std::vector<Word> covered_; // one row per depth
    std::vector<std::uint8_t> slots_;
    std::vector<std::uint8_t> flags_;
    unsigned next_leading_ = 0;

    const std::atomic<bool>* stop_ = nullptr;
    bool stopped_ = false;
    unsigned collect_depth_ = 0;
    std::vector<NodeSnapshot>* collected_ = nullptr;

    std::optional<ResidueAssignment> solution_;
    SearchStats stats_;
    std::atomic<std::uint64_t>* node_sink_ = nullptr;
    std::uint64_t reported_nodes_ = 0;
};

} // namespace jacobsthal::detail
