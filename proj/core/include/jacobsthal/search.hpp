#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "jacobsthal/domain.hpp"

namespace jacobsthal {

struct Progress {
    std::uint32_t length = 0;
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
};

struct SearchOptions {
    /// Worker threads for the feasibility search; 0 means one per logical CPU.
    unsigned workers = 1;
    /// Re-run the final feasibility call single-threaded so the reported
    /// witness does not depend on thread timing.
    bool canonical = false;
    /// Number of smallest primes whose class sets are enumerated outright
    /// before branching on the leftmost uncovered position.
    unsigned leading_primes = 5;
    /// Recompute the coverage of the partial assignment at every node and
    /// compare it with the incremental mask. Slow; for tests.
    bool check_invariants = false;
    std::chrono::milliseconds progress_interval{5000};
    std::function<void(const Progress&)> on_progress;
};

unsigned resolve_workers(unsigned requested) noexcept;

/// A full cover of {1..length} within the slot limits of `kind`, or nullopt
/// once the search space is exhausted.
std::optional<ResidueAssignment> feasible(std::uint32_t length, const PrimeContext& ctx, ProblemKind kind,
                                          const SearchOptions& options = {}, SearchStats* stats = nullptr);

struct GreedyBound {
    std::uint32_t length = 0;
    ResidueAssignment assignment;
};

/// Largest L, grown from 1, for which most-coverage-first greedy completes a
/// full cover of {1..L}. h >= L + 1.
GreedyBound greedy_lower_bound(const PrimeContext& ctx, ProblemKind kind);

/// Longest prefix {1..L} that the assignment's classes cover, with the
/// assignment's length set to L.
ResidueAssignment extend_to_covered_prefix(ResidueAssignment assignment, const PrimeContext& ctx);

ComputationResult compute_h(const PrimeContext& ctx, ProblemKind kind, const SearchOptions& options = {});

inline constexpr unsigned kAssignmentOracleMaxN = 5;
inline constexpr unsigned kDefinitionOracleMaxN = 4;

/// h by trying every residue assignment. Throws InputError for n > 5.
std::uint64_t assignment_oracle(const PrimeContext& ctx, ProblemKind kind);

/// h by sweeping every (a, b) modulo the primorial. Throws InputError for n > 4.
std::uint64_t definition_oracle(const PrimeContext& ctx, ProblemKind kind);

} // namespace jacobsthal
