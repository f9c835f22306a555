#pragma once

// Test-only references and helpers. Nothing here calls into the search.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jacobsthal/domain.hpp"

namespace jacobsthal::testing {

/// Maximum over all k-subsets of residues mod p of the hits in {1..length}.
inline std::uint64_t brute_force_capacity(std::uint32_t p, unsigned k, std::uint64_t length)
{
    std::vector<std::uint64_t> per_class(p, 0);
    for (std::uint64_t q = 1; q <= length; ++q)
        ++per_class[q % p];
    std::uint64_t best = 0;
    if (k == 1 || p == 1) {
        for (auto c : per_class)
            best = std::max(best, c);
        return k >= p ? length : best;
    }
    if (k >= p)
        return length;
    for (std::uint32_t r = 0; r < p; ++r)
        for (std::uint32_t s = r + 1; s < p; ++s)
            best = std::max(best, per_class[r] + per_class[s]);
    return best;
}

/// Position-by-position membership test, independent of CoverageMask.
inline bool naive_killed(const ResidueAssignment& assignment, const PrimeContext& ctx, std::uint64_t q)
{
    for (std::size_t i = 0; i < assignment.classes.size(); ++i)
        for (auto r : assignment.classes[i])
            if (q % ctx.primes()[i] == r)
                return true;
    return false;
}

inline bool naive_full_cover(const ResidueAssignment& assignment, const PrimeContext& ctx)
{
    if (assignment.length == 0)
        return false;
    for (std::uint64_t q = 1; q <= assignment.length; ++q)
        if (!naive_killed(assignment, ctx, q))
            return false;
    return true;
}

inline ResidueAssignment random_assignment(const PrimeContext& ctx, ProblemKind kind, std::uint32_t length,
                                           std::mt19937_64& rng)
{
    ResidueAssignment assignment = empty_assignment(ctx, kind, length);
    for (std::size_t i = 0; i < ctx.n(); ++i) {
        const auto p = ctx.primes()[i];
        const unsigned count = std::uniform_int_distribution<unsigned>(0, slots_for_prime(kind, p))(rng);
        std::uniform_int_distribution<std::uint32_t> residue(0, p - 1);
        while (assignment.classes[i].size() < count) {
            const auto r = residue(rng);
            if (assignment.classes[i].empty() || assignment.classes[i].front() != r)
                assignment.classes[i].push_back(r);
        }
    }
    return assignment;
}

inline std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir()
    {
        std::random_device device;
        path_ = std::filesystem::temp_directory_path() / ("jacobsthal-test-" + std::to_string(device()));
        std::filesystem::create_directories(path_);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    ~TempDir()
    {
        std::error_code ignored;
        std::filesystem::remove_all(path_, ignored);
    }

    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

} // namespace jacobsthal::testing
