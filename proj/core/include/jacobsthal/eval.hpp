#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jacobsthal/domain.hpp"

namespace jacobsthal {

/// One bit per position q in {1..length}; bit set means q is killed.
class CoverageMask {
public:
    using Word = std::uint64_t;
    static constexpr unsigned kWordBits = 64;

    CoverageMask() = default;
    explicit CoverageMask(std::uint32_t length);

    std::uint32_t length() const noexcept { return length_; }
    std::span<const Word> words() const noexcept { return words_; }

    bool test(std::uint32_t q) const noexcept;
    void set(std::uint32_t q) noexcept;

    /// Sets every q in {1..length} with q = residue (mod modulus).
    void set_class(std::uint32_t modulus, std::uint32_t residue) noexcept;

    std::uint32_t count() const noexcept;
    bool full() const noexcept { return count() == length_; }
    /// Smallest unset position, if any.
    std::optional<std::uint32_t> first_unset() const noexcept;

    friend bool operator==(const CoverageMask&, const CoverageMask&) = default;

private:
    std::uint32_t length_ = 0;
    std::vector<Word> words_;
};

CoverageMask cover(const ResidueAssignment& assignment, const PrimeContext& ctx);
bool is_full_cover(const ResidueAssignment& assignment, const PrimeContext& ctx);

/// Class map r -> (length + 1 - r) mod p, the image of the assignment under
/// q -> length + 1 - q.
ResidueAssignment reflect(const ResidueAssignment& assignment, const PrimeContext& ctx);

/// Turns a full cover of {1..L} into integers (a, b) whose paired progression
/// of length L is coprime-free. Throws ContractViolation if the assignment is
/// not a full cover.
Witness crt_reconstruct(const ResidueAssignment& assignment, const PrimeContext& ctx);

/// First q in {1..length} for which neither a + q nor b + q has a prime
/// factor among ctx.primes(). Throws InputError for a malformed witness.
std::optional<std::int64_t> first_coprime_position(const Witness& witness, const PrimeContext& ctx);

bool verify_witness(const Witness& witness, const PrimeContext& ctx);

} // namespace jacobsthal
