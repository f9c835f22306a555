#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace jacobsthal {

/// Raised for malformed user input: bad n, bad witness, parity violations.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a caller breaks a documented precondition of the library.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a computed result fails its own certificate check. Always a bug.
class InvariantBreach : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Classic: one residue class per prime (single progression).
/// Paired: one class for 2, up to two for each odd prime (paired progression
/// with even component difference).
enum class ProblemKind { Classic, Paired };

constexpr unsigned slots_for_prime(ProblemKind kind, std::uint32_t p) noexcept
{
    return (kind == ProblemKind::Paired && p != 2) ? 2u : 1u;
}

std::string_view to_string(ProblemKind kind) noexcept;
ProblemKind parse_kind(std::string_view text);

inline constexpr unsigned kMaxPrimeCount = 64;

/// The first n primes, ascending. Throws InputError unless 1 <= n <= 64.
std::vector<std::uint32_t> nth_primes(unsigned n);

/// Largest number of positions of {1..length} that k distinct residue
/// classes modulo p can hit together.
std::uint64_t capacity(std::uint32_t p, unsigned k, std::uint64_t length) noexcept;

class PrimeContext {
public:
    explicit PrimeContext(unsigned n);

    unsigned n() const noexcept { return n_; }
    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }
    std::uint32_t largest() const noexcept { return primes_.back(); }
    const mpz_class& primorial() const noexcept { return primorial_; }
    /// p_n^2 - p_n
    std::uint64_t bound() const noexcept { return bound_; }

private:
    unsigned n_;
    std::vector<std::uint32_t> primes_;
    mpz_class primorial_;
    std::uint64_t bound_;
};

std::uint64_t bound_value(const PrimeContext& ctx) noexcept;

/// Residue classes chosen per prime together with the interval {1..length}
/// they are meant to cover. classes[i] holds residues modulo primes[i].
struct ResidueAssignment {
    ProblemKind kind = ProblemKind::Paired;
    std::uint32_t length = 0;
    std::vector<std::vector<std::uint32_t>> classes;

    /// Throws InputError if a residue is out of range or a prime holds more
    /// classes than its slot count.
    void validate(const PrimeContext& ctx) const;

    /// Lexicographic on (per-prime sorted class lists).
    friend bool operator<(const ResidueAssignment& lhs, const ResidueAssignment& rhs);
    friend bool operator==(const ResidueAssignment&, const ResidueAssignment&) = default;
};

ResidueAssignment empty_assignment(const PrimeContext& ctx, ProblemKind kind, std::uint32_t length);

/// A coprime-free (paired) progression: for every q in 1..length some prime
/// of the context divides a + q or b + q. Classic witnesses carry b == a.
struct Witness {
    ProblemKind kind = ProblemKind::Paired;
    unsigned n = 0;
    mpz_class a;
    mpz_class b;
    std::int64_t length = 0;

    mpz_class difference() const { return b - a; }
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t feasibility_calls = 0;
    std::uint64_t pruned_by_capacity = 0;
    std::uint64_t pruned_by_class_count = 0;
    std::chrono::milliseconds wall_time{0};

    SearchStats& operator+=(const SearchStats& other);
};

struct ComputationResult {
    ProblemKind kind = ProblemKind::Paired;
    unsigned n = 0;
    std::uint32_t p_n = 0;
    std::uint64_t h = 0;
    std::uint64_t bound = 0;
    bool bound_ok = false;
    Witness witness;
    SearchStats stats;
};

} // namespace jacobsthal
