#include "jacobsthal/domain.hpp"

#include <algorithm>
#include <string>

namespace jacobsthal {

std::string_view to_string(ProblemKind kind) noexcept
{
    return kind == ProblemKind::Classic ? "classic" : "paired";
}

ProblemKind parse_kind(std::string_view text)
{
    if (text == "classic")
        return ProblemKind::Classic;
    if (text == "paired")
        return ProblemKind::Paired;
    throw InputError("unknown problem kind '" + std::string(text) + "'");
}

std::vector<std::uint32_t> nth_primes(unsigned n)
{
    if (n == 0 || n > kMaxPrimeCount)
        throw InputError("prime count must be in 1.." + std::to_string(kMaxPrimeCount) + ", got " + std::to_string(n));

    std::vector<std::uint32_t> primes;
    primes.reserve(n);
    for (std::uint32_t candidate = 2; primes.size() < n; ++candidate) {
        bool prime = true;
        for (auto p : primes) {
            if (p * p > candidate)
                break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(candidate);
    }
    return primes;
}

std::uint64_t capacity(std::uint32_t p, unsigned k, std::uint64_t length) noexcept
{
    if (k >= p)
        return length;
    // Each class holds q or q+1 members of {1..length}; at most s classes
    // get the extra one.
    const std::uint64_t full = length / p;
    const std::uint64_t rest = length % p;
    return k * full + std::min<std::uint64_t>(k, rest);
}

PrimeContext::PrimeContext(unsigned n)
    : n_(n)
    , primes_(nth_primes(n))
    , primorial_(1)
{
    for (auto p : primes_)
        primorial_ *= p;
    const std::uint64_t largest = primes_.back();
    bound_ = largest * largest - largest;
}

std::uint64_t bound_value(const PrimeContext& ctx) noexcept
{
    return ctx.bound();
}

void ResidueAssignment::validate(const PrimeContext& ctx) const
{
    if (classes.size() != ctx.n())
        throw InputError("assignment has " + std::to_string(classes.size()) + " class sets for " +
                         std::to_string(ctx.n()) + " primes");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto p = ctx.primes()[i];
        const auto& set = classes[i];
        if (set.size() > slots_for_prime(kind, p))
            throw InputError("too many classes modulo " + std::to_string(p));
        for (auto r : set)
            if (r >= p)
                throw InputError("residue " + std::to_string(r) + " out of range modulo " + std::to_string(p));
        if (set.size() == 2 && set[0] == set[1])
            throw InputError("duplicate class modulo " + std::to_string(p));
    }
}

bool operator<(const ResidueAssignment& lhs, const ResidueAssignment& rhs)
{
    auto sorted = [](std::vector<std::uint32_t> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    const auto count = std::min(lhs.classes.size(), rhs.classes.size());
    for (std::size_t i = 0; i < count; ++i) {
        auto l = sorted(lhs.classes[i]);
        auto r = sorted(rhs.classes[i]);
        if (l != r)
            return l < r;
    }
    return lhs.classes.size() < rhs.classes.size();
}

ResidueAssignment empty_assignment(const PrimeContext& ctx, ProblemKind kind, std::uint32_t length)
{
    ResidueAssignment assignment;
    assignment.kind = kind;
    assignment.length = length;
    assignment.classes.resize(ctx.n());
    return assignment;
}

SearchStats& SearchStats::operator+=(const SearchStats& other)
{
    nodes += other.nodes;
    feasibility_calls += other.feasibility_calls;
    pruned_by_capacity += other.pruned_by_capacity;
    pruned_by_class_count += other.pruned_by_class_count;
    wall_time += other.wall_time;
    return *this;
}

} // namespace jacobsthal
