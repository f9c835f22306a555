// Brute-force references for validating the covering search. Neither oracle
// uses the solver, and the definition sweep does not use residue classes at all.

#include <algorithm>
#include <string>
#include <vector>

#include "jacobsthal/search.hpp"

namespace jacobsthal {

namespace {

void require_ceiling(const PrimeContext& ctx, unsigned ceiling, const char* name)
{
    if (ctx.n() > ceiling)
        throw InputError(std::string(name) + " oracle supports n <= " + std::to_string(ceiling) + ", got " +
                         std::to_string(ctx.n()));
}

// Every subset of {0..p-1} with 1..k members.
std::vector<std::vector<std::uint32_t>> class_subsets(std::uint32_t p, unsigned k)
{
    std::vector<std::vector<std::uint32_t>> subsets;
    for (std::uint32_t r = 0; r < p; ++r)
        subsets.push_back({r});
    if (k >= 2)
        for (std::uint32_t r = 0; r < p; ++r)
            for (std::uint32_t s = r + 1; s < p; ++s)
                subsets.push_back({r, s});
    return subsets;
}

} // namespace

std::uint64_t assignment_oracle(const PrimeContext& ctx, ProblemKind kind)
{
    require_ceiling(ctx, kAssignmentOracleMaxN, "assignment");
    const auto& primes = ctx.primes();

    std::vector<std::vector<std::vector<std::uint32_t>>> choices;
    for (auto p : primes)
        choices.push_back(class_subsets(p, slots_for_prime(kind, p)));

    std::vector<std::size_t> pick(primes.size(), 0);
    std::uint64_t longest = 0;
    for (;;) {
        auto killed = [&](std::uint64_t q) {
            for (std::size_t i = 0; i < primes.size(); ++i)
                for (auto r : choices[i][pick[i]])
                    if (q % primes[i] == r)
                        return true;
            return false;
        };
        std::uint64_t run = 0;
        while (killed(run + 1))
            ++run;
        longest = std::max(longest, run);

        std::size_t digit = 0;
        while (digit < pick.size() && ++pick[digit] == choices[digit].size())
            pick[digit++] = 0;
        if (digit == pick.size())
            break;
    }
    return longest + 1;
}

std::uint64_t definition_oracle(const PrimeContext& ctx, ProblemKind kind)
{
    require_ceiling(ctx, kDefinitionOracleMaxN, "definition");
    const auto& primes = ctx.primes();
    const std::uint64_t period = ctx.primorial().get_ui();

    // shares_factor[x]: some p_i divides x, for x in [0, period).
    std::vector<char> shares_factor(period, 0);
    for (std::uint64_t x = 0; x < period; ++x)
        for (auto p : primes)
            if (x % p == 0)
                shares_factor[x] = 1;

    std::uint64_t longest = 0;
    for (std::uint64_t a = 0; a < period; ++a) {
        for (std::uint64_t b = 0; b < period; ++b) {
            if (kind == ProblemKind::Classic ? b != a : (a + b) % 2 != 0)
                continue;
            // The pattern in q has the primorial as a period; two periods
            // catch runs that wrap around.
            std::uint64_t run = 0;
            for (std::uint64_t q = 1; q <= 2 * period; ++q) {
                if (shares_factor[(a + q) % period] || shares_factor[(b + q) % period])
                    longest = std::max(longest, ++run);
                else
                    run = 0;
            }
        }
    }
    return longest + 1;
}

} // namespace jacobsthal
