#include "jacobsthal/eval.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace jacobsthal {

CoverageMask::CoverageMask(std::uint32_t length)
    : length_(length)
    , words_((length + kWordBits - 1) / kWordBits, 0)
{
}

bool CoverageMask::test(std::uint32_t q) const noexcept
{
    if (q == 0 || q > length_)
        return false;
    const auto bit = q - 1;
    return (words_[bit / kWordBits] >> (bit % kWordBits)) & 1u;
}

void CoverageMask::set(std::uint32_t q) noexcept
{
    if (q == 0 || q > length_)
        return;
    const auto bit = q - 1;
    words_[bit / kWordBits] |= Word{1} << (bit % kWordBits);
}

void CoverageMask::set_class(std::uint32_t modulus, std::uint32_t residue) noexcept
{
    std::uint32_t first = residue == 0 ? modulus : residue;
    for (std::uint64_t q = first; q <= length_; q += modulus)
        set(static_cast<std::uint32_t>(q));
}

std::uint32_t CoverageMask::count() const noexcept
{
    std::uint32_t total = 0;
    for (auto w : words_)
        total += static_cast<std::uint32_t>(std::popcount(w));
    return total;
}

std::optional<std::uint32_t> CoverageMask::first_unset() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const Word open = ~words_[w];
        if (open == 0)
            continue;
        const auto q = static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(open) + 1);
        if (q <= length_)
            return q;
        return std::nullopt;
    }
    return std::nullopt;
}

CoverageMask cover(const ResidueAssignment& assignment, const PrimeContext& ctx)
{
    assignment.validate(ctx);
    CoverageMask mask(assignment.length);
    for (std::size_t i = 0; i < assignment.classes.size(); ++i)
        for (auto r : assignment.classes[i])
            mask.set_class(ctx.primes()[i], r);
    return mask;
}

bool is_full_cover(const ResidueAssignment& assignment, const PrimeContext& ctx)
{
    return assignment.length > 0 && cover(assignment, ctx).full();
}

ResidueAssignment reflect(const ResidueAssignment& assignment, const PrimeContext& ctx)
{
    ResidueAssignment image = assignment;
    for (std::size_t i = 0; i < image.classes.size(); ++i) {
        const std::uint64_t p = ctx.primes()[i];
        for (auto& r : image.classes[i])
            r = static_cast<std::uint32_t>((assignment.length + 1 + p - r) % p);
        std::sort(image.classes[i].begin(), image.classes[i].end());
    }
    return image;
}

namespace {

std::uint64_t inverse_mod(std::uint64_t value, std::uint64_t modulus)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus), new_r = static_cast<std::int64_t>(value % modulus);
    while (new_r != 0) {
        const auto quotient = r / new_r;
        t = std::exchange(new_t, t - quotient * new_t);
        r = std::exchange(new_r, r - quotient * new_r);
    }
    if (r != 1)
        throw ContractViolation("modulus " + std::to_string(modulus) + " is not coprime to the running product");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(modulus) : t);
}

// x = residues[i] (mod primes[i]) for all i, 0 <= x < product.
mpz_class solve_crt(const std::vector<std::uint32_t>& primes, const std::vector<std::uint32_t>& residues)
{
    mpz_class x = 0;
    mpz_class modulus = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        const std::uint64_t current = mpz_fdiv_ui(x.get_mpz_t(), p);
        const std::uint64_t m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        const std::uint64_t step = ((residues[i] + p - current) % p) * inverse_mod(m_mod_p, p) % p;
        x += modulus * static_cast<unsigned long>(step);
        modulus *= static_cast<unsigned long>(p);
    }
    return x;
}

} // namespace

Witness crt_reconstruct(const ResidueAssignment& assignment, const PrimeContext& ctx)
{
    if (!is_full_cover(assignment, ctx))
        throw ContractViolation("crt_reconstruct needs a full cover of {1.." + std::to_string(assignment.length) + "}");

    const auto& primes = ctx.primes();
    std::vector<std::uint32_t> a_residues(primes.size());
    std::vector<std::uint32_t> b_residues(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto p = primes[i];
        const auto& set = assignment.classes[i];
        const std::uint32_t r = set.empty() ? 0 : set.front();
        const std::uint32_t r2 = (assignment.kind == ProblemKind::Paired && set.size() == 2) ? set[1] : r;
        // a + q = 0 (mod p) exactly when q = r (mod p).
        a_residues[i] = (p - r) % p;
        b_residues[i] = (p - r2) % p;
    }

    Witness witness;
    witness.kind = assignment.kind;
    witness.n = ctx.n();
    witness.a = solve_crt(primes, a_residues);
    witness.b = solve_crt(primes, b_residues);
    witness.length = assignment.length;
    return witness;
}

std::optional<std::int64_t> first_coprime_position(const Witness& witness, const PrimeContext& ctx)
{
    if (witness.n != ctx.n())
        throw InputError("witness is for n = " + std::to_string(witness.n) + ", expected n = " + std::to_string(ctx.n()));
    if (witness.length < 1)
        throw InputError("witness length must be positive");
    if (witness.kind == ProblemKind::Paired && mpz_even_p(mpz_class(witness.b - witness.a).get_mpz_t()) == 0)
        throw InputError("paired witness needs an even difference b - a");
    if (witness.kind == ProblemKind::Classic && witness.a != witness.b)
        throw InputError("classic witness needs b == a");

    const auto& primes = ctx.primes();
    std::vector<std::uint64_t> a_mod(primes.size());
    std::vector<std::uint64_t> b_mod(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        a_mod[i] = mpz_fdiv_ui(witness.a.get_mpz_t(), primes[i]);
        b_mod[i] = mpz_fdiv_ui(witness.b.get_mpz_t(), primes[i]);
    }

    for (std::int64_t q = 1; q <= witness.length; ++q) {
        bool divisible = false;
        for (std::size_t i = 0; i < primes.size() && !divisible; ++i) {
            const std::uint64_t p = primes[i];
            const std::uint64_t shift = static_cast<std::uint64_t>(q) % p;
            divisible = (a_mod[i] + shift) % p == 0 || (b_mod[i] + shift) % p == 0;
        }
        if (!divisible)
            return q;
    }
    return std::nullopt;
}

bool verify_witness(const Witness& witness, const PrimeContext& ctx)
{
    return !first_coprime_position(witness, ctx).has_value();
}

} // namespace jacobsthal
