#include <doctest.h>

#include <vector>

#include "jacobsthal/domain.hpp"
#include "test_support.hpp"

using namespace jacobsthal;

TEST_SUITE("domain")
{
    TEST_CASE("nth_primes examples")
    {
        CHECK(nth_primes(1) == std::vector<std::uint32_t>{2});
        CHECK(nth_primes(5) == std::vector<std::uint32_t>{2, 3, 5, 7, 11});
        CHECK(nth_primes(21).back() == 73);
        CHECK(nth_primes(64).back() == 311);
    }

    TEST_CASE("nth_primes rejects counts outside 1..64")
    {
        CHECK_THROWS_AS(nth_primes(0), InputError);
        CHECK_THROWS_AS(nth_primes(65), InputError);
        CHECK_THROWS_AS(PrimeContext(0), InputError);
    }

    TEST_CASE("nth_primes lists every prime up to the last one")
    {
        const auto primes = nth_primes(kMaxPrimeCount);
        std::size_t next = 0;
        for (std::uint32_t x = 2; x <= primes.back(); ++x) {
            bool composite = false;
            for (std::uint32_t d = 2; d * d <= x; ++d)
                composite = composite || x % d == 0;
            if (composite) {
                CHECK(primes[next] != x);
            } else {
                REQUIRE(next < primes.size());
                CHECK(primes[next] == x);
                ++next;
            }
        }
        CHECK(next == primes.size());
    }

    TEST_CASE("slot counts per kind")
    {
        CHECK(slots_for_prime(ProblemKind::Classic, 2) == 1);
        CHECK(slots_for_prime(ProblemKind::Classic, 73) == 1);
        CHECK(slots_for_prime(ProblemKind::Paired, 2) == 1);
        CHECK(slots_for_prime(ProblemKind::Paired, 3) == 2);
        CHECK(slots_for_prime(ProblemKind::Paired, 73) == 2);
    }

    TEST_CASE("kind names")
    {
        CHECK(parse_kind("classic") == ProblemKind::Classic);
        CHECK(parse_kind("paired") == ProblemKind::Paired);
        CHECK(to_string(ProblemKind::Paired) == "paired");
        CHECK_THROWS_AS(parse_kind("Paired"), InputError);
    }

    TEST_CASE("capacity examples")
    {
        CHECK(testing::brute_force_capacity(3, 2, 5) == 4);
        CHECK(testing::brute_force_capacity(2, 1, 7) == 4);
        CHECK(capacity(3, 2, 5) == 4);
        CHECK(capacity(2, 1, 7) == 4);
        CHECK(capacity(5, 1, 5) == 1);
        CHECK(capacity(2, 2, 9) == 9);
    }

    TEST_CASE("capacity matches enumeration of class subsets")
    {
        for (auto p : nth_primes(11)) { // up to 31
            for (unsigned k = 1; k <= 2; ++k) {
                std::uint64_t previous = 0;
                for (std::uint64_t length = 1; length <= 200; ++length) {
                    const auto value = capacity(p, k, length);
                    CAPTURE(p);
                    CAPTURE(k);
                    CAPTURE(length);
                    REQUIRE(value == testing::brute_force_capacity(p, k, length));
                    CHECK(value <= length);
                    CHECK(value >= previous);
                    if (k == 2)
                        CHECK(value >= capacity(p, 1, length));
                    previous = value;
                }
            }
        }
    }

    TEST_CASE("prime context and bound")
    {
        CHECK(bound_value(PrimeContext(3)) == 20);
        CHECK(bound_value(PrimeContext(21)) == 5256);
        CHECK(bound_value(PrimeContext(1)) == 2);

        const PrimeContext ctx(21);
        CHECK(ctx.n() == 21);
        CHECK(ctx.largest() == 73);
        CHECK(ctx.primorial() == mpz_class("40729680599249024150621323470"));
        CHECK(PrimeContext(4).primorial() == 210);
    }

    TEST_CASE("assignment validation")
    {
        const PrimeContext ctx(3);
        auto assignment = empty_assignment(ctx, ProblemKind::Paired, 10);
        CHECK_NOTHROW(assignment.validate(ctx));

        assignment.classes[1] = {0, 2};
        CHECK_NOTHROW(assignment.validate(ctx));

        auto out_of_range = assignment;
        out_of_range.classes[2] = {5};
        CHECK_THROWS_AS(out_of_range.validate(ctx), InputError);

        auto too_many = assignment;
        too_many.classes[0] = {0, 1};
        CHECK_THROWS_AS(too_many.validate(ctx), InputError);

        auto classic = assignment;
        classic.kind = ProblemKind::Classic;
        CHECK_THROWS_AS(classic.validate(ctx), InputError);

        auto duplicate = assignment;
        duplicate.classes[2] = {1, 1};
        CHECK_THROWS_AS(duplicate.validate(ctx), InputError);

        auto wrong_size = assignment;
        wrong_size.classes.pop_back();
        CHECK_THROWS_AS(wrong_size.validate(ctx), InputError);
    }
}
