#include <doctest.h>

#include "jacobsthal/eval.hpp"
#include "jacobsthal/search.hpp"
#include "test_support.hpp"

using namespace jacobsthal;

TEST_SUITE("search")
{
    TEST_CASE("feasible examples")
    {
        const PrimeContext two(2);
        const auto five = feasible(5, two, ProblemKind::Paired);
        REQUIRE(five);
        CHECK(five->length == 5);
        CHECK(is_full_cover(*five, two));
        CHECK(testing::naive_full_cover(*five, two));
        CHECK_FALSE(feasible(6, two, ProblemKind::Paired));

        const PrimeContext one(1);
        const auto single = feasible(1, one, ProblemKind::Classic);
        REQUIRE(single);
        CHECK(single->classes == std::vector<std::vector<std::uint32_t>>{{1}});
        CHECK_FALSE(feasible(2, one, ProblemKind::Classic));
    }

    TEST_CASE("feasible rejects a zero length")
    {
        CHECK_THROWS_AS(feasible(0, PrimeContext(2), ProblemKind::Paired), ContractViolation);
    }

    TEST_CASE("incremental coverage matches cover() at every node")
    {
        SearchOptions checked;
        checked.check_invariants = true;
        const std::uint64_t paired_h[] = {2, 6, 18, 30, 66, 150};
        const std::uint64_t classic_h[] = {2, 4, 6, 10, 14, 22};
        for (unsigned n = 1; n <= 6; ++n) {
            const PrimeContext ctx(n);
            for (auto [kind, h] : {std::pair{ProblemKind::Paired, paired_h[n - 1]},
                                   std::pair{ProblemKind::Classic, classic_h[n - 1]}}) {
                for (unsigned leading : {0u, 2u, 5u}) {
                    checked.leading_primes = leading;
                    CAPTURE(n);
                    CAPTURE(leading);
                    CHECK(feasible(static_cast<std::uint32_t>(h - 1), ctx, kind, checked));
                    CHECK_FALSE(feasible(static_cast<std::uint32_t>(h), ctx, kind, checked));
                }
            }
        }
    }

    TEST_CASE("feasibility is monotone under truncation")
    {
        for (auto kind : {ProblemKind::Classic, ProblemKind::Paired}) {
            for (unsigned n = 1; n <= 7; ++n) {
                const PrimeContext ctx(n);
                const auto h = compute_h(ctx, kind).h;
                for (std::uint32_t length = 2; length < h; length += 1 + length / 16) {
                    auto found = feasible(length, ctx, kind);
                    REQUIRE(found);
                    auto truncated = *found;
                    truncated.length = length - 1;
                    CHECK(is_full_cover(truncated, ctx));
                }
            }
        }
    }

    TEST_CASE("greedy lower bound examples")
    {
        const auto one = greedy_lower_bound(PrimeContext(1), ProblemKind::Paired);
        CHECK(one.length == 1);

        const PrimeContext two(2);
        const auto paired = greedy_lower_bound(two, ProblemKind::Paired);
        CHECK(paired.length >= 3);
        CHECK(paired.length <= 5);
        CHECK(is_full_cover(paired.assignment, two));

        const PrimeContext four(4);
        const auto classic = greedy_lower_bound(four, ProblemKind::Classic);
        CHECK(classic.length <= 9);
        CHECK(is_full_cover(classic.assignment, four));
    }

    TEST_CASE("greedy never beats the exact value")
    {
        for (auto kind : {ProblemKind::Classic, ProblemKind::Paired}) {
            for (unsigned n = 1; n <= 8; ++n) {
                const PrimeContext ctx(n);
                const auto greedy = greedy_lower_bound(ctx, kind);
                CHECK(is_full_cover(greedy.assignment, ctx));
                CHECK(greedy.length + 1 <= compute_h(ctx, kind).h);
            }
        }
    }

    TEST_CASE("extend_to_covered_prefix")
    {
        const PrimeContext two(2);
        auto assignment = empty_assignment(two, ProblemKind::Paired, 2);
        assignment.classes = {{1}, {1, 2}};
        CHECK(extend_to_covered_prefix(assignment, two).length == 5);
        assignment.classes = {{0}, {0, 2}};
        CHECK(extend_to_covered_prefix(assignment, two).length == 0);
    }

    TEST_CASE("compute_h examples")
    {
        const auto first = compute_h(PrimeContext(1), ProblemKind::Paired);
        CHECK(first.h == 2);
        CHECK(first.bound == 2);
        CHECK_FALSE(first.bound_ok);

        const auto sixth = compute_h(PrimeContext(6), ProblemKind::Paired);
        CHECK(sixth.h == 150);
        CHECK(sixth.bound == 156);
        CHECK(sixth.bound_ok);
        CHECK(sixth.p_n == 13);
        CHECK(sixth.witness.length == 149);
        CHECK(verify_witness(sixth.witness, PrimeContext(6)));
        CHECK(sixth.stats.nodes > 0);
        CHECK(sixth.stats.feasibility_calls >= 1);

        SearchOptions options;
        options.workers = 2;
        CHECK(compute_h(PrimeContext(10), ProblemKind::Paired, options).h == 450);
    }

    TEST_CASE("classic values for the first primorials")
    {
        // h(1..4) also come out of the definition sweep in the oracle suite.
        const std::uint64_t expected[] = {2, 4, 6, 10, 14, 22, 26, 34, 40, 46, 58, 66};
        for (unsigned n = 1; n <= 12; ++n)
            CHECK(compute_h(PrimeContext(n), ProblemKind::Classic).h == expected[n - 1]);
    }

    TEST_CASE("worker count does not change the value")
    {
        for (auto kind : {ProblemKind::Classic, ProblemKind::Paired}) {
            for (unsigned n = 1; n <= 7; ++n) {
                const PrimeContext ctx(n);
                SearchOptions options;
                const auto single = compute_h(ctx, kind, options).h;
                for (unsigned workers : {2u, 4u, 8u}) {
                    options.workers = workers;
                    const auto result = compute_h(ctx, kind, options);
                    CHECK(result.h == single);
                    CHECK(verify_witness(result.witness, ctx));
                }
            }
        }
    }

    TEST_CASE("canonical witnesses do not depend on workers")
    {
        const PrimeContext ctx(7);
        SearchOptions options;
        options.canonical = true;
        const auto reference = compute_h(ctx, ProblemKind::Paired, options);
        options.workers = 4;
        const auto parallel = compute_h(ctx, ProblemKind::Paired, options);
        CHECK(parallel.witness.a == reference.witness.a);
        CHECK(parallel.witness.b == reference.witness.b);
        CHECK(parallel.witness.length == reference.witness.length);
    }

    TEST_CASE("progress callback fires during long runs")
    {
        SearchOptions options;
        options.progress_interval = std::chrono::milliseconds(1);
        int calls = 0;
        options.on_progress = [&](const Progress& p) {
            ++calls;
            CHECK(p.length > 0);
        };
        CHECK(compute_h(PrimeContext(8), ProblemKind::Paired, options).h == 258);
        CHECK(calls > 0);
    }

    TEST_CASE("kind dominance and growth")
    {
        std::uint64_t previous_paired = 0, previous_classic = 0;
        for (unsigned n = 1; n <= 8; ++n) {
            const PrimeContext ctx(n);
            const auto paired = compute_h(ctx, ProblemKind::Paired).h;
            const auto classic = compute_h(ctx, ProblemKind::Classic).h;
            CHECK(paired >= classic);
            CHECK(paired > previous_paired);
            CHECK(classic >= previous_classic);
            previous_paired = paired;
            previous_classic = classic;
        }
    }
}
