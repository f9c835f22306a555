#include "jacobsthal/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>

#include "cover_solver.hpp"
#include "jacobsthal/eval.hpp"

namespace jacobsthal {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kFrontierPerWorker = 64;
constexpr unsigned kMaxFrontierDepth = 12;

std::chrono::milliseconds elapsed_since(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

// Splits the tree into independent subtrees and lets workers drain them.
// The first full cover stops everyone.
std::optional<ResidueAssignment> parallel_feasible(detail::CoverSolver& seed, std::shared_ptr<const detail::CoverTables> tables,
                                                   const SearchOptions& options, unsigned workers,
                                                   std::atomic<std::uint64_t>* node_sink, SearchStats& stats)
{
    const std::size_t target = kFrontierPerWorker * workers;
    std::vector<detail::NodeSnapshot> frontier;
    bool settled = false;
    for (unsigned depth = 1; depth <= kMaxFrontierDepth && !settled; ++depth) {
        frontier.clear();
        settled = seed.collect(seed.root(), depth, frontier) || frontier.empty() || frontier.size() >= target;
    }
    stats += seed.stats();
    if (seed.solution())
        return seed.solution();
    if (frontier.empty())
        return std::nullopt;

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex result_mutex;
    std::optional<ResidueAssignment> result;
    std::vector<SearchStats> worker_stats(workers);

    auto work = [&](unsigned id) {
        detail::CoverSolver solver(tables, options.leading_primes, options.check_invariants);
        solver.report_nodes_to(node_sink);
        for (std::size_t index = next++; index < frontier.size() && !stop.load(); index = next++) {
            if (solver.solve(frontier[index], &stop)) {
                std::lock_guard lock(result_mutex);
                if (!result)
                    result = solver.solution();
                stop = true;
            }
        }
        worker_stats[id] = solver.stats();
    };

    std::vector<std::jthread> threads;
    for (unsigned id = 1; id < workers; ++id)
        threads.emplace_back(work, id);
    work(0);
    threads.clear();

    for (const auto& s : worker_stats)
        stats += s;
    return result;
}

// Calls options.on_progress at a fixed interval until stopped or destroyed.
class ProgressReporter {
public:
    ProgressReporter(const SearchOptions& options, std::function<Progress()> sample)
    {
        if (!options.on_progress)
            return;
        thread_ = std::jthread([this, &options, sample = std::move(sample)] {
            std::unique_lock lock(mutex_);
            while (!cv_.wait_for(lock, options.progress_interval, [this] { return done_; }))
                options.on_progress(sample());
        });
    }
    ProgressReporter(const ProgressReporter&) = delete;
    ProgressReporter& operator=(const ProgressReporter&) = delete;
    ~ProgressReporter() { stop(); }

    void stop()
    {
        {
            std::lock_guard lock(mutex_);
            done_ = true;
        }
        cv_.notify_all();
        if (thread_.joinable())
            thread_.join();
    }

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    bool done_ = false;
    std::jthread thread_;
};

} // namespace

unsigned resolve_workers(unsigned requested) noexcept
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::optional<ResidueAssignment> feasible_impl(std::uint32_t length, const PrimeContext& ctx, ProblemKind kind,
                                               const SearchOptions& options, SearchStats* stats,
                                               std::atomic<std::uint64_t>* node_sink)
{
    const auto start = Clock::now();
    auto tables = std::make_shared<const detail::CoverTables>(ctx, kind, length);
    detail::CoverSolver seed(tables, options.leading_primes, options.check_invariants);
    seed.report_nodes_to(node_sink);

    SearchStats local;
    local.feasibility_calls = 1;
    std::optional<ResidueAssignment> result;
    const unsigned workers = resolve_workers(options.workers);
    if (workers <= 1) {
        if (seed.solve(seed.root()))
            result = seed.solution();
        local += seed.stats();
    } else {
        result = parallel_feasible(seed, tables, options, workers, node_sink, local);
    }
    local.wall_time = elapsed_since(start);
    if (stats != nullptr)
        *stats += local;
    return result;
}

} // namespace

std::optional<ResidueAssignment> feasible(std::uint32_t length, const PrimeContext& ctx, ProblemKind kind,
                                          const SearchOptions& options, SearchStats* stats)
{
    return feasible_impl(length, ctx, kind, options, stats, nullptr);
}

namespace {

// One greedy pass on {1..length}; nullopt if the slots run out first.
std::optional<ResidueAssignment> greedy_cover(const PrimeContext& ctx, ProblemKind kind, std::uint32_t length)
{
    const auto& primes = ctx.primes();
    std::vector<char> covered(length + 1, 0);
    std::uint32_t open = length;
    ResidueAssignment assignment = empty_assignment(ctx, kind, length);

    std::vector<unsigned> slots;
    for (auto p : primes)
        slots.push_back(slots_for_prime(kind, p));

    while (open > 0) {
        std::size_t best_prime = 0;
        std::uint32_t best_residue = 0;
        std::uint32_t best_count = 0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (slots[i] == 0)
                continue;
            const auto p = primes[i];
            const auto& taken = assignment.classes[i];
            for (std::uint32_t r = 0; r < p; ++r) {
                if (std::find(taken.begin(), taken.end(), r) != taken.end())
                    continue;
                std::uint32_t count = 0;
                for (std::uint32_t q = r == 0 ? p : r; q <= length; q += p)
                    count += covered[q] == 0;
                // Strict comparison keeps the smallest prime index, then residue.
                if (count > best_count) {
                    best_count = count;
                    best_prime = i;
                    best_residue = r;
                }
            }
        }
        if (best_count == 0)
            return std::nullopt;

        const auto p = primes[best_prime];
        for (std::uint32_t q = best_residue == 0 ? p : best_residue; q <= length; q += p) {
            open -= covered[q] == 0;
            covered[q] = 1;
        }
        assignment.classes[best_prime].push_back(best_residue);
        --slots[best_prime];
    }
    for (auto& set : assignment.classes)
        std::sort(set.begin(), set.end());
    return assignment;
}

} // namespace

GreedyBound greedy_lower_bound(const PrimeContext& ctx, ProblemKind kind)
{
    GreedyBound result;
    for (std::uint32_t length = 1;; ++length) {
        auto assignment = greedy_cover(ctx, kind, length);
        if (!assignment)
            break;
        result.length = length;
        result.assignment = std::move(*assignment);
    }
    return result;
}

ResidueAssignment extend_to_covered_prefix(ResidueAssignment assignment, const PrimeContext& ctx)
{
    std::uint32_t probe = std::max<std::uint32_t>(64, 2 * assignment.length);
    for (;;) {
        ResidueAssignment wide = assignment;
        wide.length = probe;
        const auto gap = cover(wide, ctx).first_unset();
        if (gap) {
            assignment.length = *gap - 1;
            return assignment;
        }
        probe *= 2;
    }
}

ComputationResult compute_h(const PrimeContext& ctx, ProblemKind kind, const SearchOptions& options)
{
    const auto start = Clock::now();
    ComputationResult result;
    result.kind = kind;
    result.n = ctx.n();
    result.p_n = ctx.largest();
    result.bound = bound_value(ctx);

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint32_t> current_length{0};
    ProgressReporter reporter(options, [&] { return Progress{current_length.load(), nodes.load(), elapsed_since(start)}; });

    auto greedy = greedy_lower_bound(ctx, kind);
    ResidueAssignment best = extend_to_covered_prefix(std::move(greedy.assignment), ctx);
    SearchStats stats;
    for (;;) {
        current_length = best.length + 1;
        auto found = feasible_impl(best.length + 1, ctx, kind, options, &stats, &nodes);
        if (!found)
            break;
        best = extend_to_covered_prefix(std::move(*found), ctx);
    }
    result.h = std::uint64_t{best.length} + 1;

    if (options.canonical) {
        SearchOptions single = options;
        single.workers = 1;
        auto rerun = feasible_impl(best.length, ctx, kind, single, &stats, &nodes);
        if (!rerun)
            throw InvariantBreach("canonical re-run found no cover of length " + std::to_string(best.length));
        best = std::move(*rerun);
    }

    reporter.stop();

    result.witness = crt_reconstruct(best, ctx);
    if (auto q = first_coprime_position(result.witness, ctx))
        throw InvariantBreach("witness for n = " + std::to_string(ctx.n()) + " fails at q = " + std::to_string(*q));
    result.bound_ok = result.h < result.bound;
    stats.wall_time = elapsed_since(start);
    result.stats = stats;
    return result;
}

} // namespace jacobsthal
