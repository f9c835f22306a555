#include "cover_solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "jacobsthal/eval.hpp"

namespace jacobsthal::detail {

namespace {

constexpr unsigned kWordBits = 64;
constexpr std::uint64_t kStopPollMask = 1023;
constexpr std::uint64_t kReportBatch = 4096;

} // namespace

CoverTables::CoverTables(const PrimeContext& context, ProblemKind problem_kind, std::uint32_t interval_length)
    : ctx(&context)
    , kind(problem_kind)
    , length(interval_length)
    , words((interval_length + kWordBits - 1) / kWordBits)
    , primes(context.primes())
    , class_total(0)
{
    if (length == 0)
        throw ContractViolation("feasibility needs a positive interval length");

    for (auto p : primes) {
        initial_slots.push_back(static_cast<std::uint8_t>(slots_for_prime(kind, p)));
        class_offset.push_back(class_total);
        class_total += p;
    }

    masks.assign(class_total * words, 0);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto p = primes[i];
        for (std::uint32_t q = 1; q <= length; ++q) {
            Word* m = masks.data() + (class_offset[i] + q % p) * words;
            m[(q - 1) / kWordBits] |= Word{1} << ((q - 1) % kWordBits);
        }
    }

    padding.assign(words, 0);
    if (length % kWordBits != 0)
        padding.back() = ~Word{0} << (length % kWordBits);
}

CoverSolver::CoverSolver(std::shared_ptr<const CoverTables> tables, unsigned leading_primes, bool check_invariants)
    : tables_(std::move(tables))
    , leading_primes_(std::min<unsigned>(leading_primes, static_cast<unsigned>(tables_->primes.size())))
    , check_invariants_(check_invariants)
{
    // A skipped leading prime costs a level without using a slot.
    std::size_t max_depth = 2 + leading_primes_;
    for (auto s : tables_->initial_slots)
        max_depth += s;
    covered_.assign(max_depth * tables_->words, 0);
    slots_ = tables_->initial_slots;
    flags_.assign(tables_->class_total, Free);
}

NodeSnapshot CoverSolver::root() const
{
    NodeSnapshot node;
    node.covered = tables_->padding;
    node.slots = tables_->initial_slots;
    node.flags.assign(tables_->class_total, Free);
    node.next_leading = 0;
    return node;
}

void CoverSolver::load(const NodeSnapshot& node)
{
    std::copy(node.covered.begin(), node.covered.end(), covered_at(0));
    slots_ = node.slots;
    flags_ = node.flags;
    next_leading_ = node.next_leading;
    stopped_ = false;
}

NodeSnapshot CoverSolver::snapshot(unsigned depth) const
{
    NodeSnapshot node;
    node.covered.assign(covered_at(depth), covered_at(depth) + tables_->words);
    node.slots = slots_;
    node.flags = flags_;
    node.next_leading = next_leading_;
    return node;
}

bool CoverSolver::solve(const NodeSnapshot& start, const std::atomic<bool>* stop)
{
    load(start);
    stop_ = stop;
    collected_ = nullptr;
    const bool found = expand(0);
    flush_nodes();
    stop_ = nullptr;
    return found;
}

bool CoverSolver::collect(const NodeSnapshot& start, unsigned depth, std::vector<NodeSnapshot>& out)
{
    load(start);
    stop_ = nullptr;
    collected_ = &out;
    collect_depth_ = depth;
    const bool found = expand(0);
    collected_ = nullptr;
    flush_nodes();
    return found;
}

void CoverSolver::flush_nodes() noexcept
{
    if (node_sink_ != nullptr) {
        node_sink_->fetch_add(stats_.nodes - reported_nodes_, std::memory_order_relaxed);
        reported_nodes_ = stats_.nodes;
    }
}

std::uint32_t CoverSolver::uncovered_in(const Word* covered, std::size_t prime, std::uint32_t residue) const noexcept
{
    const Word* m = tables_->mask(prime, residue);
    std::uint32_t total = 0;
    for (std::size_t w = 0; w < tables_->words; ++w)
        total += static_cast<std::uint32_t>(std::popcount(m[w] & ~covered[w]));
    return total;
}

bool CoverSolver::expand(unsigned depth)
{
    ++stats_.nodes;
    if ((stats_.nodes & kStopPollMask) == 0) {
        if (stop_ != nullptr && stop_->load(std::memory_order_relaxed))
            stopped_ = true;
        if (stats_.nodes - reported_nodes_ >= kReportBatch)
            flush_nodes();
    }
    if (stopped_)
        return false;
    if (check_invariants_)
        check_node(depth);

    const Word* covered = covered_at(depth);
    std::uint32_t uncovered = 0;
    std::uint32_t leftmost = 0;
    for (std::size_t w = 0; w < tables_->words; ++w) {
        const Word open = ~covered[w];
        if (open != 0 && leftmost == 0)
            leftmost = static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(open) + 1);
        uncovered += static_cast<std::uint32_t>(std::popcount(open));
    }
    if (uncovered == 0) {
        record_solution();
        return true;
    }
    if (collected_ != nullptr && depth == collect_depth_) {
        collected_->push_back(snapshot(depth));
        return false;
    }
    if (prune(depth, uncovered, leftmost))
        return false;

    if (next_leading_ < leading_primes_)
        return branch_leading(depth);
    return branch_position(depth, leftmost);
}

bool CoverSolver::prune(unsigned depth, std::uint32_t uncovered, std::uint32_t leftmost)
{
    const auto& primes = tables_->primes;

    // Everything left of `leftmost` is already covered, so only the suffix
    // window counts.
    const std::uint64_t window = tables_->length - leftmost + 1;
    std::uint64_t reach = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (slots_[i] != 0)
            reach += capacity(primes[i], slots_[i], window);
    if (reach < uncovered) {
        ++stats_.pruned_by_capacity;
        return true;
    }

    // Per prime, the best `slots` still-allowed classes measured on the
    // positions that are actually open.
    const Word* covered = covered_at(depth);
    std::uint64_t bound = 0;
    for (std::size_t i = 0; i < primes.size() && bound < uncovered; ++i) {
        if (slots_[i] == 0)
            continue;
        std::uint32_t best = 0, second = 0;
        const std::size_t base = tables_->class_offset[i];
        for (std::uint32_t r = 0; r < primes[i]; ++r) {
            if (flags_[base + r] != Free)
                continue;
            const auto c = uncovered_in(covered, i, r);
            if (c > best) {
                second = best;
                best = c;
            } else if (c > second) {
                second = c;
            }
        }
        bound += best + (slots_[i] > 1 ? second : 0);
    }
    if (bound < uncovered) {
        ++stats_.pruned_by_class_count;
        return true;
    }
    return false;
}

bool CoverSolver::branch_leading(unsigned depth)
{
    const std::size_t i = next_leading_;
    const auto p = tables_->primes[i];
    const Word* covered = covered_at(depth);
    Word* next = covered_at(depth + 1);
    const std::size_t words = tables_->words;

    std::vector<std::uint32_t> useful;
    for (std::uint32_t r = 0; r < p; ++r)
        if (flag(i, r) == Free && uncovered_in(covered, i, r) > 0)
            useful.push_back(r);

    const std::uint8_t saved_slots = slots_[i];
    ++next_leading_;
    bool found = false;

    auto try_classes = [&](std::uint32_t first, std::optional<std::uint32_t> second) {
        const Word* m1 = tables_->mask(i, first);
        const Word* m2 = second ? tables_->mask(i, *second) : nullptr;
        for (std::size_t w = 0; w < words; ++w)
            next[w] = covered[w] | m1[w] | (m2 ? m2[w] : 0);
        flag(i, first) = Chosen;
        if (second)
            flag(i, *second) = Chosen;
        slots_[i] = static_cast<std::uint8_t>(saved_slots - (second ? 2 : 1));
        found = expand(depth + 1);
        flag(i, first) = Free;
        if (second)
            flag(i, *second) = Free;
        slots_[i] = saved_slots;
    };

    if (useful.empty()) {
        // No class of this prime reaches an open position.
        std::copy(covered, covered + words, next);
        slots_[i] = 0;
        found = expand(depth + 1);
        slots_[i] = saved_slots;
    } else if (saved_slots == 1 || useful.size() == 1) {
        for (std::size_t x = 0; x < useful.size() && !found; ++x)
            try_classes(useful[x], std::nullopt);
    } else {
        // Adding a class never uncovers anything, so both slots get used.
        for (std::size_t x = 0; x < useful.size() && !found; ++x)
            for (std::size_t y = x + 1; y < useful.size() && !found; ++y)
                try_classes(useful[x], useful[y]);
    }

    --next_leading_;
    return found;
}

bool CoverSolver::branch_position(unsigned depth, std::uint32_t leftmost)
{
    const auto& primes = tables_->primes;
    const Word* covered = covered_at(depth);
    Word* next = covered_at(depth + 1);
    const std::size_t words = tables_->words;

    // Some chosen class must contain `leftmost`, and modulo p_i only the
    // class leftmost mod p_i does. Siblings after the i-th exclude that class.
    std::array<std::size_t, kMaxPrimeCount> forbidden;
    std::size_t forbidden_count = 0;
    bool found = false;
    for (std::size_t i = 0; i < primes.size() && !found; ++i) {
        if (slots_[i] == 0)
            continue;
        const std::uint32_t r = leftmost % primes[i];
        auto& f = flag(i, r);
        if (f != Free)
            continue;

        const Word* m = tables_->mask(i, r);
        for (std::size_t w = 0; w < words; ++w)
            next[w] = covered[w] | m[w];
        f = Chosen;
        --slots_[i];
        found = expand(depth + 1);
        ++slots_[i];
        f = Forbidden;
        forbidden[forbidden_count++] = tables_->class_offset[i] + r;
    }
    for (std::size_t x = 0; x < forbidden_count; ++x)
        flags_[forbidden[x]] = Free;
    return found;
}

void CoverSolver::record_solution()
{
    ResidueAssignment assignment = empty_assignment(*tables_->ctx, tables_->kind, tables_->length);
    for (std::size_t i = 0; i < tables_->primes.size(); ++i)
        for (std::uint32_t r = 0; r < tables_->primes[i]; ++r)
            if (flags_[tables_->class_offset[i] + r] == Chosen)
                assignment.classes[i].push_back(r);
    solution_ = std::move(assignment);
}

void CoverSolver::check_node(unsigned depth) const
{
    ResidueAssignment partial = empty_assignment(*tables_->ctx, tables_->kind, tables_->length);
    for (std::size_t i = 0; i < tables_->primes.size(); ++i) {
        for (std::uint32_t r = 0; r < tables_->primes[i]; ++r)
            if (flags_[tables_->class_offset[i] + r] == Chosen)
                partial.classes[i].push_back(r);
        if (partial.classes[i].size() + slots_[i] > tables_->initial_slots[i])
            throw ContractViolation("slot accounting broken for prime " + std::to_string(tables_->primes[i]));
    }

    const CoverageMask expected = cover(partial, *tables_->ctx);
    const Word* covered = covered_at(depth);
    for (std::uint32_t q = 1; q <= tables_->length; ++q) {
        const bool bit = (covered[(q - 1) / kWordBits] >> ((q - 1) % kWordBits)) & 1u;
        if (bit != expected.test(q))
            throw ContractViolation("incremental coverage disagrees with cover() at q = " + std::to_string(q));
    }
}

} // namespace jacobsthal::detail
