#include "hommel/jumps.hpp"

#include <algorithm>

#include "hommel/errors.hpp"

namespace hommel {

namespace {

// One block of the column-minima search, 1-based inclusive bounds.
struct Block {
    std::size_t row_lo, row_hi, col_lo, col_hi;
};

}  // namespace

CriticalSchedule find_jumps(const PValueStudy& study,
                            const StepWeights& weights,
                            JumpTrace* trace) {
    const std::size_t m = study.size();
    if (weights.m != m)
        throw Error("step weights built for m = " + std::to_string(weights.m) +
                    " do not match a study of size " + std::to_string(m));

    CriticalSchedule schedule;
    schedule.m = m;
    schedule.weights_kind = weights.kind;
    schedule.alpha_star.assign(m, 0.0);
    if (trace) {
        trace->cell_evaluations = 0;
        trace->min_row.assign(m, 0);
    }

    const std::vector<double>& p = study.sorted;
    std::uint64_t cells = 0;

    // Explicit work stack instead of recursion; depth would be fine at
    // ceil(log2 m) but the stack also keeps huge m trivially safe. Blocks
    // write disjoint alpha_star entries, so processing order is free.
    std::vector<Block> pending;
    pending.push_back({1, m, 1, m});
    while (!pending.empty()) {
        const Block block = pending.back();
        pending.pop_back();

        const std::size_t col = (block.col_lo + block.col_hi) / 2;
        const std::size_t row_start = std::max(block.row_lo, col);
        std::size_t best_row = row_start;
        double best = p[row_start - 1] / static_cast<double>(row_start - col + 1);
        ++cells;
        for (std::size_t row = row_start + 1; row <= block.row_hi; ++row) {
            const double value = p[row - 1] / static_cast<double>(row - col + 1);
            ++cells;
            if (value < best) {  // strict: ties keep the smallest row
                best = value;
                best_row = row;
            }
        }

        const std::size_t size = m - col + 1;  // intersection size behind this column
        double level = weights.s[size] * best;
        if (level > 1.0) level = 1.0;
        schedule.alpha_star[size - 1] = level;
        if (trace) trace->min_row[size - 1] = best_row;

        // Minima left of this column sit in rows <= best_row, minima to the
        // right in rows >= best_row.
        if (col > block.col_lo)
            pending.push_back({block.row_lo, best_row, block.col_lo, col - 1});
        if (col < block.col_hi)
            pending.push_back({best_row, block.row_hi, col + 1, block.col_hi});
    }

    if (trace) trace->cell_evaluations = cells;
    schedule.alpha = cummax_alpha(schedule.alpha_star);
    return schedule;
}

std::vector<double> cummax_alpha(const std::vector<double>& alpha_star) {
    std::vector<double> alpha(alpha_star.size() + 1);
    alpha.back() = 0.0;
    double running = 0.0;
    for (std::size_t i = alpha_star.size(); i-- > 0;) {
        running = std::max(running, alpha_star[i]);
        alpha[i] = running;
    }
    return alpha;
}

std::size_t h_at(const CriticalSchedule& schedule, double alpha) {
    const auto first = schedule.alpha.begin();
    const auto last = first + static_cast<std::ptrdiff_t>(schedule.m);
    const auto it = std::partition_point(
        first, last, [alpha](double level) { return level > alpha; });
    return static_cast<std::size_t>(it - first);
}

}  // namespace hommel
