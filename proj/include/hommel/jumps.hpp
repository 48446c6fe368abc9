#ifndef HOMMEL_JUMPS_HPP
#define HOMMEL_JUMPS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hommel/types.hpp"

namespace hommel {

/// Optional instrumentation shared by the fast and quadratic jump finders:
/// counts cell evaluations of the implicit matrix and records the
/// tie-broken (smallest) minimizing row behind each alpha_star entry.
struct JumpTrace {
    std::uint64_t cell_evaluations = 0;
    std::vector<std::size_t> min_row;  // 1-based sorted-rank rows, per size
};

/// All jump levels of the rejection step function in O(m log m).
///
/// The level for size i is s_i times the minimum of column m-i+1 of the
/// implicit matrix M[row][col] = p_row / (row - col + 1), row >= col, over
/// the sorted p-values. Column minima have weakly increasing row
/// positions, so each column's search can be confined between the
/// minimizing rows of its neighbors: take the middle column of a block,
/// scan its row range, then recurse left (rows at or below the minimizer)
/// and right (rows at or above it). Ties pick the smallest row, which
/// keeps the result bit-identical to the quadratic reference scan.
CriticalSchedule find_jumps(const PValueStudy& study,
                            const StepWeights& weights,
                            JumpTrace* trace = nullptr);

/// Running maximum alpha_i = max_{j >= i} alpha_star[j], computed right to
/// left in one pass, with the 0 sentinel appended one past the end.
std::vector<double> cummax_alpha(const std::vector<double>& alpha_star);

/// Largest intersection size not rejected at level alpha: the number of
/// schedule entries strictly above alpha. Binary search, O(log m).
std::size_t h_at(const CriticalSchedule& schedule, double alpha);

}  // namespace hommel

#endif  // HOMMEL_JUMPS_HPP
