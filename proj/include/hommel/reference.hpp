#ifndef HOMMEL_REFERENCE_HPP
#define HOMMEL_REFERENCE_HPP

#include <cstddef>

#include "hommel/jumps.hpp"
#include "hommel/types.hpp"

namespace hommel {

// Slow, obviously-correct reference paths. These are the ground truth the
// fast implementations are tested against; keep them independent of the
// code paths they check.

inline constexpr std::size_t kOracleMaxM = 20;
inline constexpr std::size_t kQuadraticGuard = 100000;

/// Full closed testing by enumeration of all 2^m - 1 non-empty subsets:
/// a hypothesis is rejected iff every subset containing it is rejected by
/// the local test. Throws TooLarge above m = 20.
RejectionSet closed_testing_oracle(const PValueStudy& study,
                                   const StepWeights& weights,
                                   double alpha);

/// Quadratic reference for the jump levels: evaluates every cell of the
/// implicit matrix, column by column. Same division expression, same
/// comparison, same smallest-row tie-break as find_jumps, so the outputs
/// agree bit for bit. Throws TooLarge above max_m.
CriticalSchedule naive_column_minima(const PValueStudy& study,
                                     const StepWeights& weights,
                                     JumpTrace* trace = nullptr,
                                     std::size_t max_m = kQuadraticGuard);

/// Adjusted p-values by direct minimization: the smallest level in the
/// candidate set { s_j * p_i } U { alpha_j } at which the hypothesis is
/// rejected, using the quadratic schedule. Independent of the linear-time
/// sweep. Throws TooLarge above max_m.
AdjustmentResult quadratic_hommel_adjust(const PValueStudy& study,
                                         const StepWeights& weights,
                                         std::size_t max_m = kQuadraticGuard);

}  // namespace hommel

#endif  // HOMMEL_REFERENCE_HPP
