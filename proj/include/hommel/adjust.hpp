#ifndef HOMMEL_ADJUST_HPP
#define HOMMEL_ADJUST_HPP

#include <cstdint>

#include "hommel/types.hpp"

namespace hommel {

/// All adjusted p-values for closed testing with the given weights, in
/// linear time given the schedule. A two-pointer sweep finds, for each
/// sorted p-value, the largest j with s_{j-1} * p <= alpha_j; the adjusted
/// value is then min(s_j * p, alpha_j). Results come back in original
/// input order. sweep_steps, when given, receives the number of sweep
/// iterations (at most 2m + 1).
AdjustmentResult adjust_hommel(const PValueStudy& study,
                               const CriticalSchedule& schedule,
                               const StepWeights& weights,
                               std::uint64_t* sweep_steps = nullptr);

/// Hypotheses rejected by closed testing at level alpha: exactly those
/// with s_{h(alpha)} * p_i <= alpha.
RejectionSet reject_hommel_at(const PValueStudy& study,
                              const CriticalSchedule& schedule,
                              const StepWeights& weights,
                              double alpha);

/// Hochberg step-up adjustment: suffix minima of (m - j + 1) * p_(j) over
/// sorted ranks j, clamped at 1, mapped back to input order.
AdjustmentResult adjust_hochberg(const PValueStudy& study);

/// Hochberg rejections at alpha (adjusted value <= alpha).
RejectionSet reject_hochberg_at(const PValueStudy& study, double alpha);

}  // namespace hommel

#endif  // HOMMEL_ADJUST_HPP
