#include "hommel/adjust.hpp"

#include <algorithm>

#include "hommel/errors.hpp"
#include "hommel/jumps.hpp"

namespace hommel {

namespace {

void check_consistent(const PValueStudy& study, const CriticalSchedule& schedule,
                      const StepWeights& weights) {
    if (schedule.m != study.size() || weights.m != study.size())
        throw Error("schedule/weights do not match the study size");
    if (schedule.weights_kind != weights.kind)
        throw Error("schedule was built with " + to_string(schedule.weights_kind) +
                    " weights, got " + to_string(weights.kind));
}

}  // namespace

AdjustmentResult adjust_hommel(const PValueStudy& study,
                               const CriticalSchedule& schedule,
                               const StepWeights& weights,
                               std::uint64_t* sweep_steps) {
    check_consistent(study, schedule, weights);
    const std::size_t m = study.size();
    const std::vector<double>& p = study.sorted;
    const std::vector<double>& s = weights.s;
    const std::vector<double>& alpha = schedule.alpha;  // alpha[j-1] = alpha_j

    // Two-pointer sweep: p is increasing, so the largest feasible j can
    // only move down as i moves up. j never drops below 1 because
    // s_0 * p = 0 <= alpha_1 always holds.
    std::vector<double> adjusted_sorted(m);
    std::uint64_t steps = 0;
    std::size_t i = 1;
    std::size_t j = m + 1;
    while (i <= m) {
        ++steps;
        if (s[j - 1] * p[i - 1] <= alpha[j - 1]) {
            const double adjusted = std::min(s[j] * p[i - 1], alpha[j - 1]);
            adjusted_sorted[i - 1] = std::min(adjusted, 1.0);
            ++i;
        } else {
            --j;
        }
    }
    if (sweep_steps) *sweep_steps = steps;

    AdjustmentResult result;
    result.method = weights.kind == WeightKind::simes ? AdjustMethod::hommel_simes
                                                      : AdjustMethod::hommel_robust;
    result.adjusted.resize(m);
    for (std::size_t rank = 0; rank < m; ++rank)
        result.adjusted[study.perm[rank]] = adjusted_sorted[rank];
    return result;
}

RejectionSet reject_hommel_at(const PValueStudy& study,
                              const CriticalSchedule& schedule,
                              const StepWeights& weights,
                              double alpha) {
    check_consistent(study, schedule, weights);
    const double step = weights.s[h_at(schedule, alpha)];
    RejectionSet set;
    set.alpha = alpha;
    for (std::size_t i = 0; i < study.size(); ++i)
        if (step * study.raw[i] <= alpha) set.indices.push_back(i + 1);
    return set;
}

AdjustmentResult adjust_hochberg(const PValueStudy& study) {
    const std::size_t m = study.size();
    const std::vector<double>& p = study.sorted;

    std::vector<double> adjusted_sorted(m);
    double running = 1.0;  // clamp at 1 folded into the suffix minimum
    for (std::size_t rank = m; rank-- > 0;) {
        const double value = static_cast<double>(m - rank) * p[rank];
        running = std::min(running, value);
        adjusted_sorted[rank] = running;
    }

    AdjustmentResult result;
    result.method = AdjustMethod::hochberg;
    result.adjusted.resize(m);
    for (std::size_t rank = 0; rank < m; ++rank)
        result.adjusted[study.perm[rank]] = adjusted_sorted[rank];
    return result;
}

RejectionSet reject_hochberg_at(const PValueStudy& study, double alpha) {
    const AdjustmentResult result = adjust_hochberg(study);
    RejectionSet set;
    set.alpha = alpha;
    for (std::size_t i = 0; i < result.adjusted.size(); ++i)
        if (result.adjusted[i] <= alpha) set.indices.push_back(i + 1);
    return set;
}

}  // namespace hommel
