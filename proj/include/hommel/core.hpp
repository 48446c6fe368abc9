#ifndef HOMMEL_CORE_HPP
#define HOMMEL_CORE_HPP

#include <cstddef>
#include <vector>

#include "hommel/types.hpp"

namespace hommel {

/// Validate raw p-values and build the sorted view. The sort is stable:
/// tied values keep their input order. Throws EmptyInput / InvalidPValue.
PValueStudy make_study(std::vector<double> raw);

/// Build s_0..s_{m+1} for the requested test family in one forward pass:
/// simes s_k = k, robust s_k = k * (1 + 1/2 + ... + 1/k). Throws ZeroSize.
StepWeights make_step_weights(WeightKind kind, std::size_t m);

/// Local test on a subset of hypotheses (1-based original indices, treated
/// as a set): rejects iff the i-th smallest p-value p(i) within the subset
/// satisfies s_{|I|} * p(i) <= i * alpha for some i. Rejects everything at
/// alpha = 1. Throws EmptySubset.
bool local_test_rejects(const std::vector<std::size_t>& subset,
                        const PValueStudy& study,
                        const StepWeights& weights,
                        double alpha);

}  // namespace hommel

#endif  // HOMMEL_CORE_HPP
