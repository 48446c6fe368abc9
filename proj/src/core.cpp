#include "hommel/core.hpp"

#include <algorithm>
#include <utility>

#include "hommel/errors.hpp"

namespace hommel {

PValueStudy make_study(std::vector<double> raw) {
    if (raw.empty()) throw EmptyInput();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const double value = raw[i];
        if (!(value >= 0.0 && value <= 1.0))  // also catches NaN
            throw InvalidPValue(i + 1, value);
    }

    const std::size_t m = raw.size();
    std::vector<std::pair<double, std::size_t>> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = {raw[i], i};
    // pair comparison breaks value ties by original position = stable sort
    std::sort(order.begin(), order.end());

    PValueStudy study;
    study.sorted.resize(m);
    study.perm.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        study.sorted[k] = order[k].first;
        study.perm[k] = order[k].second;
    }
    study.raw = std::move(raw);
    return study;
}

StepWeights make_step_weights(WeightKind kind, std::size_t m) {
    if (m == 0) throw ZeroSize();
    StepWeights weights;
    weights.kind = kind;
    weights.m = m;
    weights.s.resize(m + 2);
    weights.s[0] = 0.0;
    if (kind == WeightKind::simes) {
        for (std::size_t k = 1; k <= m; ++k)
            weights.s[k] = static_cast<double>(k);
    } else {
        double harmonic = 0.0;
        for (std::size_t k = 1; k <= m; ++k) {
            harmonic += 1.0 / static_cast<double>(k);
            weights.s[k] = static_cast<double>(k) * harmonic;
        }
    }
    weights.s[m + 1] = weights.s[m];
    return weights;
}

bool local_test_rejects(const std::vector<std::size_t>& subset,
                        const PValueStudy& study,
                        const StepWeights& weights,
                        double alpha) {
    if (subset.empty()) throw EmptySubset();
    if (alpha >= 1.0) return true;  // everything is rejected at level 1

    std::vector<std::size_t> members(subset);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.front() < 1 || members.back() > study.size())
        throw Error("subset index outside 1.." + std::to_string(study.size()));

    std::vector<double> values;
    values.reserve(members.size());
    for (std::size_t index : members) values.push_back(study.raw[index - 1]);
    std::sort(values.begin(), values.end());

    const std::size_t n = values.size();
    if (n > weights.m)
        throw Error("step weights built for m = " + std::to_string(weights.m) +
                    " cannot test a subset of size " + std::to_string(n));
    const double step = weights.s[n];
    for (std::size_t i = 1; i <= n; ++i)
        if (step * values[i - 1] <= static_cast<double>(i) * alpha) return true;
    return false;
}

}  // namespace hommel
