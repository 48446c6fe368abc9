#include "hommel/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "hommel/errors.hpp"

namespace hommel {

RejectionSet closed_testing_oracle(const PValueStudy& study,
                                   const StepWeights& weights,
                                   double alpha) {
    const std::size_t m = study.size();
    if (m > kOracleMaxM) throw TooLarge(m, kOracleMaxM);
    if (weights.m != m)
        throw Error("step weights built for m = " + std::to_string(weights.m) +
                    " do not match a study of size " + std::to_string(m));

    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<char> survives(m, 0);
    std::vector<double> values(m);

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        // subset p-values in ascending order, read off the study's sorted view
        std::size_t n = 0;
        for (std::size_t rank = 0; rank < m; ++rank)
            if (mask >> study.perm[rank] & 1u) values[n++] = study.sorted[rank];

        bool rejected = alpha >= 1.0;
        if (!rejected) {
            const double step = weights.s[n];
            for (std::size_t i = 1; i <= n; ++i) {
                if (step * values[i - 1] <= static_cast<double>(i) * alpha) {
                    rejected = true;
                    break;
                }
            }
        }
        if (!rejected) {
            // every member survives: some subset containing it is not rejected
            for (std::size_t pos = 0; pos < m; ++pos)
                if (mask >> pos & 1u) survives[pos] = 1;
        }
    }

    RejectionSet set;
    set.alpha = alpha;
    for (std::size_t pos = 0; pos < m; ++pos)
        if (!survives[pos]) set.indices.push_back(pos + 1);
    return set;
}

CriticalSchedule naive_column_minima(const PValueStudy& study,
                                     const StepWeights& weights,
                                     JumpTrace* trace,
                                     std::size_t max_m) {
    const std::size_t m = study.size();
    if (m > max_m) throw TooLarge(m, max_m);
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
    for (std::size_t col = 1; col <= m; ++col) {
        std::size_t best_row = col;
        double best = p[col - 1] / 1.0;
        ++cells;
        for (std::size_t row = col + 1; row <= m; ++row) {
            const double value = p[row - 1] / static_cast<double>(row - col + 1);
            ++cells;
            if (value < best) {
                best = value;
                best_row = row;
            }
        }
        const std::size_t size = m - col + 1;
        double level = weights.s[size] * best;
        if (level > 1.0) level = 1.0;
        schedule.alpha_star[size - 1] = level;
        if (trace) trace->min_row[size - 1] = best_row;
    }

    if (trace) trace->cell_evaluations = cells;
    schedule.alpha = cummax_alpha(schedule.alpha_star);
    return schedule;
}

AdjustmentResult quadratic_hommel_adjust(const PValueStudy& study,
                                         const StepWeights& weights,
                                         std::size_t max_m) {
    const std::size_t m = study.size();
    if (m > max_m) throw TooLarge(m, max_m);
    const CriticalSchedule schedule = naive_column_minima(study, weights, nullptr, max_m);
    const std::vector<double>& s = weights.s;
    const std::vector<double>& alpha = schedule.alpha;

    std::vector<double> adjusted_sorted(m);
    for (std::size_t rank = 0; rank < m; ++rank) {
        const double p = study.sorted[rank];

        // rejected_at(level) is monotone in level: once true, true above.
        const auto rejected_at = [&](double level) {
            return s[h_at(schedule, level)] * p <= level;
        };

        // Candidates s_j * p are weakly increasing in j; restrict to <= 1.
        std::size_t lo = 0, hi = m;
        while (lo < hi) {
            const std::size_t mid = (lo + hi + 1) / 2;
            if (s[mid] * p <= 1.0) lo = mid; else hi = mid - 1;
        }
        const std::size_t last_in_range = lo;
        lo = 0;
        hi = last_in_range + 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (rejected_at(s[mid] * p)) hi = mid; else lo = mid + 1;
        }
        double candidate = std::numeric_limits<double>::infinity();
        if (lo <= last_in_range) candidate = s[lo] * p;

        // Candidates alpha_1..alpha_m are weakly decreasing; the ones at
        // which rejection holds form a prefix, and the last of them is the
        // smallest such level.
        lo = 0;
        hi = m;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (rejected_at(alpha[mid])) lo = mid + 1; else hi = mid;
        }
        if (lo > 0) candidate = std::min(candidate, alpha[lo - 1]);

        if (!(candidate <= 1.0))
            throw Error("internal: no rejection level found for p = " + format_double(p));
        adjusted_sorted[rank] = candidate;
    }

    AdjustmentResult result;
    result.method = weights.kind == WeightKind::simes ? AdjustMethod::hommel_simes
                                                      : AdjustMethod::hommel_robust;
    result.adjusted.resize(m);
    for (std::size_t rank = 0; rank < m; ++rank)
        result.adjusted[study.perm[rank]] = adjusted_sorted[rank];
    return result;
}

}  // namespace hommel
