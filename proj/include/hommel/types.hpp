#ifndef HOMMEL_TYPES_HPP
#define HOMMEL_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hommel {

/// Which family of step constants the local test uses.
enum class WeightKind { simes, robust };

enum class AdjustMethod { hommel_simes, hommel_robust, hochberg };

std::string to_string(WeightKind kind);
std::string to_string(AdjustMethod method);
WeightKind parse_weight_kind(const std::string& name);

/// Shortest decimal string that parses back to the identical double.
std::string format_double(double value);

/// A multiple testing problem: raw p-values plus their stable-sorted view.
/// sorted[k] == raw[perm[k]] bit-identically; tied values keep input order.
struct PValueStudy {
    std::vector<double> raw;        // original input order
    std::vector<double> sorted;     // weakly increasing
    std::vector<std::size_t> perm;  // sorted rank -> original position (0-based)

    std::size_t size() const { return raw.size(); }
};

/// Step constants s_0..s_{m+1} of the local test: s[0] = 0, weakly
/// increasing, and s[m+1] repeats s[m] (sentinel used by the adjusted-p
/// sweep, which can step one past m for zero p-values).
struct StepWeights {
    std::vector<double> s;  // length m + 2
    WeightKind kind = WeightKind::simes;
    std::size_t m = 0;
};

/// Critical levels of the rejection step function. alpha_star[i-1] is the
/// lowest level at which the worst-case intersection of size i (the i
/// largest p-values) is rejected, clamped to 1. alpha[i-1] is the running
/// maximum over sizes >= i; alpha[m] = 0 is the one-past-the-end sentinel.
struct CriticalSchedule {
    std::vector<double> alpha_star;  // length m, entries in [0,1]
    std::vector<double> alpha;       // length m + 1, weakly decreasing
    WeightKind weights_kind = WeightKind::simes;
    std::size_t m = 0;
};

/// Adjusted p-values in original input order.
struct AdjustmentResult {
    std::vector<double> adjusted;
    AdjustMethod method = AdjustMethod::hommel_simes;
};

/// Original-order hypothesis indices (1-based, ascending) rejected at a level.
struct RejectionSet {
    std::vector<std::size_t> indices;
    double alpha = 0.0;
};

}  // namespace hommel

#endif  // HOMMEL_TYPES_HPP
