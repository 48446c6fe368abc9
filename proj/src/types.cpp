#include "hommel/types.hpp"

#include <charconv>

#include "hommel/errors.hpp"

namespace hommel {

std::string to_string(WeightKind kind) {
    return kind == WeightKind::simes ? "simes" : "robust";
}

std::string to_string(AdjustMethod method) {
    switch (method) {
        case AdjustMethod::hommel_simes: return "hommel-simes";
        case AdjustMethod::hommel_robust: return "hommel-robust";
        default: return "hochberg";
    }
}

WeightKind parse_weight_kind(const std::string& name) {
    if (name == "simes") return WeightKind::simes;
    if (name == "robust") return WeightKind::robust;
    throw Error("unknown weights kind '" + name + "' (expected simes or robust)");
}

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

}  // namespace hommel
