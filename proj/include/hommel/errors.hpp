#ifndef HOMMEL_ERRORS_HPP
#define HOMMEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hommel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    EmptyInput() : Error("empty p-value input") {}
};

/// An input p-value is NaN, infinite, or outside [0,1].
/// index is 1-based, naming the offending input position.
struct InvalidPValue : Error {
    std::size_t index;
    InvalidPValue(std::size_t index_, double value)
        : Error("p-value at position " + std::to_string(index_) +
                " is not in [0,1]: " + std::to_string(value)),
          index(index_) {}
};

struct ZeroSize : Error {
    ZeroSize() : Error("step weights need m >= 1") {}
};

struct EmptySubset : Error {
    EmptySubset() : Error("local test needs a non-empty subset") {}
};

/// Guard against running an intentionally slow reference path at a size
/// where it would not finish.
struct TooLarge : Error {
    TooLarge(std::size_t m, std::size_t limit)
        : Error("m = " + std::to_string(m) + " exceeds the guard of " +
                std::to_string(limit)) {}
};

struct CapExceeded : Error {
    CapExceeded(std::size_t m, std::size_t cap)
        : Error("hommel-quadratic requested at m = " + std::to_string(m) +
                " above the cap of " + std::to_string(cap) +
                " (raise --quadratic-cap to override)") {}
};

struct InvalidAlpha : Error {
    explicit InvalidAlpha(double alpha)
        : Error("alpha must be in [0,1], got " + std::to_string(alpha)) {}
};

}  // namespace hommel

#endif  // HOMMEL_ERRORS_HPP
