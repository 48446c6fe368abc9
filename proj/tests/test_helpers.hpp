#ifndef HOMMEL_TEST_HELPERS_HPP
#define HOMMEL_TEST_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace test_helpers {

inline double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

enum class Law { uniform, squared, tie_heavy };

// discrete support with exact 0 and 1 and values that tie often
inline const std::vector<double>& discrete_support() {
    static const std::vector<double> support = {0.0, 0.01, 0.02, 0.05,
                                                0.2, 0.5,  0.8,  1.0};
    return support;
}

inline std::vector<double> random_pvalues(std::mt19937_64& engine, std::size_t m,
                                          Law law) {
    std::vector<double> values(m);
    for (double& value : values) {
        switch (law) {
            case Law::uniform:
                value = uniform01(engine);
                break;
            case Law::squared: {
                const double u = uniform01(engine);
                value = u * u;
                break;
            }
            case Law::tie_heavy:
                value = discrete_support()[engine() % discrete_support().size()];
                break;
        }
    }
    return values;
}

inline Law law_for(std::size_t instance) {
    switch (instance % 3) {
        case 0: return Law::uniform;
        case 1: return Law::squared;
        default: return Law::tie_heavy;
    }
}

// evenly spaced levels 0, 1/(points-1), ..., 1
inline std::vector<double> alpha_grid(std::size_t points) {
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = static_cast<double>(i) / static_cast<double>(points - 1);
    return grid;
}

}  // namespace test_helpers

#endif  // HOMMEL_TEST_HELPERS_HPP
