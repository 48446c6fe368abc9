#ifndef HOMMEL_BENCH_HPP
#define HOMMEL_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hommel/reference.hpp"

namespace hommel {

enum class BenchMethod { hommel_fast, hommel_quadratic, hochberg };

std::string to_string(BenchMethod method);
BenchMethod parse_bench_method(const std::string& name);

struct BenchRecord {
    std::size_t m = 0;
    BenchMethod method = BenchMethod::hommel_fast;
    double seconds = 0.0;  // adjustment only, averaged over repetitions
    std::size_t repetitions = 1;
    std::uint64_t seed = 0;
    double gen_seconds = 0.0;  // input generation, kept out of `seconds`
};

/// m draws U^2 with U uniform on [0,1), from a seeded generator whose
/// output depends only on (m, seed).
std::vector<double> gen_squared_uniform(std::size_t m, std::uint64_t seed);

/// Time every (size, method) pair, sizes outermost, methods in declared
/// order. Each repetition generates fresh input (untimed) and times only
/// the adjustment. When hommel-quadratic runs, its adjusted values are
/// checked against hommel-fast on the first repetition before any timing.
/// Throws CapExceeded if hommel-quadratic is requested above
/// quadratic_cap.
std::vector<BenchRecord> run_benchmark(const std::vector<std::size_t>& sizes,
                                       const std::vector<BenchMethod>& methods,
                                       std::uint64_t seed,
                                       std::size_t repetitions,
                                       std::size_t quadratic_cap = kQuadraticGuard);

/// CSV rows `m,method,seconds,repetitions,seed`, with header.
void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace hommel

#endif  // HOMMEL_BENCH_HPP
