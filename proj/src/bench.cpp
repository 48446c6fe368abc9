#include "hommel/bench.hpp"

#include <chrono>
#include <ostream>
#include <random>

#include "hommel/adjust.hpp"
#include "hommel/core.hpp"
#include "hommel/errors.hpp"
#include "hommel/jumps.hpp"

namespace hommel {

namespace {

using Clock = std::chrono::steady_clock;

volatile double bench_sink = 0.0;  // keeps the optimizer from dropping results

double seconds_between(Clock::time_point start, Clock::time_point stop) {
    return std::chrono::duration<double>(stop - start).count();
}

// splitmix-style hash so every (seed, m, repetition) gets its own stream
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = seed;
    x ^= 0x9E3779B97F4A7C15ULL * (a + 1);
    x ^= 0xC2B2AE3D27D4EB4FULL * (b + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

double checksum(const std::vector<double>& adjusted) {
    double sum = adjusted.front() + adjusted.back();
    sum += adjusted[adjusted.size() / 2];
    return sum;
}

double run_adjustment(BenchMethod method, const std::vector<double>& raw,
                      std::size_t quadratic_cap) {
    const PValueStudy study = make_study(raw);
    switch (method) {
        case BenchMethod::hommel_fast: {
            const StepWeights weights = make_step_weights(WeightKind::simes, study.size());
            const CriticalSchedule schedule = find_jumps(study, weights);
            return checksum(adjust_hommel(study, schedule, weights).adjusted);
        }
        case BenchMethod::hommel_quadratic: {
            const StepWeights weights = make_step_weights(WeightKind::simes, study.size());
            return checksum(quadratic_hommel_adjust(study, weights, quadratic_cap).adjusted);
        }
        default: {
            return checksum(adjust_hochberg(study).adjusted);
        }
    }
}

void check_fast_quadratic_agreement(const std::vector<double>& raw,
                                    std::size_t quadratic_cap) {
    const PValueStudy study = make_study(raw);
    const StepWeights weights = make_step_weights(WeightKind::simes, study.size());
    const CriticalSchedule schedule = find_jumps(study, weights);
    const AdjustmentResult fast = adjust_hommel(study, schedule, weights);
    const AdjustmentResult quad = quadratic_hommel_adjust(study, weights, quadratic_cap);
    if (fast.adjusted != quad.adjusted)
        throw Error("hommel-fast and hommel-quadratic disagree at m = " +
                    std::to_string(raw.size()));
}

}  // namespace

std::string to_string(BenchMethod method) {
    switch (method) {
        case BenchMethod::hommel_fast: return "hommel-fast";
        case BenchMethod::hommel_quadratic: return "hommel-quadratic";
        default: return "hochberg";
    }
}

BenchMethod parse_bench_method(const std::string& name) {
    if (name == "hommel-fast") return BenchMethod::hommel_fast;
    if (name == "hommel-quadratic") return BenchMethod::hommel_quadratic;
    if (name == "hochberg") return BenchMethod::hochberg;
    throw Error("unknown benchmark method '" + name +
                "' (expected hommel-fast, hommel-quadratic or hochberg)");
}

std::vector<double> gen_squared_uniform(std::size_t m, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<double> values(m);
    for (double& value : values) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        value = u * u;
    }
    return values;
}

std::vector<BenchRecord> run_benchmark(const std::vector<std::size_t>& sizes,
                                       const std::vector<BenchMethod>& methods,
                                       std::uint64_t seed,
                                       std::size_t repetitions,
                                       std::size_t quadratic_cap) {
    if (sizes.empty()) throw Error("benchmark needs at least one size");
    if (repetitions == 0) throw Error("benchmark needs at least one repetition");
    for (std::size_t m : sizes)
        for (BenchMethod method : methods)
            if (method == BenchMethod::hommel_quadratic && m > quadratic_cap)
                throw CapExceeded(m, quadratic_cap);

    std::vector<BenchRecord> records;
    records.reserve(sizes.size() * methods.size());
    for (std::size_t m : sizes) {
        for (BenchMethod method : methods) {
            BenchRecord record;
            record.m = m;
            record.method = method;
            record.repetitions = repetitions;
            record.seed = seed;

            double total = 0.0;
            double gen_total = 0.0;
            for (std::size_t rep = 0; rep < repetitions; ++rep) {
                const auto gen_start = Clock::now();
                const std::vector<double> raw =
                    gen_squared_uniform(m, mix_seed(seed, m, rep));
                gen_total += seconds_between(gen_start, Clock::now());

                if (rep == 0 && method == BenchMethod::hommel_quadratic)
                    check_fast_quadratic_agreement(raw, quadratic_cap);

                const auto start = Clock::now();
                const double sum = run_adjustment(method, raw, quadratic_cap);
                total += seconds_between(start, Clock::now());
                bench_sink = bench_sink + sum;
            }
            record.seconds = total / static_cast<double>(repetitions);
            record.gen_seconds = gen_total / static_cast<double>(repetitions);
            records.push_back(record);
        }
    }
    return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "m,method,seconds,repetitions,seed\n";
    for (const BenchRecord& record : records) {
        out << record.m << ',' << to_string(record.method) << ','
            << format_double(record.seconds) << ',' << record.repetitions << ','
            << record.seed << '\n';
    }
}

}  // namespace hommel
