#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <doctest.h>

#include "hommel/core.hpp"
#include "hommel/errors.hpp"
#include "test_helpers.hpp"

using namespace hommel;
using test_helpers::random_pvalues;

namespace {

bool bit_identical(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("make_study stable sort and permutation") {
    const PValueStudy study = make_study({0.9, 0.02, 0.03, 0.02});
    CHECK(study.size() == 4);
    CHECK(study.sorted == std::vector<double>{0.02, 0.02, 0.03, 0.9});
    // ranks 1..4 come from positions 2, 4, 3, 1 (stable: first 0.02 first)
    CHECK(study.perm == std::vector<std::size_t>{1, 3, 2, 0});
    CHECK(study.raw == std::vector<double>{0.9, 0.02, 0.03, 0.02});
}

TEST_CASE("make_study single element") {
    const PValueStudy study = make_study({0.5});
    CHECK(study.sorted == std::vector<double>{0.5});
    CHECK(study.perm == std::vector<std::size_t>{0});
}

TEST_CASE("make_study rejects bad input") {
    CHECK_THROWS_AS(make_study({}), EmptyInput);
    try {
        make_study({1.1, 0.5});
        FAIL("expected InvalidPValue");
    } catch (const InvalidPValue& e) {
        CHECK(e.index == 1);
    }
    try {
        make_study({0.5, -0.25});
        FAIL("expected InvalidPValue");
    } catch (const InvalidPValue& e) {
        CHECK(e.index == 2);
    }
    CHECK_THROWS_AS(make_study({std::numeric_limits<double>::quiet_NaN()}),
                    InvalidPValue);
    CHECK_THROWS_AS(make_study({std::numeric_limits<double>::infinity()}),
                    InvalidPValue);
}

TEST_CASE("make_study accepts exact 0 and 1") {
    const PValueStudy study = make_study({1.0, 0.0, 0.5});
    CHECK(study.sorted == std::vector<double>{0.0, 0.5, 1.0});
}

TEST_CASE("make_study invariants on random input") {
    std::mt19937_64 engine(1234);
    for (std::size_t instance = 0; instance < 50; ++instance) {
        const std::size_t m = 1 + engine() % 200;
        const std::vector<double> raw =
            random_pvalues(engine, m, test_helpers::law_for(instance));
        const PValueStudy study = make_study(raw);

        for (std::size_t k = 0; k + 1 < m; ++k)
            REQUIRE(study.sorted[k] <= study.sorted[k + 1]);

        // perm scatters sorted back onto raw, bit for bit
        std::vector<double> rebuilt(m);
        for (std::size_t k = 0; k < m; ++k) rebuilt[study.perm[k]] = study.sorted[k];
        for (std::size_t i = 0; i < m; ++i) REQUIRE(bit_identical(rebuilt[i], raw[i]));

        // perm is a bijection
        std::vector<std::size_t> seen = study.perm;
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < m; ++i) REQUIRE(seen[i] == i);

        // ties keep input order
        for (std::size_t k = 0; k + 1 < m; ++k)
            if (study.sorted[k] == study.sorted[k + 1])
                REQUIRE(study.perm[k] < study.perm[k + 1]);
    }
}

TEST_CASE("sorted view is permutation invariant") {
    std::mt19937_64 engine(77);
    const std::vector<double> raw = random_pvalues(engine, 60, test_helpers::Law::tie_heavy);
    std::vector<double> shuffled = raw;
    std::shuffle(shuffled.begin(), shuffled.end(), engine);
    CHECK(make_study(raw).sorted == make_study(shuffled).sorted);
}

TEST_CASE("make_step_weights simes") {
    const StepWeights weights = make_step_weights(WeightKind::simes, 4);
    CHECK(weights.s == std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0, 4.0});
    CHECK(weights.kind == WeightKind::simes);
    CHECK(weights.m == 4);
}

TEST_CASE("make_step_weights robust") {
    const StepWeights weights = make_step_weights(WeightKind::robust, 3);
    REQUIRE(weights.s.size() == 5);
    CHECK(weights.s[0] == 0.0);
    CHECK(weights.s[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(weights.s[2] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(weights.s[3] == doctest::Approx(5.5).epsilon(1e-14));  // 3*(1 + 1/2 + 1/3)
    CHECK(weights.s[4] == weights.s[3]);

    const StepWeights tiny = make_step_weights(WeightKind::robust, 1);
    CHECK(tiny.s == std::vector<double>{0.0, 1.0, 1.0});
}

TEST_CASE("make_step_weights rejects m = 0") {
    CHECK_THROWS_AS(make_step_weights(WeightKind::simes, 0), ZeroSize);
}

TEST_CASE("step weight invariants across sizes") {
    for (const std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{7},
                                std::size_t{1000}, std::size_t{10000000}}) {
        for (const WeightKind kind : {WeightKind::simes, WeightKind::robust}) {
            const StepWeights weights = make_step_weights(kind, m);
            REQUIRE(weights.s.size() == m + 2);
            REQUIRE(weights.s[0] == 0.0);
            for (std::size_t k = 0; k + 1 < weights.s.size(); ++k)
                REQUIRE(weights.s[k] <= weights.s[k + 1]);
            REQUIRE(weights.s[m + 1] == weights.s[m]);
            if (kind == WeightKind::simes) {
                REQUIRE(weights.s[1] == 1.0);
                REQUIRE(weights.s[m] == static_cast<double>(m));
                REQUIRE(weights.s[m / 2 + 1] == static_cast<double>(m / 2 + 1));
            }
        }
    }
}

TEST_CASE("robust weights dominate simes weights") {
    const StepWeights simes = make_step_weights(WeightKind::simes, 500);
    const StepWeights robust = make_step_weights(WeightKind::robust, 500);
    for (std::size_t k = 0; k < simes.s.size(); ++k)
        REQUIRE(robust.s[k] >= simes.s[k]);
}

TEST_CASE("local test on the four-hypothesis example") {
    const PValueStudy study = make_study({0.02, 0.02, 0.03, 0.9});
    const StepWeights weights = make_step_weights(WeightKind::simes, 4);
    // full set: 4 * 0.02 = 0.08 <= 2 * 0.05 at the second smallest value
    CHECK(local_test_rejects({1, 2, 3, 4}, study, weights, 0.05));
    // singleton reduces to p <= alpha
    CHECK_FALSE(local_test_rejects({4}, study, weights, 0.05));
    CHECK(local_test_rejects({1}, study, weights, 0.05));
}

TEST_CASE("local test always rejects at alpha = 1") {
    const PValueStudy study = make_study({1.0, 1.0});
    const StepWeights robust = make_step_weights(WeightKind::robust, 2);
    // the robust inequality itself fails here (s_2 = 3 > 2), so only the
    // alpha = 1 rule can reject
    CHECK(local_test_rejects({1, 2}, study, robust, 1.0));
    CHECK_FALSE(local_test_rejects({1, 2}, study, robust, 0.999));
}

TEST_CASE("local test rejects empty subsets") {
    const PValueStudy study = make_study({0.5});
    const StepWeights weights = make_step_weights(WeightKind::simes, 1);
    CHECK_THROWS_AS(local_test_rejects({}, study, weights, 0.5), EmptySubset);
}

TEST_CASE("local test treats the subset as a set") {
    const PValueStudy study = make_study({0.04, 0.5});
    const StepWeights weights = make_step_weights(WeightKind::simes, 2);
    CHECK(local_test_rejects({1, 1}, study, weights, 0.05) ==
          local_test_rejects({1}, study, weights, 0.05));
}

TEST_CASE("local test is monotone in alpha and in the weight kind") {
    std::mt19937_64 engine(99);
    const std::vector<double> grid = test_helpers::alpha_grid(26);
    for (std::size_t instance = 0; instance < 30; ++instance) {
        const std::size_t m = 1 + engine() % 10;
        const PValueStudy study = make_study(
            random_pvalues(engine, m, test_helpers::law_for(instance)));
        const StepWeights simes = make_step_weights(WeightKind::simes, m);
        const StepWeights robust = make_step_weights(WeightKind::robust, m);

        std::vector<std::size_t> subset;
        for (std::size_t i = 1; i <= m; ++i)
            if (engine() % 2) subset.push_back(i);
        if (subset.empty()) subset.push_back(1 + engine() % m);

        bool previous = false;
        for (const double alpha : grid) {
            const bool now = local_test_rejects(subset, study, simes, alpha);
            if (previous) REQUIRE(now);  // once rejected, stays rejected
            previous = now;
            // robust rejection implies simes rejection
            if (local_test_rejects(subset, study, robust, alpha)) REQUIRE(now);
        }
    }
}

TEST_SUITE_END();
