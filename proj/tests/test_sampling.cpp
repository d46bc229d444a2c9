#include <bit>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "netcert/sampling.hpp"

using namespace netcert;

TEST_CASE("input tuple enumeration") {
    const auto star = enumerate_input_tuples(build_star_scenario(2));
    CHECK(star.size() == 8);  // 2 * 2 edge inputs * 2 central inputs
    CHECK(star.front().edge_inputs == std::vector<int>{0, 0});
    CHECK(star.front().central_input == 0);
    CHECK(star.back().edge_inputs == std::vector<int>{1, 1});
    CHECK(star.back().central_input == 1);

    const auto bil = enumerate_input_tuples(build_bilocal_scenario(3));
    CHECK(bil.size() == 4 * 4 * 3);
}

TEST_CASE("probabilities are nonnegative and sum to one") {
    const Realization real = optimal_realization(build_bilocal_scenario(3));
    for (const InputTuple& tup : enumerate_input_tuples(real.scenario)) {
        const OutcomeDistribution dist = outcome_distribution(real, tup);
        double sum = 0.0;
        for (double p : dist.probabilities) {
            CHECK(p >= -1e-12);
            sum += p;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("distribution reproduces the exact correlator") {
    const Realization real = optimal_realization(build_star_scenario(2));
    for (const InputTuple& tup : enumerate_input_tuples(real.scenario)) {
        const OutcomeDistribution dist = outcome_distribution(real, tup);
        double corr = 0.0;
        for (std::size_t o = 0; o < dist.probabilities.size(); ++o)
            corr += (std::popcount(o) % 2 ? -1.0 : 1.0) * dist.probabilities[o];
        CHECK(corr == doctest::Approx(exact_raw_correlator(real, tup)).epsilon(1e-10));
    }
}

TEST_CASE("fully mixed state gives vanishing correlators") {
    Realization real = optimal_realization(build_bilocal_scenario(2));
    real = apply_visibility(real, 0.0, 0.0);
    for (const InputTuple& tup : enumerate_input_tuples(real.scenario))
        CHECK(std::abs(exact_raw_correlator(real, tup)) < 1e-12);
}

TEST_CASE("same seed reproduces identical counts") {
    const Realization real = optimal_realization(build_bilocal_scenario(2));
    const OutcomeCounts a = sample_counts(real, 5000, 77);
    const OutcomeCounts b = sample_counts(real, 5000, 77);
    CHECK(a.counts == b.counts);
    const OutcomeCounts c = sample_counts(real, 5000, 78);
    CHECK(a.counts != c.counts);
}

TEST_CASE("counts sum to the per-tuple shot budget") {
    const Realization real = optimal_realization(build_bilocal_scenario(2));
    const std::uint64_t shots = 10007;  // prime: exercises the remainder rule
    const OutcomeCounts counts = sample_counts(real, shots, 5);
    const std::size_t tuples = counts.counts.size();
    std::uint64_t total = 0;
    for (std::size_t t = 0; t < tuples; ++t) {
        const std::uint64_t n = std::accumulate(counts.counts[t].begin(),
                                                counts.counts[t].end(), std::uint64_t{0});
        const std::uint64_t expect = shots / tuples + (t < shots % tuples ? 1 : 0);
        CHECK(n == expect);
        total += n;
    }
    CHECK(total == shots);
}

TEST_CASE("estimates converge to the exact correlators") {
    const Realization real = optimal_realization(build_bilocal_scenario(2));
    const EstimationResult est = sample_and_estimate(real, 200000, 1);
    const auto tuples = enumerate_input_tuples(real.scenario);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        CHECK(std::abs(est.raw_correlators[i]) <= 1.0);
        CHECK(std::abs(est.raw_correlators[i] - exact_raw_correlator(real, tuples[i])) <=
              5.0 * est.raw_std_errors[i]);
    }
    const CorrelatorTable exact = correlator_table(real);
    for (std::size_t i = 0; i < exact.values.size(); ++i)
        CHECK(std::abs(est.table.values[i] - exact.values[i]) <=
              5.0 * est.table.std_errors[i]);
}

TEST_CASE("deterministic statistics have zero standard error") {
    // central observables diagonal and edge observables Z on product state |00..0>
    Realization real = optimal_realization(build_star_scenario(2));
    const CMat z = pauli_z();
    real.edge_observables = {{z, z}, {z, z}};
    real.central_observables = {tensor_product(z, z), tensor_product(z, z)};
    real.state_vector.assign(real.total_dim(), cd(0.0));
    real.state_vector[0] = 1.0;
    const EstimationResult est = sample_and_estimate(real, 1000, 2);
    for (std::size_t i = 0; i < est.raw_correlators.size(); ++i) {
        CHECK(std::abs(est.raw_correlators[i]) == 1.0);
        CHECK(est.raw_std_errors[i] == 0.0);
    }
}

TEST_CASE("zero shots are rejected") {
    const Realization real = optimal_realization(build_bilocal_scenario(2));
    CHECK_THROWS_AS(sample_counts(real, 0, 1), InvalidParameter);
}

TEST_CASE("delta estimate propagates standard errors") {
    const Scenario sc = build_bilocal_scenario(3);
    const Realization real = optimal_realization(sc);
    const EstimationResult est = sample_and_estimate(real, 100000, 3);
    const DeltaEstimate d = delta_estimate(sc, est.table);
    CHECK(d.std_error > 0.0);
    CHECK(std::abs(d.value - sc.quantum_optimum) <= 5.0 * d.std_error);
    CHECK((d.value - sc.classical_bound) / d.std_error >= 5.0);
}
