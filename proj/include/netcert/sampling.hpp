#pragma once

#include <cstdint>
#include <map>

#include "netcert/realization.hpp"

namespace netcert {

// Inputs: one edge input per edge party plus the central input, all 0-based.
struct InputTuple {
    std::vector<int> edge_inputs;
    int central_input = 0;
};

// Joint distribution over outcome tuples for one input tuple. Outcomes are
// ordered (edge parties..., central); index bit k (from the most significant)
// is 1 when that party's outcome is -1.
struct OutcomeDistribution {
    std::vector<double> probabilities;  // 2^{parties+1} entries
};

struct OutcomeCounts {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    // counts[tuple index][outcome index]; tuple index is lexicographic over
    // (edge inputs..., central input)
    std::vector<std::vector<std::uint64_t>> counts;
};

std::vector<InputTuple> enumerate_input_tuples(const Scenario& scenario);

OutcomeDistribution outcome_distribution(const Realization& real, const InputTuple& inputs);

OutcomeCounts sample_counts(const Realization& real, std::uint64_t shots, std::uint64_t seed);

// Correlator table estimated from sampled counts, with propagated standard
// errors; also exposes the per-tuple raw correlators.
struct EstimationResult {
    CorrelatorTable table;
    std::vector<double> raw_correlators;  // one per input tuple
    std::vector<double> raw_std_errors;
    OutcomeCounts counts;
};

EstimationResult sample_and_estimate(const Realization& real, std::uint64_t shots,
                                     std::uint64_t seed);

// Exact raw correlator for one input tuple (oracle for the estimator).
double exact_raw_correlator(const Realization& real, const InputTuple& inputs);

// Delta estimate and its linearly propagated standard error.
struct DeltaEstimate {
    double value = 0.0;
    double std_error = 0.0;
};
DeltaEstimate delta_estimate(const Scenario& scenario, const CorrelatorTable& table);

}  // namespace netcert
