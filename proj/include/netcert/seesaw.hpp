#pragma once

#include <cstdint>

#include "netcert/eigen.hpp"
#include "netcert/realization.hpp"

namespace netcert {

struct SeesawConfig {
    std::vector<std::size_t> dims;  // raw subsystem dims; edges first/last per scenario
    int restarts = 20;
    int max_sweeps = 200;
    double tol = 1e-9;          // stop when the objective improves by less
    std::uint64_t seed = 0;     // restart r uses seed + r
    double weight_floor = 1e-12;
};

struct SeesawTrace {
    std::vector<double> objectives;  // one value per sweep, nondecreasing
};

struct SeesawResult {
    double best_value = 0.0;
    Realization best;
    std::vector<SeesawTrace> traces;  // one per restart
};

// Alternating maximization of the Bell functional over the state and every
// observable at fixed local dimensions. Random starts are seeded and
// independent; the best restart is returned.
SeesawResult seesaw_optimize(const Scenario& scenario, const SeesawConfig& config);

}  // namespace netcert
