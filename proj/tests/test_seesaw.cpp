#include <cmath>

#include "doctest.h"
#include "netcert/seesaw.hpp"

using namespace netcert;

TEST_CASE("see-saw reaches the star n=2 optimum on qubits") {
    SeesawConfig cfg;
    cfg.dims = {2, 2, 2, 2};
    cfg.restarts = 8;
    cfg.seed = 3;
    const SeesawResult res = seesaw_optimize(build_star_scenario(2), cfg);
    CHECK(res.best_value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-4));
}

TEST_CASE("see-saw reaches the bilocal m=2 optimum") {
    SeesawConfig cfg;
    cfg.dims = {2, 4, 2};
    cfg.restarts = 8;
    cfg.seed = 5;
    const Scenario sc = build_bilocal_scenario(2);
    const SeesawResult res = seesaw_optimize(sc, cfg);
    CHECK(res.best_value == doctest::Approx(sc.quantum_optimum).epsilon(1e-4));
}

TEST_CASE("objectives are nondecreasing within each restart") {
    SeesawConfig cfg;
    cfg.dims = {2, 4, 2};
    cfg.restarts = 4;
    cfg.seed = 11;
    const SeesawResult res = seesaw_optimize(build_bilocal_scenario(3), cfg);
    for (const auto& trace : res.traces)
        for (std::size_t k = 1; k < trace.objectives.size(); ++k)
            CHECK(trace.objectives[k] >= trace.objectives[k - 1] - 1e-10);
}

TEST_CASE("identical seeds reproduce identical runs") {
    SeesawConfig cfg;
    cfg.dims = {2, 2, 2, 2};
    cfg.restarts = 3;
    cfg.seed = 42;
    const Scenario sc = build_star_scenario(2);
    const SeesawResult a = seesaw_optimize(sc, cfg);
    const SeesawResult b = seesaw_optimize(sc, cfg);
    CHECK(a.best_value == b.best_value);
    REQUIRE(a.traces.size() == b.traces.size());
    for (std::size_t r = 0; r < a.traces.size(); ++r)
        CHECK(a.traces[r].objectives == b.traces[r].objectives);
}

TEST_CASE("trivial dimensions cannot beat the classical bound") {
    SeesawConfig cfg;
    cfg.dims = {1, 1, 1};
    cfg.restarts = 4;
    cfg.seed = 1;
    const Scenario sc = build_bilocal_scenario(3);
    const SeesawResult res = seesaw_optimize(sc, cfg);
    CHECK(res.best_value <= sc.classical_bound + 1e-9);
}

TEST_CASE("configuration validation") {
    const Scenario sc = build_star_scenario(2);
    SeesawConfig cfg;
    cfg.dims = {2, 2};  // star n=2 needs at least three subsystems
    CHECK_THROWS_AS(seesaw_optimize(sc, cfg), InvalidParameter);
    cfg.dims = {64, 64, 64};
    CHECK_THROWS_AS(seesaw_optimize(sc, cfg), CapacityExceeded);
    cfg.dims = {2, 2, 2};
    cfg.restarts = 0;
    CHECK_THROWS_AS(seesaw_optimize(sc, cfg), InvalidParameter);
}

TEST_CASE("the best realization reproduces the reported value") {
    SeesawConfig cfg;
    cfg.dims = {2, 2, 2, 2};
    cfg.restarts = 4;
    cfg.seed = 9;
    const Scenario sc = build_star_scenario(2);
    const SeesawResult res = seesaw_optimize(sc, cfg);
    CHECK(delta_from_correlators(sc, correlator_table(res.best)) ==
          doctest::Approx(res.best_value).epsilon(1e-12));
}
