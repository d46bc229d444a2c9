#include <cstdio>

#include "doctest.h"
#include "netcert/io.hpp"
#include "netcert/verifier.hpp"

using namespace netcert;

namespace {

bool same_realization(const Realization& a, const Realization& b) {
    if (a.dims != b.dims || a.pure != b.pure) return false;
    if (a.edge_observables.size() != b.edge_observables.size()) return false;
    for (std::size_t p = 0; p < a.edge_observables.size(); ++p) {
        if (a.edge_observables[p].size() != b.edge_observables[p].size()) return false;
        for (std::size_t x = 0; x < a.edge_observables[p].size(); ++x)
            if (!(a.edge_observables[p][x] == b.edge_observables[p][x])) return false;
    }
    if (a.central_observables.size() != b.central_observables.size()) return false;
    for (std::size_t i = 0; i < a.central_observables.size(); ++i)
        if (!(a.central_observables[i] == b.central_observables[i])) return false;
    if (a.pure) return a.state_vector == b.state_vector;
    return a.state_density == b.state_density;
}

}  // namespace

TEST_CASE("serialization round trips bit-for-bit") {
    for (const Realization& real :
         {optimal_realization(build_bilocal_scenario(3)),
          optimal_realization(build_bilocal_scenario(4, TransversalPolicy::minority_weight)),
          optimal_realization(build_star_scenario(3))}) {
        const std::string text = realization_to_json(real);
        const Realization back = realization_from_json(text);
        CHECK(same_realization(real, back));
        CHECK(realization_to_json(back) == text);  // byte-identical re-serialization
        CHECK(back.scenario.kind == real.scenario.kind);
        CHECK(back.scenario.scheme.strings == real.scenario.scheme.strings);
    }
}

TEST_CASE("mixed states round trip through the density branch") {
    const Realization mixed =
        apply_visibility(optimal_realization(build_bilocal_scenario(2)), 0.7, 0.7);
    const Realization back = realization_from_json(realization_to_json(mixed));
    CHECK(!back.pure);
    CHECK(same_realization(mixed, back));
}

TEST_CASE("a written file still certifies") {
    const Realization real = optimal_realization(build_bilocal_scenario(3));
    const Realization back = realization_from_json(realization_to_json(real));
    CHECK(certify(back).overall);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(realization_from_json("not json"), InvalidParameter);
    CHECK_THROWS_AS(realization_from_json("{}"), InvalidParameter);
    CHECK_THROWS_AS(
        realization_from_json(R"({"scenario":{"kind":"ring"},"dims":[2]})"),
        InvalidParameter);
}

TEST_CASE("file i/o") {
    const Realization real = optimal_realization(build_bilocal_scenario(2));
    const std::string path = "io_roundtrip_tmp.json";
    write_realization(real, path);
    const Realization back = read_realization(path);
    CHECK(same_realization(real, back));
    CHECK_THROWS_AS(read_realization("no/such/dir/file.json"), InvalidParameter);
    std::remove(path.c_str());
}

TEST_CASE("format_double uses 12 significant digits") {
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(6.928203230275509) == "6.92820323028");
    CHECK(format_double(-0.5) == "-0.5");
}
