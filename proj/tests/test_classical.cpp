#include "doctest.h"
#include "netcert/classical.hpp"

using namespace netcert;

TEST_CASE("eta closed form") {
    CHECK(eta_closed_form(2) == 2);
    CHECK(eta_closed_form(3) == 6);
    CHECK(eta_closed_form(4) == 12);
    CHECK(eta_closed_form(5) == 30);
    CHECK(eta_closed_form(6) == 60);
}

TEST_CASE("eta brute force matches the closed form for m <= 5, both policies") {
    for (int m = 2; m <= 5; ++m)
        for (const auto policy :
             {TransversalPolicy::lex_first_zero, TransversalPolicy::minority_weight}) {
            const EncodingScheme scheme = generate_transversal(m, policy);
            CHECK(eta_brute_force(scheme).max_value == eta_closed_form(m));
        }
    CHECK_THROWS_AS(eta_brute_force(generate_transversal(6, TransversalPolicy::lex_first_zero)),
                    CapacityExceeded);
}

TEST_CASE("star deterministic maximum is exactly 2") {
    for (int n = 2; n <= 6; ++n)
        CHECK(brute_force_delta(build_star_scenario(n)).max_value == 2.0);
    CHECK_THROWS_AS(brute_force_delta(build_star_scenario(9)), CapacityExceeded);
}

TEST_CASE("bilocal deterministic maximum equals the closed-form bound") {
    for (int m = 2; m <= 5; ++m) {
        const Scenario sc = build_bilocal_scenario(m);
        CHECK(brute_force_delta(sc).max_value == doctest::Approx(sc.classical_bound).epsilon(1e-12));
    }
    CHECK_THROWS_AS(brute_force_delta(build_bilocal_scenario(6)), CapacityExceeded);
}

TEST_CASE("diagonal reduction is exact for small m") {
    // restricting Charlie's assignment to equal Alice's does not lower the
    // maximum: sum_i sqrt(|a_i||c_i|) <= max(sum|a_i|, sum|c_i|) is attained
    // on the diagonal
    for (int m = 2; m <= 4; ++m) {
        const Scenario sc = build_bilocal_scenario(m);
        const EtaResult eta = eta_brute_force(sc.scheme);
        CHECK(double(eta.max_value) == brute_force_delta(sc).max_value);
    }
}

TEST_CASE("classical bound helper agrees with scenarios") {
    CHECK(classical_bound(build_star_scenario(4)) == 2.0);
    CHECK(classical_bound(build_bilocal_scenario(3)) == 6.0);
    CHECK(classical_bound(build_bilocal_scenario(5)) == 30.0);
}

TEST_CASE("witness mask reproduces the maximum") {
    const EncodingScheme scheme = generate_transversal(3, TransversalPolicy::lex_first_zero);
    const EtaResult eta = eta_brute_force(scheme);
    const auto s = sign_matrix(scheme);
    long long total = 0;
    for (int i = 0; i < 3; ++i) {
        long long sum = 0;
        for (std::size_t x = 0; x < scheme.strings.size(); ++x)
            sum += s[i][x] * ((eta.witness_mask >> x) & 1u ? -1 : 1);
        total += std::abs(sum);
    }
    CHECK(static_cast<std::uint64_t>(total) == eta.max_value);
}
