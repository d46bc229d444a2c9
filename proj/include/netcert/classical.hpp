#pragma once

#include <cstdint>

#include "netcert/scenario.hpp"

namespace netcert {

struct EtaResult {
    std::uint64_t max_value = 0;
    std::uint32_t witness_mask = 0;  // bit x set means a_x = -1; lowest achieving mask
};

struct DeltaResult {
    double max_value = 0.0;
};

// m * C(m-1, floor((m-1)/2))
std::uint64_t eta_closed_form(int m);

// max over a in {+-1}^{2^{m-1}} of sum_i |sum_x S[i][x] a_x|; m <= 5.
EtaResult eta_brute_force(const EncodingScheme& scheme);

double classical_bound(const Scenario& scenario);

// Maximum of the Bell functional over deterministic strategies.
// Star: n <= 8 full scan. Bilocal: m <= 4 joint scan over both edge
// assignments; m = 5 via the diagonal reduction (c = a).
DeltaResult brute_force_delta(const Scenario& scenario);

}  // namespace netcert
