#pragma once

#include <cstdint>
#include <vector>

#include "netcert/encoding.hpp"

namespace netcert {

enum class NetworkKind { star, bilocal };

// A star network with n edge parties (two inputs everywhere), or a bilocal
// network whose central party has m inputs and whose edge parties have
// 2^{m-1} inputs each.
struct Scenario {
    NetworkKind kind = NetworkKind::star;
    int n = 0;  // star: edge-party count
    int m = 0;  // bilocal: central input count
    EncodingScheme scheme;  // bilocal only
    double classical_bound = 0.0;
    double quantum_optimum = 0.0;

    int edge_party_count() const { return kind == NetworkKind::star ? n : 2; }
    int edge_input_count() const { return kind == NetworkKind::star ? 2 : (1 << (m - 1)); }
    int central_input_count() const { return kind == NetworkKind::star ? 2 : m; }
};

struct CorrelatorTable {
    std::vector<double> values;      // I^n_{2,i} or J_{m,i}, one per central input
    std::vector<double> std_errors;  // optional, empty or same length
};

std::uint64_t binomial(int n, int k);

Scenario build_star_scenario(int n);
Scenario build_bilocal_scenario(int m,
                                TransversalPolicy policy = TransversalPolicy::lex_first_zero);

// Per central input i, the edge-input sign pattern of term i.
std::vector<std::vector<int>> correlator_sign_vectors(const Scenario& scenario);

// Star: |I_1|^{1/n} + |I_2|^{1/n}; bilocal: sum_i sqrt(|J_i|).
double delta_from_correlators(const Scenario& scenario, const CorrelatorTable& table);

}  // namespace netcert
