#pragma once

#include "netcert/matrix.hpp"
#include "netcert/scenario.hpp"

namespace netcert {

// Observables for every party plus the shared state. Edge observables are
// party-local matrices; central observables act on the central party's
// subsystems only. Subsystem order:
//   bilocal: (edge A, central subsystems..., edge C)
//   star:    (A_1, ..., A_n, central subsystems...)
// The canonical construction splits the central party into one half per
// source; a single central subsystem (see-saw layouts) works the same way.
struct Realization {
    Scenario scenario;
    std::vector<std::vector<CMat>> edge_observables;  // [party][input]
    std::vector<CMat> central_observables;            // [central input]
    std::vector<std::size_t> dims;
    bool pure = true;
    Vec state_vector;    // pure
    CMat state_density;  // mixed

    std::size_t total_dim() const;
    std::vector<std::size_t> edge_positions(int party) const;
    std::vector<std::size_t> central_positions() const;
};

// m Hermitian involutory pairwise-anticommuting matrices of dimension
// 2^floor(m/2). m = 2 yields {sigma_z, sigma_x}; larger m follows the
// Jordan-Wigner pattern (X, Y at site k dressed with Z on earlier sites,
// plus a trailing Z...Z generator when m is odd).
std::vector<CMat> gamma_generators(int m);

// The canonical optimal construction for the scenario.
Realization optimal_realization(const Scenario& scenario);

// Exact quantum correlators I^n_{2,i} / J_{m,i} for the realization.
CorrelatorTable correlator_table(const Realization& real);

// omega[i][party] = || (sum_x +-A_x (x) I) |psi> ||_2 per edge party.
// Defined for pure states only.
std::vector<std::vector<double>> omega_norms(const Realization& real);

// Replace each source state by v |phi><phi| + (1-v) I/d^2. Observables are
// unchanged; the result carries a density state. Bilocal or star n=2.
Realization apply_visibility(const Realization& real, double v_source1, double v_source2);

// Sign-weighted sum of one edge party's observables for central input i.
CMat edge_term_operator(const Realization& real, int party, int central_input);

// Full signed operator product for central input i, on the whole space.
CMat term_operator(const Realization& real, int central_input);

double state_expectation(const Realization& real, const CMat& op);

}  // namespace netcert
