#pragma once

#include <string>

#include "netcert/realization.hpp"

namespace netcert {

struct Tolerances {
    double value = 1e-9;     // value-level checks (delta, omega, residuals)
    double algebra = 1e-12;  // algebraic identities (commutators, anticommutators)
};

struct CheckEntry {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CertificationReport {
    std::vector<CheckEntry> entries;
    bool overall = false;
    double delta_value = 0.0;
    double delta_target = 0.0;
    CorrelatorTable correlators;
};

// ||[B_i, B_j]||_max for every i < j; the self-test demands zero except for
// odd-n star networks, where the optimum forces the value 2 instead.
std::vector<CheckEntry> verify_central_commutation(const Realization& real, double tol);

// <{A_j, A_j'}> against 2 - 4p/m per unordered pair per edge party, plus the
// operator-level deviation ||{A_j, A_j'} - (2 - 4p/m) I||_max.
std::vector<CheckEntry> verify_edge_anticommutators(const Realization& real,
                                                    const EncodingScheme& scheme, double tol);

// Residual of each certified linear constraint sum_x (-1)^{s_l . y^x} A_x = 0
// plus the aggregate delta_m; bilocal only.
std::vector<CheckEntry> verify_linear_constraints(const Realization& real,
                                                  const EncodingScheme& scheme, double tol);

// || M_i |psi> - lambda_i |psi> ||_2 with lambda_i = sign(<M_i>), sign(0) = +1.
std::vector<CheckEntry> verify_eigenvector_conditions(const Realization& real, double tol);

// Full report: delta against the quantum optimum and the classical bound,
// omega norms, then all of the above. Entry order is fixed.
CertificationReport certify(const Realization& real, const Tolerances& tol = {});

}  // namespace netcert
