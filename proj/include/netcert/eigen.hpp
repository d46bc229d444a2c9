#pragma once

#include "netcert/matrix.hpp"

namespace netcert {

struct EigenResult {
    std::vector<double> values;  // descending
    CMat vectors;                // columns, orthonormal; H = V diag(values) V^dagger
};

// Hermitian eigendecomposition by cyclic Jacobi rotations over the upper
// triangle in row-major order. Sweeps run until the largest off-diagonal
// magnitude drops below 1e-14 relative to the matrix scale.
EigenResult hermitian_eigen(const CMat& h, double hermitian_tol = 1e-10);

// V sign(Lambda) V^dagger with sign(0) = +1; the result is dichotomic.
CMat sign_operator(const CMat& h, double hermitian_tol = 1e-10);

}  // namespace netcert
