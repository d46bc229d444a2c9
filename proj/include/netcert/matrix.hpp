#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "netcert/errors.hpp"

namespace netcert {

using cd = std::complex<double>;
using Vec = std::vector<cd>;

// Dense row-major complex matrix. Immutable use is the norm: operations
// return new values.
class CMat {
  public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMat identity(std::size_t n);
    static CMat diag(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cd& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cd& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    cd* data() { return a_.data(); }
    const cd* data() const { return a_.data(); }

    CMat adjoint() const;
    CMat transpose() const;
    cd trace() const;
    double max_abs() const;

    bool operator==(const CMat& o) const = default;

    friend CMat operator+(const CMat& x, const CMat& y);
    friend CMat operator-(const CMat& x, const CMat& y);
    friend CMat operator*(const CMat& x, const CMat& y);
    friend CMat operator*(cd s, const CMat& x);
    friend Vec operator*(const CMat& x, const Vec& v);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec a_;
};

// Vector helpers
cd inner(const Vec& x, const Vec& y);  // <x|y>, conjugates x
double norm2(const Vec& x);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(cd s, const Vec& x);

// Pauli matrices and common constants
const CMat& pauli_x();
const CMat& pauli_y();
const CMat& pauli_z();

// Kronecker product; dims multiply.
CMat tensor_product(const CMat& a, const CMat& b);
Vec tensor_product(const Vec& a, const Vec& b);

// Operator acting as `op` on the subsystems listed in `positions` (in the
// canonical order of `dims`) and as identity elsewhere. `op` must be square
// with dimension equal to the product of dims at the listed positions.
CMat embed_operator(const CMat& op, const std::vector<std::size_t>& positions,
                    const std::vector<std::size_t>& dims);

// Partial trace of a density operator, keeping the listed subsystems.
CMat partial_trace(const CMat& rho, const std::vector<std::size_t>& keep,
                   const std::vector<std::size_t>& dims);

// Maximally entangled state sum_k |kk>/sqrt(d) on two d-dimensional parts.
Vec max_entangled_state(std::size_t d);

// <psi|O|psi> resp. tr(rho O)
cd expectation(const Vec& psi, const CMat& op);
cd expectation_density(const CMat& rho, const CMat& op);

CMat anticommutator(const CMat& a, const CMat& b);
double commutator_norm(const CMat& a, const CMat& b);  // max-abs of AB - BA

// Validation helpers for dichotomic observables and states.
bool is_hermitian(const CMat& m, double tol = 1e-12);
bool is_observable(const CMat& m, double tol = 1e-12);  // Hermitian and involutory

CMat outer(const Vec& psi);  // |psi><psi|

}  // namespace netcert
