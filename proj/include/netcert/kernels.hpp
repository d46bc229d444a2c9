#pragma once

#include <complex>
#include <cstddef>

// Dense complex kernels behind the matrix layer. A scalar reference
// implementation always exists; on x86 an AVX2 variant (and on aarch64 a
// NEON variant) is selected at runtime. All variants must agree to
// rounding-level accuracy; equivalence is tested in test_kernels.cpp.

namespace netcert::kernels {

using cd = std::complex<double>;

enum class Backend { scalar, avx2, neon };

// Backend chosen at startup from CPU features.
Backend active_backend();

// Override the dispatch (tests only). Requesting an unavailable backend
// falls back to scalar and returns the backend actually installed.
Backend force_backend(Backend b);

// C = A * B, row-major, A is m x k, B is k x n, C is m x n. No aliasing.
void matmul(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n);

// y = A * x, A is m x n row-major.
void matvec(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n);

// sum_i conj(x[i]) * y[i]
cd dot_conj(const cd* x, const cd* y, std::size_t n);

// y += alpha * x
void axpy(cd alpha, const cd* x, cd* y, std::size_t n);

namespace detail {
void matmul_scalar(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n);
void matvec_scalar(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n);
cd dot_conj_scalar(const cd* x, const cd* y, std::size_t n);
void axpy_scalar(cd alpha, const cd* x, cd* y, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
void matmul_avx2(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n);
void matvec_avx2(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n);
cd dot_conj_avx2(const cd* x, const cd* y, std::size_t n);
void axpy_avx2(cd alpha, const cd* x, cd* y, std::size_t n);
#endif

#if defined(__aarch64__)
void matmul_neon(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n);
void matvec_neon(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n);
cd dot_conj_neon(const cd* x, const cd* y, std::size_t n);
void axpy_neon(cd alpha, const cd* x, cd* y, std::size_t n);
#endif
}  // namespace detail

}  // namespace netcert::kernels
