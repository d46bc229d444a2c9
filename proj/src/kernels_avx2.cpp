#include "netcert/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace netcert::kernels::detail {

// A __m256d holds two interleaved complex doubles [re0, im0, re1, im1].

namespace {

// acc += (ar + i*ai) * v for two complex lanes
__attribute__((target("avx2,fma"))) inline __m256d cmul_scalar_acc(__m256d acc, __m256d vr,
                                                                   __m256d vi, __m256d v) {
    __m256d t = _mm256_mul_pd(vr, v);
    __m256d u = _mm256_mul_pd(vi, _mm256_permute_pd(v, 0x5));
    return _mm256_add_pd(acc, _mm256_addsub_pd(t, u));
}

}  // namespace

__attribute__((target("avx2,fma"))) void matmul_avx2(const cd* a, const cd* b, cd* c,
                                                     std::size_t m, std::size_t k, std::size_t n) {
    const double* bd = reinterpret_cast<const double*>(b);
    double* cdp = reinterpret_cast<double*>(c);
    for (std::size_t i = 0; i < m * n; ++i) c[i] = cd(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cd aik = a[i * k + l];
            if (aik == cd(0.0, 0.0)) continue;
            const __m256d vr = _mm256_set1_pd(aik.real());
            const __m256d vi = _mm256_set1_pd(aik.imag());
            const double* brow = bd + 2 * l * n;
            double* crow = cdp + 2 * i * n;
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                __m256d acc = _mm256_loadu_pd(crow + 2 * j);
                acc = cmul_scalar_acc(acc, vr, vi, _mm256_loadu_pd(brow + 2 * j));
                _mm256_storeu_pd(crow + 2 * j, acc);
            }
            for (; j < n; ++j) c[i * n + j] += aik * b[l * n + j];
        }
    }
}

__attribute__((target("avx2,fma"))) void matvec_avx2(const cd* a, const cd* x, cd* y,
                                                     std::size_t m, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < m; ++i) {
        const double* row = reinterpret_cast<const double*>(a + i * n);
        __m256d acc = _mm256_setzero_pd();
        std::size_t j = 0;
        for (; j + 2 <= n; j += 2) {
            __m256d p = _mm256_loadu_pd(row + 2 * j);
            __m256d q = _mm256_loadu_pd(xd + 2 * j);
            __m256d t = _mm256_mul_pd(_mm256_movedup_pd(q), p);
            __m256d u = _mm256_mul_pd(_mm256_permute_pd(q, 0xF), _mm256_permute_pd(p, 0x5));
            acc = _mm256_add_pd(acc, _mm256_addsub_pd(t, u));
        }
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, acc);
        cd sum(tmp[0] + tmp[2], tmp[1] + tmp[3]);
        for (; j < n; ++j) sum += a[i * n + j] * x[j];
        y[i] = sum;
    }
}

__attribute__((target("avx2,fma"))) cd dot_conj_avx2(const cd* x, const cd* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xd + 2 * i);
        __m256d vy = _mm256_loadu_pd(yd + 2 * i);
        acc_re = _mm256_fmadd_pd(vx, vy, acc_re);                          // xr*yr, xi*yi
        acc_im = _mm256_fmadd_pd(vx, _mm256_permute_pd(vy, 0x5), acc_im);  // xr*yi, xi*yr
    }
    alignas(32) double tr[4], ti[4];
    _mm256_store_pd(tr, acc_re);
    _mm256_store_pd(ti, acc_im);
    cd sum(tr[0] + tr[1] + tr[2] + tr[3], ti[0] - ti[1] + ti[2] - ti[3]);
    for (; i < n; ++i) sum += std::conj(x[i]) * y[i];
    return sum;
}

__attribute__((target("avx2,fma"))) void axpy_avx2(cd alpha, const cd* x, cd* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d vr = _mm256_set1_pd(alpha.real());
    const __m256d vi = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d acc = _mm256_loadu_pd(yd + 2 * i);
        acc = cmul_scalar_acc(acc, vr, vi, _mm256_loadu_pd(xd + 2 * i));
        _mm256_storeu_pd(yd + 2 * i, acc);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace netcert::kernels::detail

#endif
