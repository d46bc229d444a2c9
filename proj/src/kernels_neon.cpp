#include "netcert/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace netcert::kernels::detail {

// A float64x2_t holds one complex double [re, im].

namespace {

const float64x2_t kSign = {-1.0, 1.0};

inline float64x2_t cmul(float64x2_t p, float64x2_t q) {
    float64x2_t t = vmulq_laneq_f64(p, q, 0);                 // [pr qr, pi qr]
    float64x2_t u = vmulq_laneq_f64(vextq_f64(p, p, 1), q, 1);  // [pi qi, pr qi]
    return vfmaq_f64(t, u, kSign);                            // [pr qr - pi qi, pi qr + pr qi]
}

}  // namespace

void matmul_neon(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n) {
    const double* bd = reinterpret_cast<const double*>(b);
    double* cdp = reinterpret_cast<double*>(c);
    for (std::size_t i = 0; i < m * n; ++i) c[i] = cd(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cd aik = a[i * k + l];
            if (aik == cd(0.0, 0.0)) continue;
            const float64x2_t va = {aik.real(), aik.imag()};
            const double* brow = bd + 2 * l * n;
            double* crow = cdp + 2 * i * n;
            for (std::size_t j = 0; j < n; ++j) {
                float64x2_t acc = vld1q_f64(crow + 2 * j);
                acc = vaddq_f64(acc, cmul(va, vld1q_f64(brow + 2 * j)));
                vst1q_f64(crow + 2 * j, acc);
            }
        }
    }
}

void matvec_neon(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < m; ++i) {
        const double* row = reinterpret_cast<const double*>(a + i * n);
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t j = 0; j < n; ++j)
            acc = vaddq_f64(acc, cmul(vld1q_f64(row + 2 * j), vld1q_f64(xd + 2 * j)));
        y[i] = cd(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
    }
}

cd dot_conj_neon(const cd* x, const cd* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t p = vld1q_f64(xd + 2 * i);
        p = vmulq_f64(p, kSign);              // conj with flipped sign layout: [-xr, xi]
        p = vnegq_f64(p);                     // [xr, -xi] = conj(x)
        acc = vaddq_f64(acc, cmul(p, vld1q_f64(yd + 2 * i)));
    }
    return cd(vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1));
}

void axpy_neon(cd alpha, const cd* x, cd* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const float64x2_t va = {alpha.real(), alpha.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t acc = vld1q_f64(yd + 2 * i);
        acc = vaddq_f64(acc, cmul(va, vld1q_f64(xd + 2 * i)));
        vst1q_f64(yd + 2 * i, acc);
    }
}

}  // namespace netcert::kernels::detail

#endif
