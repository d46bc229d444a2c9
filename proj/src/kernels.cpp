#include "netcert/kernels.hpp"

namespace netcert::kernels {

namespace {

struct Vtable {
    void (*matmul)(const cd*, const cd*, cd*, std::size_t, std::size_t, std::size_t);
    void (*matvec)(const cd*, const cd*, cd*, std::size_t, std::size_t);
    cd (*dot_conj)(const cd*, const cd*, std::size_t);
    void (*axpy)(cd, const cd*, cd*, std::size_t);
    Backend backend;
};

constexpr Vtable kScalar{detail::matmul_scalar, detail::matvec_scalar, detail::dot_conj_scalar,
                         detail::axpy_scalar, Backend::scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2{detail::matmul_avx2, detail::matvec_avx2, detail::dot_conj_avx2,
                       detail::axpy_avx2, Backend::avx2};
#endif
#if defined(__aarch64__)
constexpr Vtable kNeon{detail::matmul_neon, detail::matvec_neon, detail::dot_conj_neon,
                       detail::axpy_neon, Backend::neon};
#endif

const Vtable* detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2;
#endif
#if defined(__aarch64__)
    return &kNeon;  // NEON is baseline on aarch64
#endif
    return &kScalar;
}

const Vtable* g_active = detect();

}  // namespace

Backend active_backend() { return g_active->backend; }

Backend force_backend(Backend b) {
    const Vtable* v = &kScalar;
    switch (b) {
        case Backend::scalar:
            break;
        case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) v = &kAvx2;
#endif
            break;
        case Backend::neon:
#if defined(__aarch64__)
            v = &kNeon;
#endif
            break;
    }
    g_active = v;
    return g_active->backend;
}

void matmul(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n) {
    g_active->matmul(a, b, c, m, k, n);
}

void matvec(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n) {
    g_active->matvec(a, x, y, m, n);
}

cd dot_conj(const cd* x, const cd* y, std::size_t n) { return g_active->dot_conj(x, y, n); }

void axpy(cd alpha, const cd* x, cd* y, std::size_t n) { g_active->axpy(alpha, x, y, n); }

}  // namespace netcert::kernels
