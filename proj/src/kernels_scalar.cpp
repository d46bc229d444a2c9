#include "netcert/kernels.hpp"

namespace netcert::kernels::detail {

void matmul_scalar(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t i = 0; i < m * n; ++i) c[i] = cd(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const cd aik = a[i * k + l];
            if (aik == cd(0.0, 0.0)) continue;
            const cd* brow = b + l * n;
            cd* crow = c + i * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void matvec_scalar(const cd* a, const cd* x, cd* y, std::size_t m, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        cd acc(0.0, 0.0);
        const cd* row = a + i * n;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

cd dot_conj_scalar(const cd* x, const cd* y, std::size_t n) {
    cd acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

void axpy_scalar(cd alpha, const cd* x, cd* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace netcert::kernels::detail
