#include "netcert/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace netcert {

namespace {

double max_offdiag(const CMat& h) {
    double m = 0.0;
    for (std::size_t p = 0; p < h.rows(); ++p)
        for (std::size_t q = p + 1; q < h.cols(); ++q) m = std::max(m, std::abs(h(p, q)));
    return m;
}

}  // namespace

EigenResult hermitian_eigen(const CMat& h0, double hermitian_tol) {
    if (!h0.square()) throw InvalidOperand("hermitian_eigen: matrix not square");
    if ((h0 - h0.adjoint()).max_abs() > hermitian_tol)
        throw InvalidOperand("hermitian_eigen: matrix not Hermitian");

    const std::size_t n = h0.rows();
    CMat h = cd(0.5) * (h0 + h0.adjoint());  // symmetrize roundoff
    CMat v = CMat::identity(n);

    const double scale = std::max(1.0, h.max_abs());
    const double thresh = 1e-14 * scale;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps && max_offdiag(h) > thresh; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cd apq = h(p, q);
                const double r = std::abs(apq);
                if (r <= thresh) continue;
                const cd u = apq / r;  // phase e^{i phi}
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Column update H <- H J, J_pp = c, J_pq = s u, J_qp = -s conj(u), J_qq = c
                for (std::size_t k = 0; k < n; ++k) {
                    const cd hp = h(k, p), hq = h(k, q);
                    h(k, p) = c * hp - s * std::conj(u) * hq;
                    h(k, q) = s * u * hp + c * hq;
                }
                // Row update H <- J^dagger H
                for (std::size_t k = 0; k < n; ++k) {
                    const cd hp = h(p, k), hq = h(q, k);
                    h(p, k) = c * hp - s * u * hq;
                    h(q, k) = s * std::conj(u) * hp + c * hq;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
                // Accumulate V <- V J
                for (std::size_t k = 0; k < n; ++k) {
                    const cd vp = v(k, p), vq = v(k, q);
                    v(k, p) = c * vp - s * std::conj(u) * vq;
                    v(k, q) = s * u * vp + c * vq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return h(a, a).real() > h(b, b).real(); });

    EigenResult res;
    res.values.resize(n);
    res.vectors = CMat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        res.values[j] = h(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) res.vectors(i, j) = v(i, order[j]);
    }
    return res;
}

CMat sign_operator(const CMat& h, double hermitian_tol) {
    EigenResult e = hermitian_eigen(h, hermitian_tol);
    std::vector<double> s(e.values.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = e.values[i] >= 0.0 ? 1.0 : -1.0;
    return e.vectors * CMat::diag(s) * e.vectors.adjoint();
}

}  // namespace netcert
