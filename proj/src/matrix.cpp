#include "netcert/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "netcert/kernels.hpp"

namespace netcert {

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::diag(const std::vector<double>& d) {
    CMat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMat CMat::adjoint() const {
    CMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMat CMat::transpose() const {
    CMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

cd CMat::trace() const {
    if (!square()) throw DimensionMismatch("trace of non-square matrix");
    cd t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const cd& v : a_) m = std::max(m, std::abs(v));
    return m;
}

CMat operator+(const CMat& x, const CMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix add");
    CMat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
}

CMat operator-(const CMat& x, const CMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix sub");
    CMat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

CMat operator*(const CMat& x, const CMat& y) {
    if (x.cols_ != y.rows_) throw DimensionMismatch("matrix mul");
    CMat r(x.rows_, y.cols_);
    kernels::matmul(x.data(), y.data(), r.data(), x.rows_, x.cols_, y.cols_);
    return r;
}

CMat operator*(cd s, const CMat& x) {
    CMat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
    return r;
}

Vec operator*(const CMat& x, const Vec& v) {
    if (x.cols_ != v.size()) throw DimensionMismatch("matvec");
    Vec r(x.rows_);
    kernels::matvec(x.data(), v.data(), r.data(), x.rows_, x.cols_);
    return r;
}

cd inner(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("inner product");
    return kernels::dot_conj(x.data(), y.data(), x.size());
}

double norm2(const Vec& x) { return std::sqrt(std::abs(inner(x, x))); }

Vec operator+(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector add");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

Vec operator-(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector sub");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

Vec operator*(cd s, const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = s * x[i];
    return r;
}

const CMat& pauli_x() {
    static const CMat m = [] {
        CMat p(2, 2);
        p(0, 1) = 1.0;
        p(1, 0) = 1.0;
        return p;
    }();
    return m;
}

const CMat& pauli_y() {
    static const CMat m = [] {
        CMat p(2, 2);
        p(0, 1) = cd(0.0, -1.0);
        p(1, 0) = cd(0.0, 1.0);
        return p;
    }();
    return m;
}

const CMat& pauli_z() {
    static const CMat m = [] {
        CMat p(2, 2);
        p(0, 0) = 1.0;
        p(1, 1) = -1.0;
        return p;
    }();
    return m;
}

CMat tensor_product(const CMat& a, const CMat& b) {
    CMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cd aij = a(i, j);
            if (aij == cd(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

Vec tensor_product(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    return r;
}

namespace {

// strides[s] = product of dims after subsystem s (row-major multi-index)
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
    return s;
}

}  // namespace

CMat embed_operator(const CMat& op, const std::vector<std::size_t>& positions,
                    const std::vector<std::size_t>& dims) {
    if (!op.square()) throw DimensionMismatch("embed_operator: op not square");
    std::size_t op_dim = 1;
    for (std::size_t p : positions) {
        if (p >= dims.size()) throw DimensionMismatch("embed_operator: position out of range");
        op_dim *= dims[p];
    }
    if (op_dim != op.rows()) throw DimensionMismatch("embed_operator: op dim mismatch");

    std::vector<std::size_t> rest;
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (std::find(positions.begin(), positions.end(), s) == positions.end()) rest.push_back(s);

    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    std::size_t rest_dim = total / op_dim;

    const auto strides = strides_of(dims);

    // index of the full space from a sub-index over `subs` (row-major over subs)
    auto expand = [&](const std::vector<std::size_t>& subs, std::size_t idx) {
        std::size_t full = 0;
        for (std::size_t s = subs.size(); s-- > 0;) {
            std::size_t d = dims[subs[s]];
            full += (idx % d) * strides[subs[s]];
            idx /= d;
        }
        return full;
    };

    CMat r(total, total);
    for (std::size_t ro = 0; ro < op.rows(); ++ro)
        for (std::size_t co = 0; co < op.cols(); ++co) {
            const cd v = op(ro, co);
            if (v == cd(0.0, 0.0)) continue;
            const std::size_t base_r = expand(positions, ro);
            const std::size_t base_c = expand(positions, co);
            for (std::size_t e = 0; e < rest_dim; ++e) {
                const std::size_t off = expand(rest, e);
                r(base_r + off, base_c + off) = v;
            }
        }
    return r;
}

CMat partial_trace(const CMat& rho, const std::vector<std::size_t>& keep,
                   const std::vector<std::size_t>& dims) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (!rho.square() || rho.rows() != total) throw DimensionMismatch("partial_trace: dims");

    std::vector<std::size_t> rest;
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (std::find(keep.begin(), keep.end(), s) == keep.end()) rest.push_back(s);

    std::size_t keep_dim = 1;
    for (std::size_t p : keep) keep_dim *= dims[p];
    std::size_t rest_dim = total / keep_dim;

    const auto strides = strides_of(dims);
    auto expand = [&](const std::vector<std::size_t>& subs, std::size_t idx) {
        std::size_t full = 0;
        for (std::size_t s = subs.size(); s-- > 0;) {
            std::size_t d = dims[subs[s]];
            full += (idx % d) * strides[subs[s]];
            idx /= d;
        }
        return full;
    };

    CMat r(keep_dim, keep_dim);
    for (std::size_t i = 0; i < keep_dim; ++i) {
        const std::size_t bi = expand(keep, i);
        for (std::size_t j = 0; j < keep_dim; ++j) {
            const std::size_t bj = expand(keep, j);
            cd acc = 0.0;
            for (std::size_t e = 0; e < rest_dim; ++e) {
                const std::size_t off = expand(rest, e);
                acc += rho(bi + off, bj + off);
            }
            r(i, j) = acc;
        }
    }
    return r;
}

Vec max_entangled_state(std::size_t d) {
    if (d < 2) throw InvalidParameter("max_entangled_state: d < 2");
    Vec v(d * d, 0.0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) v[k * d + k] = amp;
    return v;
}

cd expectation(const Vec& psi, const CMat& op) {
    if (op.cols() != psi.size()) throw DimensionMismatch("expectation");
    return inner(psi, op * psi);
}

cd expectation_density(const CMat& rho, const CMat& op) {
    if (rho.cols() != op.rows()) throw DimensionMismatch("expectation_density");
    return (rho * op).trace();
}

CMat anticommutator(const CMat& a, const CMat& b) {
    if (!a.square() || a.rows() != b.rows() || !b.square())
        throw DimensionMismatch("anticommutator");
    return a * b + b * a;
}

double commutator_norm(const CMat& a, const CMat& b) {
    if (!a.square() || a.rows() != b.rows() || !b.square())
        throw DimensionMismatch("commutator_norm");
    return (a * b - b * a).max_abs();
}

bool is_hermitian(const CMat& m, double tol) {
    if (!m.square()) return false;
    return (m - m.adjoint()).max_abs() <= tol;
}

bool is_observable(const CMat& m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    return (m * m - CMat::identity(m.rows())).max_abs() <= tol;
}

CMat outer(const Vec& psi) {
    CMat r(psi.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < psi.size(); ++j) r(i, j) = psi[i] * std::conj(psi[j]);
    return r;
}

}  // namespace netcert
