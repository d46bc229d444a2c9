#include <random>

#include "doctest.h"
#include "netcert/eigen.hpp"

using namespace netcert;

namespace {

CMat random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = cd(g(rng), g(rng));
    return cd(0.5) * (h + h.adjoint());
}

}  // namespace

TEST_CASE("pauli matrices diagonalize exactly") {
    const EigenResult ez = hermitian_eigen(pauli_z());
    CHECK(ez.values[0] == doctest::Approx(1.0));
    CHECK(ez.values[1] == doctest::Approx(-1.0));
    const EigenResult ey = hermitian_eigen(pauli_y());
    CHECK(ey.values[0] == doctest::Approx(1.0));
    CHECK(ey.values[1] == doctest::Approx(-1.0));
}

TEST_CASE("eigendecomposition reconstructs random hermitian matrices") {
    std::mt19937_64 rng(17);
    for (const std::size_t n : {2u, 3u, 5u, 8u, 16u}) {
        const CMat h = random_hermitian(n, rng);
        const EigenResult e = hermitian_eigen(h);
        // descending order
        for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] >= e.values[k]);
        // unitarity
        CHECK((e.vectors.adjoint() * e.vectors - CMat::identity(n)).max_abs() < 1e-12);
        // reconstruction
        const CMat d = CMat::diag(e.values);
        CHECK((e.vectors * d * e.vectors.adjoint() - h).max_abs() < 1e-11);
    }
}

TEST_CASE("top eigenvector maximizes the quadratic form") {
    std::mt19937_64 rng(19);
    const CMat h = random_hermitian(6, rng);
    const EigenResult e = hermitian_eigen(h);
    Vec top(6);
    for (std::size_t i = 0; i < 6; ++i) top[i] = e.vectors(i, 0);
    CHECK(std::abs(expectation(top, h).real() - e.values[0]) < 1e-11);
    for (int trial = 0; trial < 20; ++trial) {
        Vec v(6);
        std::normal_distribution<double> g(0.0, 1.0);
        for (auto& a : v) a = cd(g(rng), g(rng));
        v = cd(1.0 / norm2(v)) * v;
        CHECK(expectation(v, h).real() <= e.values[0] + 1e-11);
    }
}

TEST_CASE("sign_operator is an involution with the right action") {
    std::mt19937_64 rng(23);
    const CMat h = random_hermitian(5, rng);
    const CMat s = sign_operator(h);
    CHECK(is_observable(s, 1e-10));
    // sign(H) commutes with H and sign(H) * H is positive semidefinite
    CHECK(commutator_norm(s, h) < 1e-10);
    const EigenResult e = hermitian_eigen(cd(0.5) * (s * h + h * s));
    CHECK(e.values.back() > -1e-10);
}

TEST_CASE("sign_operator maps zero eigenvalues to +1") {
    CMat h(2, 2);  // rank-deficient
    h(0, 0) = 1.0;
    const CMat s = sign_operator(h);
    CHECK((s - CMat::identity(2)).max_abs() < 1e-12);
}
