#include "netcert/scenario.hpp"

#include <cmath>

namespace netcert {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

Scenario build_star_scenario(int n) {
    if (n < 2) throw InvalidParameter("star scenario: n < 2");
    Scenario s;
    s.kind = NetworkKind::star;
    s.n = n;
    s.m = 2;
    s.classical_bound = 2.0;
    s.quantum_optimum = 2.0 * std::sqrt(2.0);
    return s;
}

Scenario build_bilocal_scenario(int m, TransversalPolicy policy) {
    if (m < 2) throw InvalidParameter("bilocal scenario: m < 2");
    Scenario s;
    s.kind = NetworkKind::bilocal;
    s.n = 2;
    s.m = m;
    s.scheme = generate_transversal(m, policy);
    s.classical_bound = static_cast<double>(m) *
                        static_cast<double>(binomial(m - 1, (m - 1) / 2));
    s.quantum_optimum = std::ldexp(1.0, m - 1) * std::sqrt(static_cast<double>(m));
    return s;
}

std::vector<std::vector<int>> correlator_sign_vectors(const Scenario& scenario) {
    if (scenario.kind == NetworkKind::star) return {{1, 1}, {1, -1}};
    return sign_matrix(scenario.scheme);
}

double delta_from_correlators(const Scenario& scenario, const CorrelatorTable& table) {
    const std::size_t expected =
        scenario.kind == NetworkKind::star ? 2 : static_cast<std::size_t>(scenario.m);
    if (table.values.size() != expected)
        throw DimensionMismatch("delta_from_correlators: table length mismatch");
    double delta = 0.0;
    if (scenario.kind == NetworkKind::star) {
        for (double v : table.values) delta += std::pow(std::abs(v), 1.0 / scenario.n);
    } else {
        for (double v : table.values) delta += std::sqrt(std::abs(v));
    }
    return delta;
}

}  // namespace netcert
