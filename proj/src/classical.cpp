#include "netcert/classical.hpp"

#include <cmath>
#include <cstdlib>

namespace netcert {

std::uint64_t eta_closed_form(int m) {
    if (m < 2) throw InvalidParameter("eta_closed_form: m < 2");
    return static_cast<std::uint64_t>(m) * binomial(m - 1, (m - 1) / 2);
}

namespace {

// per-term sums alpha_i(a) = sum_x S[i][x] a_x for assignment bitmask a
std::vector<long> term_sums(const std::vector<std::vector<int>>& s, std::uint32_t mask) {
    std::vector<long> alpha(s.size(), 0);
    const std::size_t cols = s[0].size();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t x = 0; x < cols; ++x)
            alpha[i] += (mask >> x) & 1u ? -s[i][x] : s[i][x];
    return alpha;
}

}  // namespace

EtaResult eta_brute_force(const EncodingScheme& scheme) {
    if (scheme.m > 5)
        throw CapacityExceeded("eta_brute_force: m > 5 (assignment space too large)");
    const auto s = sign_matrix(scheme);
    const std::uint32_t count = 1u << scheme.strings.size();
    EtaResult best;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        const auto alpha = term_sums(s, mask);
        std::uint64_t eta = 0;
        for (long a : alpha) eta += static_cast<std::uint64_t>(std::labs(a));
        if (eta > best.max_value) {
            best.max_value = eta;
            best.witness_mask = mask;
        }
    }
    return best;
}

double classical_bound(const Scenario& scenario) {
    if (scenario.kind == NetworkKind::star) return 2.0;
    return static_cast<double>(eta_closed_form(scenario.m));
}

namespace {

double star_brute_force(int n) {
    if (n > 8) throw CapacityExceeded("brute_force_delta: star n > 8");
    // each edge party picks (a_1, a_2) in {+-1}^2; central signs drop under |.|
    double best = 0.0;
    const std::uint32_t count = 1u << (2 * n);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        long p1 = 1, p2 = 1;
        for (int k = 0; k < n; ++k) {
            const int a1 = (mask >> (2 * k)) & 1u ? -1 : 1;
            const int a2 = (mask >> (2 * k + 1)) & 1u ? -1 : 1;
            p1 *= a1 + a2;
            p2 *= a1 - a2;
        }
        const double v = std::pow(std::abs(static_cast<double>(p1)), 1.0 / n) +
                         std::pow(std::abs(static_cast<double>(p2)), 1.0 / n);
        best = std::max(best, v);
    }
    return best;
}

double bilocal_brute_force(const Scenario& scenario) {
    const auto s = sign_matrix(scenario.scheme);
    const std::size_t inputs = scenario.scheme.strings.size();
    const std::uint32_t count = 1u << inputs;

    if (scenario.m <= 4) {
        double best = 0.0;
        for (std::uint32_t a = 0; a < count; ++a) {
            const auto alpha = term_sums(s, a);
            for (std::uint32_t c = 0; c < count; ++c) {
                const auto gamma = term_sums(s, c);
                double v = 0.0;
                for (std::size_t i = 0; i < alpha.size(); ++i)
                    v += std::sqrt(static_cast<double>(std::labs(alpha[i]) * std::labs(gamma[i])));
                best = std::max(best, v);
            }
        }
        return best;
    }
    if (scenario.m == 5) {
        // diagonal reduction c = a; the joint maximum sits on the diagonal
        double best = 0.0;
        for (std::uint32_t a = 0; a < count; ++a) {
            const auto alpha = term_sums(s, a);
            double v = 0.0;
            for (long x : alpha) v += static_cast<double>(std::labs(x));
            best = std::max(best, v);
        }
        return best;
    }
    throw CapacityExceeded("brute_force_delta: bilocal m > 5");
}

}  // namespace

DeltaResult brute_force_delta(const Scenario& scenario) {
    DeltaResult r;
    r.max_value = scenario.kind == NetworkKind::star ? star_brute_force(scenario.n)
                                                     : bilocal_brute_force(scenario);
    return r;
}

}  // namespace netcert
