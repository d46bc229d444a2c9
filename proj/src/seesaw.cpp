#include "netcert/seesaw.hpp"

#include <cmath>
#include <random>

namespace netcert {

namespace {

CMat random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = cd(g(rng), g(rng));
    return cd(0.5) * (h + h.adjoint());
}

Vec random_state(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(n);
    for (auto& a : v) a = cd(g(rng), g(rng));
    const double nrm = norm2(v);
    return cd(1.0 / nrm) * v;
}

struct Layout {
    std::size_t central_dim = 1;
    std::vector<std::size_t> edge_dims;
};

Layout layout_of(const Scenario& sc, const std::vector<std::size_t>& dims) {
    Layout l;
    if (sc.kind == NetworkKind::star) {
        if (dims.size() < static_cast<std::size_t>(sc.n) + 1)
            throw InvalidParameter("seesaw: need at least n+1 subsystem dims");
        for (int k = 0; k < sc.n; ++k) l.edge_dims.push_back(dims[k]);
        for (std::size_t s = sc.n; s < dims.size(); ++s) l.central_dim *= dims[s];
    } else {
        if (dims.size() < 3)
            throw InvalidParameter("seesaw: need at least 3 subsystem dims");
        l.edge_dims = {dims.front(), dims.back()};
        for (std::size_t s = 1; s + 1 < dims.size(); ++s) l.central_dim *= dims[s];
    }
    return l;
}

}  // namespace

SeesawResult seesaw_optimize(const Scenario& scenario, const SeesawConfig& config) {
    if (config.restarts < 1 || config.tol <= 0.0 || config.weight_floor <= 0.0)
        throw InvalidParameter("seesaw: bad config");
    std::size_t total = 1;
    for (std::size_t d : config.dims) {
        if (d < 1) throw InvalidParameter("seesaw: dims must be >= 1");
        total *= d;
    }
    if (total > (std::size_t{1} << 12)) throw CapacityExceeded("seesaw: total dimension > 2^12");

    const Layout layout = layout_of(scenario, config.dims);
    const int parties = scenario.edge_party_count();
    const int edge_inputs = scenario.edge_input_count();
    const int terms = scenario.central_input_count();
    const double inv_n = scenario.kind == NetworkKind::star ? 1.0 / scenario.n : 0.5;

    SeesawResult result;
    result.best_value = -1.0;

    for (int restart = 0; restart < config.restarts; ++restart) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(restart));

        Realization real;
        real.scenario = scenario;
        real.dims = config.dims;
        real.pure = true;
        for (int p = 0; p < parties; ++p) {
            std::vector<CMat> obs;
            for (int x = 0; x < edge_inputs; ++x)
                obs.push_back(sign_operator(random_hermitian(layout.edge_dims[p], rng)));
            real.edge_observables.push_back(std::move(obs));
        }
        for (int i = 0; i < terms; ++i)
            real.central_observables.push_back(
                sign_operator(random_hermitian(layout.central_dim, rng)));
        real.state_vector = random_state(total, rng);

        const auto signs = correlator_sign_vectors(scenario);
        SeesawTrace trace;
        const auto objective = [&] {
            return delta_from_correlators(scenario, correlator_table(real));
        };
        double current = objective();
        double prev = -1.0;

        for (int sweep = 0; sweep < config.max_sweeps; ++sweep) {
            // (a) tangent weights of the current objective
            std::vector<double> w(terms);
            for (int i = 0; i < terms; ++i) {
                const double j = state_expectation(real, term_operator(real, i));
                const double mag = std::max(std::abs(j), config.weight_floor);
                w[i] = (j >= 0.0 ? 1.0 : -1.0) * inv_n * std::pow(mag, inv_n - 1.0);
            }

            // each block update is a candidate; the linearized step can
            // overshoot the true objective, so reject steps that lower it

            // (b) state <- top eigenvector of the weighted Bell operator
            {
                CMat bell(total, total);
                for (int i = 0; i < terms; ++i) bell = bell + cd(w[i]) * term_operator(real, i);
                const EigenResult eig = hermitian_eigen(bell);
                const Vec saved = real.state_vector;
                for (std::size_t k = 0; k < total; ++k) real.state_vector[k] = eig.vectors(k, 0);
                const double cand = objective();
                if (cand < current)
                    real.state_vector = saved;
                else
                    current = cand;
            }

            const CMat rho = outer(real.state_vector);

            // (c) observables <- sign of their effective operators
            for (int p = 0; p < parties; ++p) {
                const auto pos = real.edge_positions(p);
                // environment operator of each term, excluding party p
                std::vector<CMat> env;
                for (int i = 0; i < terms; ++i) {
                    CMat k = embed_operator(real.central_observables[i],
                                            real.central_positions(), real.dims);
                    for (int p2 = 0; p2 < parties; ++p2)
                        if (p2 != p)
                            k = embed_operator(edge_term_operator(real, p2, i),
                                               real.edge_positions(p2), real.dims) *
                                k;
                    env.push_back(partial_trace(k * rho, pos, real.dims));
                }
                const std::vector<CMat> saved = real.edge_observables[p];
                for (int x = 0; x < edge_inputs; ++x) {
                    CMat eff(layout.edge_dims[p], layout.edge_dims[p]);
                    for (int i = 0; i < terms; ++i)
                        eff = eff + cd(w[i] * signs[i][x]) * env[i];
                    eff = cd(0.5) * (eff + eff.adjoint());
                    real.edge_observables[p][x] = sign_operator(eff);
                }
                const double cand = objective();
                if (cand < current)
                    real.edge_observables[p] = saved;
                else
                    current = cand;
            }
            {
                // each term holds its own central observable, so this block
                // maximizes every |J_i| independently and cannot overshoot
                const std::vector<CMat> saved = real.central_observables;
                for (int i = 0; i < terms; ++i) {
                    CMat k = CMat::identity(total);
                    for (int p = 0; p < parties; ++p)
                        k = embed_operator(edge_term_operator(real, p, i),
                                           real.edge_positions(p), real.dims) *
                            k;
                    CMat eff = partial_trace(k * rho, real.central_positions(), real.dims);
                    eff = cd(0.5 * w[i]) * (eff + eff.adjoint());
                    real.central_observables[i] = sign_operator(eff);
                }
                const double cand = objective();
                if (cand < current)
                    real.central_observables = saved;
                else
                    current = cand;
            }

            trace.objectives.push_back(current);
            if (prev >= 0.0 && current - prev < config.tol) break;
            prev = current;
        }

        const double value = trace.objectives.empty() ? 0.0 : trace.objectives.back();
        if (value > result.best_value) {
            result.best_value = value;
            result.best = real;
        }
        result.traces.push_back(std::move(trace));
    }
    return result;
}

}  // namespace netcert
