#include "netcert/realization.hpp"

#include <cmath>

namespace netcert {

std::size_t Realization::total_dim() const {
    std::size_t t = 1;
    for (std::size_t d : dims) t *= d;
    return t;
}

std::vector<std::size_t> Realization::edge_positions(int party) const {
    if (scenario.kind == NetworkKind::star) return {static_cast<std::size_t>(party)};
    return {party == 0 ? std::size_t{0} : dims.size() - 1};
}

std::vector<std::size_t> Realization::central_positions() const {
    std::vector<std::size_t> pos;
    if (scenario.kind == NetworkKind::star) {
        for (std::size_t s = scenario.n; s < dims.size(); ++s) pos.push_back(s);
    } else {
        for (std::size_t s = 1; s + 1 < dims.size(); ++s) pos.push_back(s);
    }
    return pos;
}

std::vector<CMat> gamma_generators(int m) {
    if (m < 2) throw InvalidParameter("gamma_generators: m < 2");
    if (m == 2) return {pauli_z(), pauli_x()};  // matches the qubit star observables

    const int sites = m / 2;
    std::vector<CMat> gammas;
    auto chain = [&](const CMat& op, int site) {
        CMat g = CMat::identity(1);
        for (int s = 0; s < sites; ++s) {
            if (s < site)
                g = tensor_product(g, pauli_z());
            else if (s == site)
                g = tensor_product(g, op);
            else
                g = tensor_product(g, CMat::identity(2));
        }
        return g;
    };
    for (int site = 0; site < sites; ++site) {
        gammas.push_back(chain(pauli_x(), site));
        gammas.push_back(chain(pauli_y(), site));
    }
    if (m % 2 == 1) {
        CMat g = CMat::identity(1);
        for (int s = 0; s < sites; ++s) g = tensor_product(g, pauli_z());
        gammas.push_back(g);
    }
    gammas.resize(m);
    return gammas;
}

namespace {

Realization optimal_star(const Scenario& scenario) {
    const int n = scenario.n;
    Realization r;
    r.scenario = scenario;
    r.dims.assign(2 * n, 2);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const CMat a1 = cd(inv_sqrt2) * (pauli_z() + pauli_x());
    const CMat a2 = cd(inv_sqrt2) * (pauli_z() - pauli_x());
    r.edge_observables.assign(n, {a1, a2});

    CMat b1 = CMat::identity(1), b2 = CMat::identity(1);
    for (int k = 0; k < n; ++k) {
        b1 = tensor_product(b1, pauli_z());
        b2 = tensor_product(b2, pauli_x());
    }
    r.central_observables = {b1, b2};

    // |phi+> between edge k (subsystem k) and central half k (subsystem n+k)
    const std::size_t total = std::size_t{1} << (2 * n);
    r.state_vector.assign(total, 0.0);
    const double amp = std::pow(2.0, -0.5 * n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        const std::size_t edge_bits = idx >> n;
        const std::size_t central_bits = idx & ((std::size_t{1} << n) - 1);
        if (edge_bits == central_bits) r.state_vector[idx] = amp;
    }
    r.pure = true;
    return r;
}

Realization optimal_bilocal(const Scenario& scenario) {
    const int m = scenario.m;
    Realization r;
    r.scenario = scenario;
    const std::size_t d = std::size_t{1} << (m / 2);
    r.dims = {d, d, d, d};

    const auto gammas = gamma_generators(m);
    const auto signs = sign_matrix(scenario.scheme);
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));

    std::vector<CMat> edge;
    for (std::size_t x = 0; x < scenario.scheme.strings.size(); ++x) {
        CMat a(d, d);
        for (int rr = 0; rr < m; ++rr) a = a + cd(signs[rr][x] * inv_sqrt_m) * gammas[rr];
        edge.push_back(a);
    }
    r.edge_observables = {edge, edge};

    // B_i on the central halves; transposed generators make every <M_i> = +1
    for (int i = 0; i < m; ++i) {
        const CMat gt = gammas[i].transpose();
        r.central_observables.push_back(tensor_product(gt, gt));
    }

    const Vec phi = max_entangled_state(d);
    r.state_vector = tensor_product(phi, phi);
    r.pure = true;
    return r;
}

}  // namespace

Realization optimal_realization(const Scenario& scenario) {
    return scenario.kind == NetworkKind::star ? optimal_star(scenario)
                                              : optimal_bilocal(scenario);
}

CMat edge_term_operator(const Realization& real, int party, int central_input) {
    const auto signs = correlator_sign_vectors(real.scenario);
    const auto& obs = real.edge_observables[party];
    CMat k(obs[0].rows(), obs[0].cols());
    for (std::size_t x = 0; x < obs.size(); ++x)
        k = k + cd(static_cast<double>(signs[central_input][x])) * obs[x];
    return k;
}

CMat term_operator(const Realization& real, int central_input) {
    CMat op = embed_operator(real.central_observables[central_input],
                             real.central_positions(), real.dims);
    for (int p = 0; p < real.scenario.edge_party_count(); ++p)
        op = embed_operator(edge_term_operator(real, p, central_input),
                            real.edge_positions(p), real.dims) *
             op;
    return op;
}

double state_expectation(const Realization& real, const CMat& op) {
    if (real.pure) return expectation(real.state_vector, op).real();
    return expectation_density(real.state_density, op).real();
}

CorrelatorTable correlator_table(const Realization& real) {
    CorrelatorTable t;
    const int terms = real.scenario.central_input_count();
    for (int i = 0; i < terms; ++i)
        t.values.push_back(state_expectation(real, term_operator(real, i)));
    return t;
}

std::vector<std::vector<double>> omega_norms(const Realization& real) {
    if (!real.pure) throw NotApplicable("omega_norms: defined on state vectors only");
    const int terms = real.scenario.central_input_count();
    const int parties = real.scenario.edge_party_count();
    std::vector<std::vector<double>> omega(terms, std::vector<double>(parties));
    for (int i = 0; i < terms; ++i)
        for (int p = 0; p < parties; ++p) {
            const CMat k =
                embed_operator(edge_term_operator(real, p, i), real.edge_positions(p), real.dims);
            omega[i][p] = norm2(k * real.state_vector);
        }
    return omega;
}

Realization apply_visibility(const Realization& real, double v_source1, double v_source2) {
    if (!real.pure) throw InvalidParameter("apply_visibility: pure-state realization required");
    if (v_source1 < 0.0 || v_source1 > 1.0 || v_source2 < 0.0 || v_source2 > 1.0)
        throw InvalidParameter("apply_visibility: visibility outside [0,1]");

    if (real.dims.size() != 4 || real.dims[0] != real.dims[1] ||
        real.dims[2] != real.dims[3] || real.dims[0] != real.dims[2])
        throw InvalidParameter("apply_visibility: canonical two-source layout required");
    std::vector<std::size_t> pos1, pos2;
    if (real.scenario.kind == NetworkKind::bilocal) {
        pos1 = {0, 1};
        pos2 = {2, 3};
    } else if (real.scenario.n == 2) {
        pos1 = {0, 2};
        pos2 = {1, 3};
    } else {
        throw InvalidParameter("apply_visibility: star networks supported for n = 2 only");
    }

    const std::size_t d = real.dims[0];
    const Vec phi = max_entangled_state(d);
    auto source_state = [&](double v) {
        return cd(v) * outer(phi) +
               cd((1.0 - v) / static_cast<double>(d * d)) * CMat::identity(d * d);
    };

    Realization out = real;
    out.pure = false;
    out.state_vector.clear();
    out.state_density = embed_operator(source_state(v_source1), pos1, real.dims) *
                        embed_operator(source_state(v_source2), pos2, real.dims);
    return out;
}

}  // namespace netcert
