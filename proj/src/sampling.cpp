#include "netcert/sampling.hpp"

#include <cmath>

#include "netcert/eigen.hpp"

namespace netcert {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// counter-based uniform in [0,1), keyed by (seed, tuple, shot)
double keyed_uniform(std::uint64_t seed, std::uint64_t tuple, std::uint64_t shot) {
    const std::uint64_t h = mix64(seed ^ mix64(tuple ^ mix64(shot)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// +-1 eigenprojectors with sign(0) = +1
std::pair<CMat, CMat> sign_projectors(const CMat& obs) {
    const EigenResult e = hermitian_eigen(obs);
    const std::size_t n = obs.rows();
    CMat plus(n, n), minus(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = e.vectors(i, k);
        CMat proj = outer(v);
        if (e.values[k] >= 0.0)
            plus = plus + proj;
        else
            minus = minus + proj;
    }
    return {plus, minus};
}

}  // namespace

std::vector<InputTuple> enumerate_input_tuples(const Scenario& scenario) {
    const int parties = scenario.edge_party_count();
    const int edge_inputs = scenario.edge_input_count();
    const int terms = scenario.central_input_count();

    std::vector<InputTuple> tuples;
    std::vector<int> xs(parties, 0);
    while (true) {
        for (int i = 0; i < terms; ++i) tuples.push_back({xs, i});
        int p = parties - 1;
        while (p >= 0 && ++xs[p] == edge_inputs) xs[p--] = 0;
        if (p < 0) break;
    }
    return tuples;
}

OutcomeDistribution outcome_distribution(const Realization& real, const InputTuple& inputs) {
    const int parties = real.scenario.edge_party_count();
    if (static_cast<int>(inputs.edge_inputs.size()) != parties)
        throw InvalidParameter("outcome_distribution: wrong number of edge inputs");

    std::vector<std::pair<CMat, CMat>> projectors;
    for (int p = 0; p < parties; ++p)
        projectors.push_back(sign_projectors(real.edge_observables[p][inputs.edge_inputs[p]]));
    projectors.push_back(sign_projectors(real.central_observables[inputs.central_input]));

    const int total_parties = parties + 1;
    OutcomeDistribution dist;
    dist.probabilities.resize(std::size_t{1} << total_parties);
    for (std::size_t o = 0; o < dist.probabilities.size(); ++o) {
        CMat op = CMat::identity(real.total_dim());
        for (int p = 0; p < total_parties; ++p) {
            const bool negative = (o >> (total_parties - 1 - p)) & 1u;
            const CMat& proj = negative ? projectors[p].second : projectors[p].first;
            const auto pos =
                p < parties ? real.edge_positions(p) : real.central_positions();
            op = embed_operator(proj, pos, real.dims) * op;
        }
        dist.probabilities[o] = std::max(0.0, state_expectation(real, op));
    }
    return dist;
}

OutcomeCounts sample_counts(const Realization& real, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw InvalidParameter("sample_counts: shots must be >= 1");
    const auto tuples = enumerate_input_tuples(real.scenario);
    const std::uint64_t base = shots / tuples.size();
    const std::uint64_t rem = shots % tuples.size();

    OutcomeCounts counts;
    counts.shots = shots;
    counts.seed = seed;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const OutcomeDistribution dist = outcome_distribution(real, tuples[t]);
        std::vector<double> cdf(dist.probabilities.size());
        double acc = 0.0;
        for (std::size_t o = 0; o < cdf.size(); ++o) {
            acc += dist.probabilities[o];
            cdf[o] = acc;
        }
        std::vector<std::uint64_t> c(dist.probabilities.size(), 0);
        const std::uint64_t n = base + (t < rem ? 1 : 0);
        for (std::uint64_t s = 0; s < n; ++s) {
            const double u = keyed_uniform(seed, t, s) * acc;
            std::size_t o = 0;
            while (o + 1 < cdf.size() && u >= cdf[o]) ++o;
            ++c[o];
        }
        counts.counts.push_back(std::move(c));
    }
    return counts;
}

double exact_raw_correlator(const Realization& real, const InputTuple& inputs) {
    const int parties = real.scenario.edge_party_count();
    CMat op = embed_operator(real.central_observables[inputs.central_input],
                             real.central_positions(), real.dims);
    for (int p = 0; p < parties; ++p)
        op = embed_operator(real.edge_observables[p][inputs.edge_inputs[p]],
                            real.edge_positions(p), real.dims) *
             op;
    return state_expectation(real, op);
}

EstimationResult sample_and_estimate(const Realization& real, std::uint64_t shots,
                                     std::uint64_t seed) {
    EstimationResult res;
    res.counts = sample_counts(real, shots, seed);
    const auto tuples = enumerate_input_tuples(real.scenario);
    const Scenario& sc = real.scenario;
    const auto signs = correlator_sign_vectors(sc);
    const int terms = sc.central_input_count();

    res.table.values.assign(terms, 0.0);
    res.table.std_errors.assign(terms, 0.0);

    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& c = res.counts.counts[t];
        std::uint64_t n = 0;
        for (std::uint64_t v : c) n += v;
        double est = 0.0, se = 1.0;
        if (n > 0) {
            long long parity_sum = 0;
            for (std::size_t o = 0; o < c.size(); ++o)
                parity_sum += (__builtin_popcountll(o) % 2 ? -1 : 1) *
                              static_cast<long long>(c[o]);
            est = static_cast<double>(parity_sum) / static_cast<double>(n);
            se = std::sqrt(std::max(0.0, 1.0 - est * est) / static_cast<double>(n));
        }
        res.raw_correlators.push_back(est);
        res.raw_std_errors.push_back(se);

        int coeff = 1;
        for (std::size_t p = 0; p < tuples[t].edge_inputs.size(); ++p)
            coeff *= signs[tuples[t].central_input][tuples[t].edge_inputs[p]];
        res.table.values[tuples[t].central_input] += coeff * est;
        res.table.std_errors[tuples[t].central_input] += se * se;
    }
    for (int i = 0; i < terms; ++i) res.table.std_errors[i] = std::sqrt(res.table.std_errors[i]);
    return res;
}

DeltaEstimate delta_estimate(const Scenario& scenario, const CorrelatorTable& table) {
    DeltaEstimate d;
    d.value = delta_from_correlators(scenario, table);
    if (table.std_errors.empty()) return d;
    const double inv_n = scenario.kind == NetworkKind::star ? 1.0 / scenario.n : 0.5;
    double var = 0.0;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        const double mag = std::max(std::abs(table.values[i]), 1e-12);
        const double deriv = inv_n * std::pow(mag, inv_n - 1.0);
        var += deriv * deriv * table.std_errors[i] * table.std_errors[i];
    }
    d.std_error = std::sqrt(var);
    return d;
}

}  // namespace netcert
