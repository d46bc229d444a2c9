#include "netcert/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace netcert {

namespace {

using json = nlohmann::ordered_json;

json matrix_to_json(const CMat& mat) {
    json rows = json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < mat.cols(); ++j)
            row.push_back({mat(i, j).real(), mat(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

CMat matrix_from_json(const json& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw InvalidParameter("realization file: empty matrix");
    CMat mat(n, rows.at(0).size());
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (row.size() != mat.cols())
            throw InvalidParameter("realization file: ragged matrix");
        for (std::size_t j = 0; j < mat.cols(); ++j)
            mat(i, j) = cd(row.at(j).at(0).get<double>(), row.at(j).at(1).get<double>());
    }
    return mat;
}

}  // namespace

std::string realization_to_json(const Realization& real) {
    json doc;
    json sc;
    if (real.scenario.kind == NetworkKind::star) {
        sc["kind"] = "star";
        sc["n"] = real.scenario.n;
    } else {
        sc["kind"] = "bilocal";
        sc["m"] = real.scenario.m;
        sc["policy"] = to_string(real.scenario.scheme.policy);
    }
    doc["scenario"] = std::move(sc);
    doc["dims"] = real.dims;
    doc["encoding_strings"] = real.scenario.kind == NetworkKind::bilocal
                                  ? real.scenario.scheme.strings
                                  : std::vector<std::string>{};

    json parties = json::array();
    for (const auto& obs : real.edge_observables) {
        json mats = json::array();
        for (const CMat& a : obs) mats.push_back(matrix_to_json(a));
        parties.push_back(std::move(mats));
    }
    json central = json::array();
    for (const CMat& b : real.central_observables) central.push_back(matrix_to_json(b));
    parties.push_back(std::move(central));
    doc["observables"] = std::move(parties);

    json state;
    if (real.pure) {
        json amps = json::array();
        for (const cd& a : real.state_vector) amps.push_back({a.real(), a.imag()});
        state["vector"] = std::move(amps);
    } else {
        state["density"] = matrix_to_json(real.state_density);
    }
    doc["state"] = std::move(state);
    doc["convention"] = "transpose-central";
    return doc.dump(2) + "\n";
}

Realization realization_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("realization file: ") + e.what());
    }
    try {
        Realization real;
        const json& sc = doc.at("scenario");
        const std::string kind = sc.at("kind").get<std::string>();
        if (kind == "star") {
            real.scenario = build_star_scenario(sc.at("n").get<int>());
        } else if (kind == "bilocal") {
            real.scenario = build_bilocal_scenario(
                sc.at("m").get<int>(),
                transversal_policy_from_string(sc.at("policy").get<std::string>()));
        } else {
            throw InvalidParameter("realization file: unknown scenario kind");
        }
        real.dims = doc.at("dims").get<std::vector<std::size_t>>();

        const json& parties = doc.at("observables");
        const int edge_parties = real.scenario.edge_party_count();
        if (static_cast<int>(parties.size()) != edge_parties + 1)
            throw InvalidParameter("realization file: wrong party count");
        for (int p = 0; p < edge_parties; ++p) {
            std::vector<CMat> obs;
            for (const json& mat : parties.at(p)) obs.push_back(matrix_from_json(mat));
            if (static_cast<int>(obs.size()) != real.scenario.edge_input_count())
                throw InvalidParameter("realization file: wrong edge input count");
            real.edge_observables.push_back(std::move(obs));
        }
        for (const json& mat : parties.at(edge_parties))
            real.central_observables.push_back(matrix_from_json(mat));
        if (static_cast<int>(real.central_observables.size()) !=
            real.scenario.central_input_count())
            throw InvalidParameter("realization file: wrong central input count");

        const json& state = doc.at("state");
        if (state.contains("vector")) {
            real.pure = true;
            for (const json& a : state.at("vector"))
                real.state_vector.push_back(cd(a.at(0).get<double>(), a.at(1).get<double>()));
            if (real.state_vector.size() != real.total_dim())
                throw DimensionMismatch("realization file: state/dims mismatch");
        } else {
            real.pure = false;
            real.state_density = matrix_from_json(state.at("density"));
            if (real.state_density.rows() != real.total_dim())
                throw DimensionMismatch("realization file: state/dims mismatch");
        }
        return real;
    } catch (const json::exception& e) {
        throw InvalidParameter(std::string("realization file: ") + e.what());
    }
}

void write_realization(const Realization& real, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParameter("cannot open for writing: " + path);
    out << realization_to_json(real);
}

Realization read_realization(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return realization_from_json(buf.str());
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace netcert
