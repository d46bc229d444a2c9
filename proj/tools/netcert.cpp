#include <cmath>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "netcert/acceptance.hpp"
#include "netcert/classical.hpp"
#include "netcert/io.hpp"
#include "netcert/sampling.hpp"
#include "netcert/seesaw.hpp"
#include "netcert/verifier.hpp"

namespace {

using namespace netcert;
using ojson = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;

struct ScenarioOpts {
    std::string scenario = "bilocal";
    int n = 2;
    int m = 3;
    std::string policy = "lex-first-zero";
};

void add_scenario_opts(CLI::App* cmd, ScenarioOpts& opts) {
    cmd->add_option("--scenario", opts.scenario, "star or bilocal")
        ->check(CLI::IsMember({"star", "bilocal"}));
    cmd->add_option("--n", opts.n, "star: number of edge parties");
    cmd->add_option("--m", opts.m, "bilocal: number of central inputs");
    cmd->add_option("--policy", opts.policy, "transversal policy")
        ->check(CLI::IsMember({"lex-first-zero", "minority-weight"}));
}

Scenario make_scenario(const ScenarioOpts& opts) {
    if (opts.scenario == "star") return build_star_scenario(opts.n);
    return build_bilocal_scenario(opts.m, transversal_policy_from_string(opts.policy));
}

double round12(double x) {
    // round half-to-even at 12 significant digits so text and JSON agree
    return std::strtod(format_double(x).c_str(), nullptr);
}

ojson report_to_json(const CertificationReport& rep) {
    ojson doc;
    doc["delta"] = round12(rep.delta_value);
    doc["delta_target"] = round12(rep.delta_target);
    ojson correlators = ojson::array();
    for (double v : rep.correlators.values) correlators.push_back(round12(v));
    doc["correlators"] = std::move(correlators);
    ojson entries = ojson::array();
    for (const CheckEntry& e : rep.entries) {
        entries.push_back({{"name", e.name},
                           {"measured", round12(e.measured)},
                           {"expected", round12(e.expected)},
                           {"tolerance", e.tolerance},
                           {"pass", e.pass}});
    }
    doc["entries"] = std::move(entries);
    doc["overall"] = rep.overall;
    return doc;
}

void print_report_text(const CertificationReport& rep) {
    std::cout << "delta " << format_double(rep.delta_value) << " (target "
              << format_double(rep.delta_target) << ")\n";
    std::cout << "correlators";
    for (double v : rep.correlators.values) std::cout << ' ' << format_double(v);
    std::cout << '\n';
    for (const CheckEntry& e : rep.entries)
        std::cout << (e.pass ? "  ok   " : "  FAIL ") << e.name << " measured "
                  << format_double(e.measured) << " expected " << format_double(e.expected)
                  << '\n';
    std::cout << (rep.overall ? "certification passed\n" : "certification FAILED\n");
}

int run(int argc, char** argv) {
    CLI::App app{"Network Bell expression toolkit: bounds, realizations, certification"};
    app.require_subcommand(1);

    ScenarioOpts sopts;
    std::string in_path, out_path, format = "text", dims_arg;
    double tol_value = 1e-9;
    std::uint64_t seed = 0, shots = 100000;
    int restarts = 20;
    bool brute = false;

    CLI::App* bound = app.add_subcommand("bound", "classical bounds and quantum optimum");
    add_scenario_opts(bound, sopts);
    bound->add_flag("--brute-force", brute, "also scan deterministic strategies");

    CLI::App* realize = app.add_subcommand("realize", "write the optimal realization file");
    add_scenario_opts(realize, sopts);
    realize->add_option("--out", out_path, "output path")->required();

    CLI::App* certify_cmd = app.add_subcommand("certify", "certify a realization file");
    certify_cmd->add_option("--in", in_path, "realization file")->required();
    certify_cmd->add_option("--tol", tol_value, "value tolerance");
    certify_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* optimize = app.add_subcommand("optimize", "see-saw variational search");
    add_scenario_opts(optimize, sopts);
    optimize->add_option("--dims", dims_arg, "comma-separated subsystem dims")->required();
    optimize->add_option("--restarts", restarts, "random restarts");
    optimize->add_option("--seed", seed, "base seed");
    optimize->add_option("--out", out_path, "write the best realization here");

    CLI::App* sample = app.add_subcommand("sample", "finite-shot estimation");
    sample->add_option("--in", in_path, "realization file")->required();
    sample->add_option("--shots", shots, "total shots");
    sample->add_option("--seed", seed, "sampling seed");
    sample->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in acceptance suite");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitInvalid;
    }

    if (bound->parsed()) {
        const Scenario sc = make_scenario(sopts);
        std::cout << "classical " << format_double(sc.classical_bound) << ", quantum "
                  << format_double(sc.quantum_optimum) << '\n';
        if (brute) {
            std::cout << "brute-force classical " << format_double(brute_force_delta(sc).max_value)
                      << '\n';
        }
        return kExitPass;
    }
    if (realize->parsed()) {
        const Scenario sc = make_scenario(sopts);
        write_realization(optimal_realization(sc), out_path);
        std::cout << "wrote " << out_path << '\n';
        return kExitPass;
    }
    if (certify_cmd->parsed()) {
        const Realization real = read_realization(in_path);
        Tolerances tol;
        tol.value = tol_value;
        const CertificationReport rep = certify(real, tol);
        if (format == "json")
            std::cout << report_to_json(rep).dump(2) << '\n';
        else
            print_report_text(rep);
        return rep.overall ? kExitPass : kExitFail;
    }
    if (optimize->parsed()) {
        const Scenario sc = make_scenario(sopts);
        SeesawConfig cfg;
        for (const auto& piece : CLI::detail::split(dims_arg, ','))
            cfg.dims.push_back(static_cast<std::size_t>(std::stoul(piece)));
        cfg.restarts = restarts;
        cfg.seed = seed;
        const SeesawResult res = seesaw_optimize(sc, cfg);
        std::cout << "best " << format_double(res.best_value) << " quantum-optimum "
                  << format_double(sc.quantum_optimum) << " gap "
                  << format_double(sc.quantum_optimum - res.best_value) << '\n';
        if (!out_path.empty()) {
            write_realization(res.best, out_path);
            std::cout << "wrote " << out_path << '\n';
        }
        return kExitPass;
    }
    if (sample->parsed()) {
        const Realization real = read_realization(in_path);
        const EstimationResult est = sample_and_estimate(real, shots, seed);
        const DeltaEstimate d = delta_estimate(real.scenario, est.table);
        if (format == "json") {
            ojson doc;
            ojson values = ojson::array(), errs = ojson::array();
            for (double v : est.table.values) values.push_back(round12(v));
            for (double v : est.table.std_errors) errs.push_back(round12(v));
            doc["correlators"] = std::move(values);
            doc["std_errors"] = std::move(errs);
            doc["delta"] = round12(d.value);
            doc["delta_std_error"] = round12(d.std_error);
            doc["classical_bound"] = round12(real.scenario.classical_bound);
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << "correlators";
            for (std::size_t i = 0; i < est.table.values.size(); ++i)
                std::cout << ' ' << format_double(est.table.values[i]) << " +- "
                          << format_double(est.table.std_errors[i]);
            std::cout << '\n';
            std::cout << "delta " << format_double(d.value) << " +- "
                      << format_double(d.std_error) << " (classical bound "
                      << format_double(real.scenario.classical_bound) << ")\n";
        }
        return kExitPass;
    }
    // selftest
    return print_acceptance(std::cout) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
