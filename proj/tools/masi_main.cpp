#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "masi/detect.hpp"
#include "masi/errors.hpp"
#include "masi/io.hpp"
#include "masi/measures.hpp"
#include "masi/qstate.hpp"
#include "masi/selftest.hpp"
#include "masi/specfun.hpp"

namespace {

using masi::BipartiteState;
using masi::ComplexMatrix;
using masi::DensityMatrix;
using masi::MonotoneFunctionSpec;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInvariantViolation = 3;

std::pair<Eigen::Index, Eigen::Index> parse_dims(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw masi::ParseError("--dims expects 'm,n'");
    }
    try {
        const long m = std::stol(text.substr(0, comma));
        const long n = std::stol(text.substr(comma + 1));
        if (m < 1 || n < 1) {
            throw masi::ParseError("--dims entries must be positive");
        }
        return {m, n};
    } catch (const std::invalid_argument&) {
        throw masi::ParseError("--dims expects 'm,n'");
    } catch (const std::out_of_range&) {
        throw masi::ParseError("--dims out of range");
    }
}

int run_uncertainty(const std::string& state_file, const std::string& spec_id) {
    const masi::MatrixFile mf = masi::load_matrix_file(state_file);
    const DensityMatrix rho(mf.matrix);
    const MonotoneFunctionSpec spec = MonotoneFunctionSpec::parse(spec_id);
    const Eigen::Index n = rho.dim();
    if (n < 2) {
        throw masi::ParseError("uncertainty: state dimension must be at least 2");
    }

    const double q_basis = masi::q_uncertainty_basis(spec, rho, masi::gell_mann_basis(n));
    const double q_spectral = masi::q_uncertainty_spectral(spec, rho);
    const double q_tilde = masi::q_uncertainty_tilde(spec, rho);
    const double deviation = std::max({std::abs(q_basis - q_spectral),
                                       std::abs(q_basis - q_tilde),
                                       std::abs(q_spectral - q_tilde)});
    const double upper = static_cast<double>(n - 1);
    const bool bounds_ok = q_spectral >= 0.0 && q_basis >= -1e-10 && q_tilde >= -1e-10 &&
                           q_spectral <= upper + 1e-10 && q_basis <= upper + 1e-10 &&
                           q_tilde <= upper + 1e-10;

    ojson out;
    out["command"] = "uncertainty";
    out["state"] = state_file;
    out["dim"] = n;
    out["spec"] = spec.name();
    out["q_basis"] = q_basis;
    out["q_spectral"] = q_spectral;
    out["q_tilde"] = q_tilde;
    out["max_route_deviation"] = deviation;
    out["entropy"] = masi::von_neumann_entropy(rho);
    out["total_variance"] = masi::total_variance(rho);
    out["upper_bound"] = upper;
    out["bounds_ok"] = bounds_ok;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

ojson measure_json(const masi::MeasureReport& r) {
    ojson j;
    j["measure"] = r.measure;
    j["spec"] = r.spec_name;
    j["value"] = r.value;
    j["threshold"] = r.threshold;
    j["verdict"] = masi::to_string(r.verdict);
    return j;
}

int run_detect(const std::string& state_file, const std::string& dims_text,
               const std::string& spec_id) {
    const masi::MatrixFile mf = masi::load_matrix_file(state_file);

    std::optional<std::pair<Eigen::Index, Eigen::Index>> dims;
    if (!dims_text.empty()) {
        dims = parse_dims(dims_text);
        if (mf.dims && *mf.dims != *dims) {
            throw masi::ParseError("detect: --dims disagrees with the 'dims' field in " + state_file);
        }
    } else if (mf.dims) {
        dims = mf.dims;
    } else {
        throw masi::ParseError("detect: state file has no 'dims'; pass --dims m,n");
    }
    if (dims->first * dims->second != mf.matrix.rows()) {
        throw masi::ParseError("detect: dims do not factor the matrix dimension");
    }

    const MonotoneFunctionSpec spec = MonotoneFunctionSpec::parse(spec_id);
    const BipartiteState state(dims->first, dims->second, DensityMatrix(mf.matrix));

    const masi::MeasureReport fbar = masi::f_bar_report(spec, state);
    ojson out;
    out["command"] = "detect";
    out["state"] = state_file;
    out["dims"] = {state.dim_a(), state.dim_b()};
    out["spec"] = spec.name();
    out["f_bar"] = measure_json(fbar);

    masi::Verdict overall = fbar.verdict;
    if (state.dim_a() == state.dim_b()) {
        const masi::DetectionReport ent = masi::detect_entanglement(spec, state);
        for (const masi::MeasureReport& entry : ent.entries) {
            out[entry.measure] = measure_json(entry);
        }
        out["threshold"] = ent.entries.front().threshold;
        if (ent.overall == masi::Verdict::Entangled) {
            overall = masi::Verdict::Entangled;
        }
    } else {
        out["f_hat"] = nullptr;
        out["v_hat"] = nullptr;
        out["omitted"] = "f_hat and v_hat require equal subsystem dimensions; state is " +
                         std::to_string(state.dim_a()) + "x" + std::to_string(state.dim_b());
    }
    out["verdict"] = masi::to_string(overall);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_sweep(const std::string& config_file, const std::string& out_file) {
    const masi::SweepConfig cfg = masi::load_sweep_config(config_file);
    const std::vector<double> grid = masi::sweep_grid(cfg);
    const double threshold = 2.0 * static_cast<double>(cfg.dim) - 2.0;

    const bool per_spec_outputs[] = {true, true, false, true, true, false, false};
    const std::vector<std::string> known = {"f_hat", "f_hat_closed", "v_hat", "q_a",
                                            "q_b",   "entropy",      "total_variance"};

    std::vector<std::string> columns;
    for (const std::string& output : cfg.outputs) {
        std::size_t idx = 0;
        while (known[idx] != output) {
            ++idx;
        }
        if (per_spec_outputs[idx]) {
            for (const MonotoneFunctionSpec& spec : cfg.specs) {
                columns.push_back(output + ":" + spec.name());
            }
        } else {
            columns.push_back(output);
        }
    }

    std::ofstream out(out_file, std::ios::binary);
    if (!out) {
        throw masi::ParseError("cannot write file: " + out_file);
    }
    out << "param";
    for (const std::string& col : columns) {
        out << "," << col;
    }
    out << ",verdict\n";

    for (const double p : grid) {
        const BipartiteState state = masi::isotropic_state(p, cfg.dim);
        const DensityMatrix& rho = state.state();

        std::map<std::string, double> values;
        const double vh = masi::v_hat(state);
        bool entangled = vh < threshold - 1e-8;
        values["v_hat"] = vh;
        values["entropy"] = masi::von_neumann_entropy(rho);
        values["total_variance"] = masi::total_variance(rho);
        for (const MonotoneFunctionSpec& spec : cfg.specs) {
            const double fh = masi::f_hat(spec, state);
            entangled = entangled || fh > threshold + 1e-8;
            values["f_hat:" + spec.name()] = fh;
            values["f_hat_closed:" + spec.name()] = masi::f_hat_isotropic_closed_form(spec, p, cfg.dim);
            values["q_a:" + spec.name()] = masi::q_uncertainty_spectral(spec, state.reduced(masi::Subsystem::A));
            values["q_b:" + spec.name()] = masi::q_uncertainty_spectral(spec, state.reduced(masi::Subsystem::B));
        }

        out << masi::format_double(p);
        for (const std::string& col : columns) {
            out << "," << masi::format_double(values.at(col));
        }
        out << "," << (entangled ? "entangled" : "inconclusive") << "\n";
    }
    out.close();
    std::cout << "wrote " << grid.size() << " rows to " << out_file << "\n";
    return kExitOk;
}

int run_selftest(std::uint64_t seed, bool inject_fault) {
    masi::SelftestOptions opts;
    opts.inject_fault = inject_fault;
    const masi::SelftestReport report = masi::run_selftest(seed, opts);

    for (const masi::SuiteResult& s : report.suites) {
        std::printf("suite %-22s checks=%5d failures=%3d worst=%.3e (%s)\n", s.suite.c_str(),
                    s.checks, s.failures, s.worst_residual, s.worst_check.c_str());
        int shown = 0;
        for (const std::string& f : s.failed_checks) {
            std::printf("  FAIL %s\n", f.c_str());
            if (++shown == 10 && s.failures > 10) {
                std::printf("  ... %d more failures\n", s.failures - 10);
                break;
            }
        }
    }
    std::printf("selftest: %s (seed=%llu, %d checks, %d failures)\n",
                report.passed() ? "PASS" : "FAIL", static_cast<unsigned long long>(report.seed),
                report.total_checks(), report.total_failures());
    return report.passed() ? kExitOk : kExitSelftestFailure;
}

int run_gen(const std::string& family, const std::string& out_file, Eigen::Index dim,
            const std::string& dims_text, double p, std::uint64_t seed, Eigen::Index rank) {
    if (family == "isotropic") {
        const BipartiteState state = masi::isotropic_state(p, dim);
        masi::save_matrix_file(out_file, state.state().matrix(),
                               std::make_pair(state.dim_a(), state.dim_b()));
    } else if (family == "random") {
        const DensityMatrix rho = masi::random_density(seed, dim, rank > 0 ? rank : dim);
        masi::save_matrix_file(out_file, rho.matrix());
    } else if (family == "pure") {
        const DensityMatrix rho = masi::random_density(seed, dim, 1);
        masi::save_matrix_file(out_file, rho.matrix());
    } else if (family == "product") {
        if (dims_text.empty()) {
            throw masi::ParseError("gen product: pass --dims m,n");
        }
        const auto [m, n] = parse_dims(dims_text);
        const DensityMatrix a = masi::random_density(seed, m, m);
        const DensityMatrix b = masi::random_density(seed ^ 0x9e3779b97f4a7c15ULL, n, n);
        const BipartiteState state = masi::product_state(a, b);
        masi::save_matrix_file(out_file, state.state().matrix(), std::make_pair(m, n));
    } else {
        throw masi::ParseError("gen: unknown family '" + family +
                               "' (expected isotropic, random, pure or product)");
    }
    std::cout << "wrote " << out_file << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"masi: quantum uncertainty and entanglement detection via "
                 "metric-adjusted skew informations"};
    app.require_subcommand(1);

    std::string state_file;
    std::string spec_id = "wy";
    std::string dims_text;
    std::string config_file;
    std::string out_file;
    std::string family;
    std::uint64_t seed = 42;
    bool inject_fault = false;
    Eigen::Index dim = 3;
    Eigen::Index rank = 0;
    double p = 0.0;

    CLI::App* unc = app.add_subcommand("uncertainty", "Evaluate Q^f of a density matrix by all routes");
    unc->add_option("--state", state_file, "density matrix JSON file")->required();
    unc->add_option("--f", spec_id, "function spec: wy, sld or wyd:<alpha>")->required();

    CLI::App* det = app.add_subcommand("detect", "Run the correlation and entanglement detectors");
    det->add_option("--state", state_file, "bipartite density matrix JSON file")->required();
    det->add_option("--dims", dims_text, "subsystem dimensions m,n");
    det->add_option("--f", spec_id, "function spec: wy, sld or wyd:<alpha>")->required();

    CLI::App* swp = app.add_subcommand("sweep", "Sweep a state family and write CSV results");
    swp->add_option("--config", config_file, "sweep config JSON file")->required();
    swp->add_option("--out", out_file, "output CSV path")->required();

    CLI::App* st = app.add_subcommand("selftest", "Run the built-in property suites");
    st->add_option("--seed", seed, "random seed");
    st->add_flag("--inject-fault", inject_fault, "negative control: force one failure")
        ->group("");

    CLI::App* gen = app.add_subcommand("gen", "Generate a state file");
    gen->add_option("--family", family, "isotropic, random, pure or product")->required();
    gen->add_option("--out", out_file, "output JSON path")->required();
    gen->add_option("--dim", dim, "system dimension");
    gen->add_option("--dims", dims_text, "subsystem dimensions m,n (product family)");
    gen->add_option("--p", p, "mixing parameter (isotropic family)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--rank", rank, "rank (random family; default dim)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(unc)) {
            return run_uncertainty(state_file, spec_id);
        }
        if (app.got_subcommand(det)) {
            return run_detect(state_file, dims_text, spec_id);
        }
        if (app.got_subcommand(swp)) {
            return run_sweep(config_file, out_file);
        }
        if (app.got_subcommand(st)) {
            return run_selftest(seed, inject_fault);
        }
        if (app.got_subcommand(gen)) {
            return run_gen(family, out_file, dim, dims_text, p, seed, rank);
        }
    } catch (const masi::InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
