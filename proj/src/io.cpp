#include "masi/io.hpp"
#include "masi/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace masi {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("invalid JSON");
    }
    return j;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path.string());
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

double get_finite_number(const json& j, const char* what) {
    if (!j.is_number()) {
        throw ParseError(std::string(what) + ": expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(std::string(what) + ": value must be finite");
    }
    return v;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

MatrixFile parse_matrix_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) {
        throw ParseError("matrix file: expected a JSON object");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw ParseError("matrix file: missing integer field 'dim'");
    }
    const Eigen::Index n = j["dim"].get<Eigen::Index>();
    if (n < 1) {
        throw ParseError("matrix file: 'dim' must be positive");
    }
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("matrix file: missing array field 'entries'");
    }
    const json& entries = j["entries"];
    if (static_cast<Eigen::Index>(entries.size()) != n * n) {
        throw ParseError("matrix file: expected dim^2 = " + std::to_string(n * n) + " entries, got " +
                         std::to_string(entries.size()));
    }

    MatrixFile out;
    out.matrix.resize(n, n);
    for (Eigen::Index i = 0; i < n * n; ++i) {
        const json& e = entries[static_cast<std::size_t>(i)];
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("matrix file: each entry must be a [re, im] pair");
        }
        const double re = get_finite_number(e[0], "matrix entry");
        const double im = get_finite_number(e[1], "matrix entry");
        out.matrix(i / n, i % n) = std::complex<double>(re, im);
    }

    if (j.contains("dims")) {
        const json& d = j["dims"];
        if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
            throw ParseError("matrix file: 'dims' must be a pair of integers");
        }
        const Eigen::Index m = d[0].get<Eigen::Index>();
        const Eigen::Index k = d[1].get<Eigen::Index>();
        if (m < 1 || k < 1 || m * k != n) {
            throw ParseError("matrix file: 'dims' [" + std::to_string(m) + ", " + std::to_string(k) +
                             "] do not factor dim " + std::to_string(n));
        }
        out.dims = {m, k};
    }
    return out;
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
    return parse_matrix_json(read_file(path));
}

std::string write_matrix_json(const ComplexMatrix& matrix,
                              std::optional<std::pair<Eigen::Index, Eigen::Index>> dims) {
    const Eigen::Index n = matrix.rows();
    std::ostringstream out;
    out << "{\n  \"dim\": " << n << ",\n";
    if (dims) {
        out << "  \"dims\": [" << dims->first << ", " << dims->second << "],\n";
    }
    out << "  \"entries\": [\n";
    for (Eigen::Index i = 0; i < n * n; ++i) {
        const std::complex<double> e = matrix(i / n, i % n);
        out << "    [" << format_double(e.real()) << ", " << format_double(e.imag()) << "]";
        out << (i + 1 < n * n ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

void save_matrix_file(const std::filesystem::path& path, const ComplexMatrix& matrix,
                      std::optional<std::pair<Eigen::Index, Eigen::Index>> dims) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write file: " + path.string());
    }
    out << write_matrix_json(matrix, dims);
}

SweepConfig parse_sweep_config(const std::string& text) {
    static const std::vector<std::string> known_outputs = {
        "f_hat", "f_hat_closed", "v_hat", "q_a", "q_b", "entropy", "total_variance"};

    const json j = parse_json(text);
    if (!j.is_object()) {
        throw ParseError("sweep config: expected a JSON object");
    }
    SweepConfig cfg;
    if (!j.contains("family") || !j["family"].is_string()) {
        throw ParseError("sweep config: missing string field 'family'");
    }
    cfg.family = j["family"].get<std::string>();
    if (cfg.family != "isotropic") {
        throw ParseError("sweep config: unknown family '" + cfg.family + "'");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw ParseError("sweep config: missing integer field 'dim'");
    }
    cfg.dim = j["dim"].get<Eigen::Index>();
    if (cfg.dim < 2) {
        throw ParseError("sweep config: 'dim' must be at least 2");
    }
    if (!j.contains("param_grid") || !j["param_grid"].is_object()) {
        throw ParseError("sweep config: missing object field 'param_grid'");
    }
    const json& grid = j["param_grid"];
    for (const char* key : {"start", "stop", "step"}) {
        if (!grid.contains(key)) {
            throw ParseError(std::string("sweep config: param_grid needs '") + key + "'");
        }
    }
    cfg.start = get_finite_number(grid["start"], "param_grid.start");
    cfg.stop = get_finite_number(grid["stop"], "param_grid.stop");
    cfg.step = get_finite_number(grid["step"], "param_grid.step");
    if (cfg.start > cfg.stop) {
        throw ParseError("sweep config: start must not exceed stop");
    }
    if (!(cfg.step > 0.0)) {
        throw ParseError("sweep config: step must be positive");
    }
    if (!j.contains("specs") || !j["specs"].is_array() || j["specs"].empty()) {
        throw ParseError("sweep config: missing nonempty array field 'specs'");
    }
    for (const json& s : j["specs"]) {
        if (!s.is_string()) {
            throw ParseError("sweep config: specs must be strings");
        }
        cfg.specs.push_back(MonotoneFunctionSpec::parse(s.get<std::string>()));
    }
    if (!j.contains("outputs") || !j["outputs"].is_array() || j["outputs"].empty()) {
        throw ParseError("sweep config: missing nonempty array field 'outputs'");
    }
    for (const json& o : j["outputs"]) {
        if (!o.is_string()) {
            throw ParseError("sweep config: outputs must be strings");
        }
        const std::string name = o.get<std::string>();
        bool ok = false;
        for (const std::string& k : known_outputs) {
            if (k == name) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ParseError("sweep config: unknown output '" + name + "'");
        }
        cfg.outputs.push_back(name);
    }
    return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    return parse_sweep_config(read_file(path));
}

std::vector<double> sweep_grid(const SweepConfig& config) {
    std::vector<double> grid;
    const double span = config.stop - config.start;
    const double guard = config.step * 1e-9;
    for (Eigen::Index k = 0;; ++k) {
        const double p = config.start + static_cast<double>(k) * config.step;
        if (p > config.stop + guard) {
            break;
        }
        grid.push_back(std::min(p, config.stop));
        if (span == 0.0) {
            break;
        }
    }
    return grid;
}

} // namespace masi
