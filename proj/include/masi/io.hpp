#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "masi/qstate.hpp"
#include "masi/specfun.hpp"

namespace masi {

/// Raw matrix file payload: {"dim": n, "entries": [[re, im], ...]} row-major,
/// plus optional "dims": [m, n] for bipartite states.
struct MatrixFile {
    ComplexMatrix matrix;
    std::optional<std::pair<Eigen::Index, Eigen::Index>> dims;
};

MatrixFile parse_matrix_json(const std::string& text);
MatrixFile load_matrix_file(const std::filesystem::path& path);

/// Serializes with 17 significant digits so a written matrix re-reads and
/// re-writes to the identical byte sequence.
std::string write_matrix_json(const ComplexMatrix& matrix,
                              std::optional<std::pair<Eigen::Index, Eigen::Index>> dims = {});
void save_matrix_file(const std::filesystem::path& path, const ComplexMatrix& matrix,
                      std::optional<std::pair<Eigen::Index, Eigen::Index>> dims = {});

/// One sweep over a parametric state family.
struct SweepConfig {
    std::string family;              ///< "isotropic"
    Eigen::Index dim = 0;
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    std::vector<MonotoneFunctionSpec> specs;
    std::vector<std::string> outputs; ///< f_hat, f_hat_closed, v_hat, q_a, q_b, entropy, total_variance
};

SweepConfig parse_sweep_config(const std::string& text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Grid points start, start+step, ..., stop (inclusive, with rounding guard).
std::vector<double> sweep_grid(const SweepConfig& config);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_double(double v);

} // namespace masi
