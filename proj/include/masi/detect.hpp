#pragma once

#include <optional>
#include <string>
#include <vector>

#include "masi/measures.hpp"
#include "masi/qstate.hpp"
#include "masi/specfun.hpp"

namespace masi {

enum class Verdict { Entangled, Correlated, Product, Inconclusive };

std::string to_string(Verdict v);

/// One measure evaluated against its decision threshold.
struct MeasureReport {
    std::string measure;   ///< "f_bar", "f_hat" or "v_hat"
    std::string spec_name; ///< function id, or "variance" for v_hat
    double value = 0.0;
    double threshold = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

/// Collected detector output for one bipartite state.
struct DetectionReport {
    Eigen::Index dim_a = 0;
    Eigen::Index dim_b = 0;
    std::vector<MeasureReport> entries;
    Verdict overall = Verdict::Inconclusive;
};

/// Correlation quantifier
/// Fbar^f = sum_j I^f(rho_ab, A_j x 1) - sum_j I^f(rho_a, A_j)
/// over an orthonormal observable basis {A_j} of the first factor.
double f_bar(const MonotoneFunctionSpec& spec, const BipartiteState& state);
double f_bar(const MonotoneFunctionSpec& spec, const BipartiteState& state,
             const HermitianBasis& basis_a);

/// Entanglement functional (equal factor dimensions only)
/// Fhat^f = sum_j I^f(rho_ab, A_j x 1 + 1 x B_j).
double f_hat(const MonotoneFunctionSpec& spec, const BipartiteState& state);
double f_hat(const MonotoneFunctionSpec& spec, const BipartiteState& state,
             const HermitianBasis& basis_a, const HermitianBasis& basis_b);

/// Variance criterion sum: Vhat = sum_j V(rho_ab, A_j x 1 + 1 x B_j).
/// Separable states satisfy Vhat >= 2m - 2.
double v_hat(const BipartiteState& state);
double v_hat(const BipartiteState& state, const HermitianBasis& basis_a,
             const HermitianBasis& basis_b);

/// (1-p)/d^2 * 1 + p |Omega><Omega| with |Omega> = sum_i |ii>/sqrt(d).
BipartiteState isotropic_state(double p, Eigen::Index d);

/// Closed form of Fhat for the isotropic family at d = 3:
/// (20/3) f(0) p^2 / m^f(1/9 + 8p/9, 1/9 - p/9).
/// Other d fall back to the numeric basis sum.
double f_hat_isotropic_closed_form(const MonotoneFunctionSpec& spec, double p, Eigen::Index d = 3);

/// rho_ab = sum_j p_j |j><j| x rho_j.
BipartiteState classical_quantum_state(const std::vector<double>& probs,
                                       const std::vector<DensityMatrix>& branches);

/// rho_a x rho_b as a bipartite state.
BipartiteState product_state(const DensityMatrix& a, const DensityMatrix& b);

/// Seeded convex mixture of 2..5 random product states.
BipartiteState random_separable_state(std::uint64_t seed, Eigen::Index m, Eigen::Index n);

/// Fbar evaluated against threshold 0 with the correlated/product verdict.
MeasureReport f_bar_report(const MonotoneFunctionSpec& spec, const BipartiteState& state);

/// Fhat and Vhat against the threshold 2m - 2: Fhat above it, or Vhat below
/// it, certifies entanglement; anything else is inconclusive. Requires
/// equal factor dimensions.
DetectionReport detect_entanglement(const MonotoneFunctionSpec& spec, const BipartiteState& state);

} // namespace masi
