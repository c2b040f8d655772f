#pragma once

#include "masi/qstate.hpp"
#include "masi/specfun.hpp"

namespace masi {

/// The mean superoperator m^f(L_rho, R_rho) in rho's eigenbasis, where it
/// acts entrywise: (k,l) |-> m^f(lambda_k, lambda_l). Caches the means and
/// the difference weights (lambda_k - lambda_l)^2 / m^f(lambda_k, lambda_l)
/// used by the skew-information sums (zero on exactly equal pairs).
class MeanSuperoperatorContext {
public:
    MeanSuperoperatorContext(const MonotoneFunctionSpec& spec, const DensityMatrix& rho);

    Eigen::Index dim() const { return spectrum_.size(); }
    double f_zero() const { return spec_.f_zero(); }
    const MonotoneFunctionSpec& spec() const { return spec_; }
    const Eigen::VectorXd& spectrum() const { return spectrum_; }

    double mean(Eigen::Index k, Eigen::Index l) const { return mean_(k, l); }
    double difference_weight(Eigen::Index k, Eigen::Index l) const { return diff_weight_(k, l); }
    /// True when lambda_k = lambda_l = 0, i.e. the superoperator kernel.
    bool kernel_pair(Eigen::Index k, Eigen::Index l) const { return mean_(k, l) == 0.0; }

    /// V^dag M V for rho's eigenvector unitary V.
    ComplexMatrix to_eigenbasis(const ComplexMatrix& m) const;

private:
    MonotoneFunctionSpec spec_;
    Eigen::VectorXd spectrum_;
    ComplexMatrix eigenvectors_;
    Eigen::MatrixXd mean_;
    Eigen::MatrixXd diff_weight_;
};

/// V(rho, H) = tr(rho H^2) - (tr rho H)^2, clamped to zero from tiny
/// negative rounding.
double variance(const DensityMatrix& rho, const Observable& h);

/// Metric-adjusted skew information
/// I^f(rho, H) = (f(0)/2) sum_{k,l} (l_k - l_l)^2 / m^f(l_k, l_l) |<k|H|l>|^2.
double skew_information(const MonotoneFunctionSpec& spec, const DensityMatrix& rho,
                        const Observable& h);
double skew_information(const MeanSuperoperatorContext& ctx, const Observable& h);

/// Monotone metric K^f_rho(A, B) = (f(0)/2) tr A [m^f(L_rho,R_rho)]^{-1} B.
///
/// Entries supported on the superoperator kernel (both eigenvalues zero)
/// must vanish to 1e-10; larger ones raise a domain error. Commutators
/// i[rho, H] always satisfy this.
double monotone_metric(const MonotoneFunctionSpec& spec, const DensityMatrix& rho,
                       const ComplexMatrix& a, const ComplexMatrix& b);

/// Q^f(rho) = sum_j I^f(rho, H_j) over an orthonormal observable basis.
double q_uncertainty_basis(const MonotoneFunctionSpec& spec, const DensityMatrix& rho,
                           const HermitianBasis& basis);

/// Spectral form Q^f(rho) = (f(0)/2) sum_{k,l} (l_k - l_l)^2 / m^f(l_k, l_l).
double q_uncertainty_spectral(const MonotoneFunctionSpec& spec, const DensityMatrix& rho);

/// Partner-mean form Q^f(rho) = sum_{k,l} [m_a(l_k, l_l) - m^{f~}(l_k, l_l)].
double q_uncertainty_tilde(const MonotoneFunctionSpec& spec, const DensityMatrix& rho);

/// Q^{WY}(rho) = n - (tr sqrt(rho))^2.
double qwy_closed_form(const DensityMatrix& rho);

/// Von Neumann entropy -tr(rho ln rho), natural logarithm.
double von_neumann_entropy(const DensityMatrix& rho);

/// Total variance over any observable basis: n - tr(rho^2).
double total_variance(const DensityMatrix& rho);

} // namespace masi
