#include "masi/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace masi {

namespace {

constexpr double kKernelSupportTol = 1e-10;

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

} // namespace

MeanSuperoperatorContext::MeanSuperoperatorContext(const MonotoneFunctionSpec& spec,
                                                   const DensityMatrix& rho)
    : spec_(spec), spectrum_(rho.spectrum()), eigenvectors_(rho.eigenvectors()) {
    const Eigen::Index n = spectrum_.size();
    mean_.resize(n, n);
    diff_weight_.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            const double lk = spectrum_[k];
            const double ll = spectrum_[l];
            mean_(k, l) = eval_mean(spec_, lk, ll);
            // exactly equal eigenvalues (clamped spectrum) contribute zero
            diff_weight_(k, l) = (lk == ll) ? 0.0 : (lk - ll) * (lk - ll) / mean_(k, l);
        }
    }
}

ComplexMatrix MeanSuperoperatorContext::to_eigenbasis(const ComplexMatrix& m) const {
    return eigenvectors_.adjoint() * m * eigenvectors_;
}

double variance(const DensityMatrix& rho, const Observable& h) {
    require_same_dim(rho.dim(), h.dim(), "variance");
    const ComplexMatrix& m = h.matrix();
    const double mean_sq = (rho.matrix() * m * m).trace().real();
    const double mean = (rho.matrix() * m).trace().real();
    const double v = mean_sq - mean * mean;
    return v < 0.0 ? 0.0 : v;
}

double skew_information(const MeanSuperoperatorContext& ctx, const Observable& h) {
    require_same_dim(ctx.dim(), h.dim(), "skew_information");
    const ComplexMatrix ht = ctx.to_eigenbasis(h.matrix());
    const Eigen::Index n = ctx.dim();
    double acc = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            const double w = ctx.difference_weight(k, l);
            if (w != 0.0) {
                acc += w * std::norm(ht(k, l));
            }
        }
    }
    return 0.5 * ctx.f_zero() * acc;
}

double skew_information(const MonotoneFunctionSpec& spec, const DensityMatrix& rho,
                        const Observable& h) {
    return skew_information(MeanSuperoperatorContext(spec, rho), h);
}

double monotone_metric(const MonotoneFunctionSpec& spec, const DensityMatrix& rho,
                       const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(rho.dim(), a.rows(), "monotone_metric");
    require_same_dim(rho.dim(), b.rows(), "monotone_metric");
    const MeanSuperoperatorContext ctx(spec, rho);
    const ComplexMatrix at = ctx.to_eigenbasis(a);
    const ComplexMatrix bt = ctx.to_eigenbasis(b);
    const Eigen::Index n = ctx.dim();
    std::complex<double> acc = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            if (ctx.kernel_pair(k, l)) {
                if (std::abs(at(k, l)) > kKernelSupportTol || std::abs(bt(k, l)) > kKernelSupportTol) {
                    throw std::domain_error(
                        "monotone_metric: argument supported on the kernel of m^f(L,R)");
                }
                continue;
            }
            acc += at(l, k) * bt(k, l) / ctx.mean(k, l);
        }
    }
    return 0.5 * spec.f_zero() * acc.real();
}

double q_uncertainty_basis(const MonotoneFunctionSpec& spec, const DensityMatrix& rho,
                           const HermitianBasis& basis) {
    require_same_dim(rho.dim(), basis.dim(), "q_uncertainty_basis");
    const MeanSuperoperatorContext ctx(spec, rho);
    double acc = 0.0;
    for (const Observable& h : basis.elements()) {
        acc += skew_information(ctx, h);
    }
    return acc;
}

double q_uncertainty_spectral(const MonotoneFunctionSpec& spec, const DensityMatrix& rho) {
    const MeanSuperoperatorContext ctx(spec, rho);
    const Eigen::Index n = ctx.dim();
    double acc = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            acc += ctx.difference_weight(k, l);
        }
    }
    return 0.5 * spec.f_zero() * acc;
}

double q_uncertainty_tilde(const MonotoneFunctionSpec& spec, const DensityMatrix& rho) {
    const Eigen::VectorXd& lam = rho.spectrum();
    const Eigen::Index n = lam.size();
    double acc = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            acc += 0.5 * (lam[k] + lam[l]) - eval_tilde_mean(spec, lam[k], lam[l]);
        }
    }
    return acc;
}

double qwy_closed_form(const DensityMatrix& rho) {
    const double tr_sqrt = rho.spectrum().cwiseSqrt().sum();
    return static_cast<double>(rho.dim()) - tr_sqrt * tr_sqrt;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < rho.dim(); ++k) {
        const double lam = rho.spectrum()[k];
        if (lam > 0.0) {
            acc -= lam * std::log(lam);
        }
    }
    return acc;
}

double total_variance(const DensityMatrix& rho) {
    return static_cast<double>(rho.dim()) - rho.spectrum().squaredNorm();
}

} // namespace masi
