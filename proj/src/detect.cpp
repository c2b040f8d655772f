#include "masi/detect.hpp"

#include <cmath>
#include <stdexcept>

namespace masi {

namespace {

constexpr double kVerdictGuard = 1e-8;   // guard band around decision thresholds
constexpr double kCorrelatedCut = 1e-6;  // Fbar above this reports "correlated"

void require_equal_factors(const BipartiteState& state, const char* what) {
    if (state.dim_a() != state.dim_b()) {
        throw std::domain_error(std::string(what) + ": requires equal factor dimensions, got " +
                                std::to_string(state.dim_a()) + " x " +
                                std::to_string(state.dim_b()));
    }
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Entangled: return "entangled";
        case Verdict::Correlated: return "correlated";
        case Verdict::Product: return "product";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

double f_bar(const MonotoneFunctionSpec& spec, const BipartiteState& state,
             const HermitianBasis& basis_a) {
    if (basis_a.dim() != state.dim_a()) {
        throw std::invalid_argument("f_bar: basis dimension mismatch");
    }
    const ComplexMatrix id_b = ComplexMatrix::Identity(state.dim_b(), state.dim_b());
    const DensityMatrix rho_a = state.reduced(Subsystem::A);

    const MeanSuperoperatorContext ctx_ab(spec, state.state());
    const MeanSuperoperatorContext ctx_a(spec, rho_a);
    double acc = 0.0;
    for (const Observable& a : basis_a.elements()) {
        acc += skew_information(ctx_ab, Observable(tensor(a.matrix(), id_b)));
        acc -= skew_information(ctx_a, a);
    }
    return acc;
}

double f_bar(const MonotoneFunctionSpec& spec, const BipartiteState& state) {
    if (state.dim_a() == 1) {
        // the observable space is spanned by the identity alone
        std::vector<Observable> trivial;
        trivial.emplace_back(ComplexMatrix(ComplexMatrix::Identity(1, 1)));
        return f_bar(spec, state, HermitianBasis(1, std::move(trivial)));
    }
    return f_bar(spec, state, gell_mann_basis(state.dim_a()));
}

double f_hat(const MonotoneFunctionSpec& spec, const BipartiteState& state,
             const HermitianBasis& basis_a, const HermitianBasis& basis_b) {
    require_equal_factors(state, "f_hat");
    if (basis_a.dim() != state.dim_a() || basis_b.dim() != state.dim_b()) {
        throw std::invalid_argument("f_hat: basis dimension mismatch");
    }
    const Eigen::Index m = state.dim_a();
    const ComplexMatrix id = ComplexMatrix::Identity(m, m);

    const MeanSuperoperatorContext ctx(spec, state.state());
    double acc = 0.0;
    for (Eigen::Index j = 0; j < basis_a.size(); ++j) {
        const ComplexMatrix h = tensor(basis_a[j].matrix(), id) + tensor(id, basis_b[j].matrix());
        acc += skew_information(ctx, Observable(h));
    }
    return acc;
}

double f_hat(const MonotoneFunctionSpec& spec, const BipartiteState& state) {
    const HermitianBasis basis = gell_mann_basis(state.dim_a());
    return f_hat(spec, state, basis, basis);
}

double v_hat(const BipartiteState& state, const HermitianBasis& basis_a,
             const HermitianBasis& basis_b) {
    require_equal_factors(state, "v_hat");
    if (basis_a.dim() != state.dim_a() || basis_b.dim() != state.dim_b()) {
        throw std::invalid_argument("v_hat: basis dimension mismatch");
    }
    const Eigen::Index m = state.dim_a();
    const ComplexMatrix id = ComplexMatrix::Identity(m, m);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < basis_a.size(); ++j) {
        const ComplexMatrix h = tensor(basis_a[j].matrix(), id) + tensor(id, basis_b[j].matrix());
        acc += variance(state.state(), Observable(h));
    }
    return acc;
}

double v_hat(const BipartiteState& state) {
    const HermitianBasis basis = gell_mann_basis(state.dim_a());
    return v_hat(state, basis, basis);
}

BipartiteState isotropic_state(double p, Eigen::Index d) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("isotropic_state: p must lie in [0, 1]");
    }
    if (d < 2) {
        throw std::domain_error("isotropic_state: d must be at least 2");
    }
    const Eigen::Index dd = d * d;
    ComplexMatrix m = ComplexMatrix::Identity(dd, dd) * ((1.0 - p) / static_cast<double>(dd));
    const double omega = p / static_cast<double>(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            m(i * d + i, j * d + j) += omega;
        }
    }
    return {d, d, DensityMatrix(m)};
}

double f_hat_isotropic_closed_form(const MonotoneFunctionSpec& spec, double p, Eigen::Index d) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("f_hat_isotropic_closed_form: p must lie in [0, 1]");
    }
    if (d != 3) {
        return f_hat(spec, isotropic_state(p, d));
    }
    const double x = (1.0 + 8.0 * p) / 9.0;
    const double y = (1.0 - p) / 9.0;
    return (20.0 / 3.0) * spec.f_zero() * p * p / eval_mean(spec, x, y);
}

BipartiteState classical_quantum_state(const std::vector<double>& probs,
                                       const std::vector<DensityMatrix>& branches) {
    if (probs.empty() || probs.size() != branches.size()) {
        throw std::invalid_argument("classical_quantum_state: need one probability per branch");
    }
    const Eigen::Index m = static_cast<Eigen::Index>(probs.size());
    const Eigen::Index n = branches.front().dim();
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) {
            throw std::domain_error("classical_quantum_state: probabilities must be nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::domain_error("classical_quantum_state: probabilities must sum to 1");
    }
    for (const DensityMatrix& b : branches) {
        if (b.dim() != n) {
            throw std::invalid_argument("classical_quantum_state: branch dimension mismatch");
        }
    }
    ComplexMatrix rho = ComplexMatrix::Zero(m * n, m * n);
    for (Eigen::Index j = 0; j < m; ++j) {
        rho.block(j * n, j * n, n, n) = probs[static_cast<std::size_t>(j)] *
                                        branches[static_cast<std::size_t>(j)].matrix();
    }
    return {m, n, DensityMatrix(rho)};
}

BipartiteState product_state(const DensityMatrix& a, const DensityMatrix& b) {
    return {a.dim(), b.dim(), DensityMatrix(tensor(a.matrix(), b.matrix()))};
}

BipartiteState random_separable_state(std::uint64_t seed, Eigen::Index m, Eigen::Index n) {
    GaussianSource src(seed);
    const int terms = 2 + static_cast<int>(src.uniform() * 4.0); // 2..5
    std::vector<double> weights(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (double& w : weights) {
        w = src.uniform();
        total += w;
    }
    ComplexMatrix rho = ComplexMatrix::Zero(m * n, m * n);
    for (int j = 0; j < terms; ++j) {
        const DensityMatrix a = random_density(seed * 1000003 + 2 * static_cast<std::uint64_t>(j), m, m);
        const DensityMatrix b = random_density(seed * 1000003 + 2 * static_cast<std::uint64_t>(j) + 1, n, n);
        rho += (weights[static_cast<std::size_t>(j)] / total) * tensor(a.matrix(), b.matrix());
    }
    return {m, n, DensityMatrix(rho)};
}

MeasureReport f_bar_report(const MonotoneFunctionSpec& spec, const BipartiteState& state) {
    const double value = f_bar(spec, state);
    MeasureReport r;
    r.measure = "f_bar";
    r.spec_name = spec.name();
    r.value = value;
    r.threshold = 0.0;
    r.verdict = value > kCorrelatedCut ? Verdict::Correlated : Verdict::Product;
    return r;
}

DetectionReport detect_entanglement(const MonotoneFunctionSpec& spec, const BipartiteState& state) {
    require_equal_factors(state, "detect_entanglement");
    const Eigen::Index m = state.dim_a();
    const double threshold = 2.0 * static_cast<double>(m) - 2.0;

    DetectionReport report;
    report.dim_a = m;
    report.dim_b = state.dim_b();

    MeasureReport fh;
    fh.measure = "f_hat";
    fh.spec_name = spec.name();
    fh.value = f_hat(spec, state);
    fh.threshold = threshold;
    fh.verdict = fh.value > threshold + kVerdictGuard ? Verdict::Entangled : Verdict::Inconclusive;
    report.entries.push_back(fh);

    MeasureReport vh;
    vh.measure = "v_hat";
    vh.spec_name = "variance";
    vh.value = v_hat(state);
    vh.threshold = threshold;
    vh.verdict = vh.value < threshold - kVerdictGuard ? Verdict::Entangled : Verdict::Inconclusive;
    report.entries.push_back(vh);

    report.overall = (fh.verdict == Verdict::Entangled || vh.verdict == Verdict::Entangled)
                         ? Verdict::Entangled
                         : Verdict::Inconclusive;
    return report;
}

} // namespace masi
