#include "masi/selftest.hpp"

#include <cmath>
#include <vector>

#include "masi/detect.hpp"
#include "masi/measures.hpp"
#include "masi/qstate.hpp"
#include "masi/specfun.hpp"

namespace masi {

namespace {

std::vector<MonotoneFunctionSpec> catalog() {
    return {MonotoneFunctionSpec::wy(), MonotoneFunctionSpec::sld(),
            MonotoneFunctionSpec::wyd(0.25), MonotoneFunctionSpec::wyd(0.5),
            MonotoneFunctionSpec::wyd(0.75)};
}

class Checker {
public:
    explicit Checker(std::string suite) { result_.suite = std::move(suite); }

    /// |residual| must not exceed tol.
    void within(const std::string& what, double residual, double tol) {
        ++result_.checks;
        const double r = std::abs(residual);
        const double severity = tol > 0.0 ? r / tol : (r > 0.0 ? 1e308 : 0.0);
        if (severity > worst_severity_) {
            worst_severity_ = severity;
            result_.worst_residual = r;
            result_.worst_check = what;
        }
        if (r > tol) {
            ++result_.failures;
            result_.failed_checks.push_back(what + " (residual " + std::to_string(r) + " > tol " +
                                            std::to_string(tol) + ")");
        }
    }

    /// value must not exceed bound + tol; records max(value - bound, 0).
    void below(const std::string& what, double value, double bound, double tol) {
        within(what, std::max(value - bound, 0.0), tol);
    }

    void require(const std::string& what, bool ok) {
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
            result_.failed_checks.push_back(what);
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
    double worst_severity_ = -1.0;
};

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

ComplexMatrix conjugated(const ComplexMatrix& u, const ComplexMatrix& m) {
    return u * m * u.adjoint();
}

SuiteResult suite_specfun(std::uint64_t seed, bool inject_fault) {
    Checker c("specfun");
    GaussianSource src(seed * 11 + 1);

    for (const MonotoneFunctionSpec& spec : catalog()) {
        const std::string id = spec.name();
        c.within(id + ": f(1) = 1", eval_f(spec, 1.0) - 1.0, 1e-15);
        c.require(id + ": f(0) > 0", spec.f_zero() > 0.0);
        c.within(id + ": f(0) matches", eval_f(spec, 0.0) - spec.f_zero(), 0.0);

        for (int k = -6; k <= 6; ++k) {
            const double t = std::pow(10.0, k);
            const double lhs = eval_f(spec, t);
            const double rhs = t * eval_f(spec, 1.0 / t);
            c.within(id + ": symmetry f(t) = t f(1/t) at t = 1e" + std::to_string(k),
                     (lhs - rhs) / lhs, 1e-12);
        }

        double prev = eval_f(spec, 0.0);
        for (int k = 0; k <= 120; ++k) {
            const double t = std::pow(10.0, -6.0 + 0.1 * k);
            const double cur = eval_f(spec, t);
            c.require(id + ": f nondecreasing", cur + 1e-12 >= prev);
            prev = cur;
        }

        for (int trial = 0; trial < 40; ++trial) {
            const double x = std::exp((src.uniform() * 2.0 - 1.0) * 7.0);
            const double y = std::exp((src.uniform() * 2.0 - 1.0) * 7.0);
            const double m = eval_mean(spec, x, y);
            c.require(id + ": mean symmetric bit-for-bit", m == eval_mean(spec, y, x));
            const double scale = std::exp((src.uniform() * 2.0 - 1.0) * 3.0);
            c.within(id + ": mean 1-homogeneous",
                     (eval_mean(spec, scale * x, scale * y) - scale * m) / (scale * m), 1e-12);
            const double harmonic = 2.0 / (1.0 / x + 1.0 / y);
            const double arith = 0.5 * (x + y);
            c.below(id + ": mean >= harmonic", harmonic, m, 1e-12 * arith);
            c.below(id + ": mean <= arithmetic", m, arith, 1e-12 * arith);

            const double tilde = eval_tilde_mean(spec, x, y);
            const double identity_gap =
                (arith - tilde) - 0.5 * spec.f_zero() * (x - y) * (x - y) / m;
            c.within(id + ": tilde-mean identity", identity_gap / arith, 1e-10);
            c.below(id + ": tilde-mean >= harmonic", harmonic, tilde, 1e-10 * arith);
        }

        c.within(id + ": mean(x, x) = x", eval_mean(spec, 0.37, 0.37) - 0.37, 0.0);
        c.within(id + ": mean(1, 0) = f(0)", eval_mean(spec, 1.0, 0.0) - spec.f_zero(), 0.0);
        c.within(id + ": tilde(0) = 0", eval_tilde(spec, 0.0), 0.0);
        c.within(id + ": tilde(1) = 1", eval_tilde(spec, 1.0) - 1.0, 1e-15);
        c.within(id + ": tilde-mean(0, 5) = 0", eval_tilde_mean(spec, 0.0, 5.0), 0.0);
    }

    // alpha = 1/2 coincides with the Wigner-Yanase function
    const MonotoneFunctionSpec half = MonotoneFunctionSpec::wyd(0.5);
    const MonotoneFunctionSpec wy = MonotoneFunctionSpec::wy();
    for (int k = 0; k <= 60; ++k) {
        const double t = std::pow(10.0, -6.0 + 0.2 * k);
        c.within("wyd:0.5 matches wy at t = " + std::to_string(t),
                 eval_f(half, t) - eval_f(wy, t), 1e-10);
    }
    c.within("wyd:0.5 matches wy at t = 0", eval_f(half, 0.0) - eval_f(wy, 0.0), 1e-15);

    {
        double m = eval_mean(MonotoneFunctionSpec::sld(), 2.0, 4.0);
        if (inject_fault) {
            m += 1e-3;
        }
        c.within("sld mean(2, 4) = 3", m - 3.0, 1e-15);
    }
    return c.take();
}

SuiteResult suite_qstate(std::uint64_t seed) {
    Checker c("qstate");

    for (Eigen::Index n = 2; n <= 6; ++n) {
        const Observable m = random_observable(seed * 13 + static_cast<std::uint64_t>(n), n);
        const EighResult eg = eigh(m);
        const ComplexMatrix recon =
            eg.vectors * eg.values.asDiagonal() * eg.vectors.adjoint();
        c.within("eigh reconstruction n = " + std::to_string(n),
                 (recon - m.matrix()).cwiseAbs().maxCoeff(), 1e-9);
        c.within("eigh unitary vectors n = " + std::to_string(n),
                 (eg.vectors.adjoint() * eg.vectors - ComplexMatrix::Identity(n, n))
                     .cwiseAbs()
                     .maxCoeff(),
                 1e-9);
        bool sorted = true;
        for (Eigen::Index k = 1; k < n; ++k) {
            sorted = sorted && eg.values[k - 1] <= eg.values[k];
        }
        c.require("eigh values ascending n = " + std::to_string(n), sorted);
    }

    for (Eigen::Index n = 2; n <= 5; ++n) {
        const HermitianBasis basis = gell_mann_basis(n);
        double gram = 0.0;
        for (Eigen::Index i = 0; i < basis.size(); ++i) {
            for (Eigen::Index j = 0; j < basis.size(); ++j) {
                const double ip = (basis[i].matrix() * basis[j].matrix()).trace().real();
                gram = std::max(gram, std::abs(ip - (i == j ? 1.0 : 0.0)));
            }
        }
        c.within("gell-mann gram n = " + std::to_string(n), gram, 1e-12);

        const Observable m = random_observable(seed * 17 + static_cast<std::uint64_t>(n), n);
        ComplexMatrix expansion = ComplexMatrix::Zero(n, n);
        for (const Observable& h : basis.elements()) {
            expansion += (m.matrix() * h.matrix()).trace().real() * h.matrix();
        }
        c.within("basis expansion completeness n = " + std::to_string(n),
                 (expansion - m.matrix()).cwiseAbs().maxCoeff(), 1e-9);
    }

    for (Eigen::Index n = 2; n <= 4; ++n) {
        const DensityMatrix rho = random_density(seed * 19 + static_cast<std::uint64_t>(n), n, n);
        c.within("density trace n = " + std::to_string(n), rho.spectrum().sum() - 1.0, 1e-14);
        c.require("density spectrum nonnegative", rho.spectrum().minCoeff() >= 0.0);
        const ComplexMatrix recon = rho.eigenvectors() * rho.spectrum().asDiagonal() *
                                    rho.eigenvectors().adjoint();
        c.within("density reconstruction n = " + std::to_string(n),
                 (recon - rho.matrix()).cwiseAbs().maxCoeff(), 1e-9);

        const HermitianBasis adapted = eigen_adapted_basis(rho);
        double gram = 0.0;
        for (Eigen::Index i = 0; i < adapted.size(); ++i) {
            for (Eigen::Index j = 0; j < adapted.size(); ++j) {
                const double ip = (adapted[i].matrix() * adapted[j].matrix()).trace().real();
                gram = std::max(gram, std::abs(ip - (i == j ? 1.0 : 0.0)));
            }
        }
        c.within("eigen-adapted gram n = " + std::to_string(n), gram, 1e-9);

        const HermitianBasis gm = gell_mann_basis(n);
        const HermitianBasis rotated = rotate_basis(gm, seed * 23 + 7);
        gram = 0.0;
        double distance = 0.0;
        for (Eigen::Index i = 0; i < rotated.size(); ++i) {
            distance = std::max(
                distance, (rotated[i].matrix() - gm[i].matrix()).cwiseAbs().maxCoeff());
            for (Eigen::Index j = 0; j < rotated.size(); ++j) {
                const double ip = (rotated[i].matrix() * rotated[j].matrix()).trace().real();
                gram = std::max(gram, std::abs(ip - (i == j ? 1.0 : 0.0)));
            }
        }
        c.within("rotated basis gram n = " + std::to_string(n), gram, 1e-8);
        c.require("rotated basis differs", distance > 1e-3);
    }

    {
        const DensityMatrix a = random_density(seed * 29 + 1, 2, 2);
        const DensityMatrix b = random_density(seed * 29 + 2, 3, 3);
        const BipartiteState prod = product_state(a, b);
        c.within("partial trace recovers left factor",
                 (prod.reduced(Subsystem::A).matrix() - a.matrix()).cwiseAbs().maxCoeff(), 1e-12);
        c.within("partial trace recovers right factor",
                 (prod.reduced(Subsystem::B).matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-12);

        const DensityMatrix joint = random_density(seed * 29 + 3, 6, 6);
        const BipartiteState bip(2, 3, joint);
        c.within("partial trace preserves trace",
                 bip.reduced(Subsystem::A).matrix().trace().real() - 1.0, 1e-12);
        c.require("partial trace preserves positivity",
                  bip.reduced(Subsystem::B).spectrum().minCoeff() >= 0.0);

        const ComplexMatrix am = random_observable(seed * 29 + 4, 2).matrix();
        const ComplexMatrix bm = random_observable(seed * 29 + 5, 2).matrix();
        const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
        c.within("tensor mixed-product identity",
                 (tensor(am, id2) * tensor(id2, bm) - tensor(am, bm)).cwiseAbs().maxCoeff(),
                 1e-12);
    }

    {
        const ComplexMatrix u = haar_unitary(seed * 31 + 1, 4);
        c.within("haar unitary orthonormality",
                 (u.adjoint() * u - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-10);
        const ComplexMatrix u2 = haar_unitary(seed * 31 + 1, 4);
        c.require("haar unitary deterministic", u == u2);

        const DensityMatrix pure = random_density(seed * 31 + 2, 5, 1);
        c.within("rank-1 state has unit top eigenvalue", pure.spectrum()[0] - 1.0, 1e-12);
        const DensityMatrix pure2 = random_density(seed * 31 + 2, 5, 1);
        c.require("random density deterministic", pure.matrix() == pure2.matrix());
    }
    return c.take();
}

SuiteResult suite_measure_routes(std::uint64_t seed) {
    Checker c("measures.routes");

    int state_index = 0;
    for (Eigen::Index n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 5; ++rep, ++state_index) {
            const DensityMatrix rho =
                random_density(seed * 37 + static_cast<std::uint64_t>(state_index), n, n);
            const HermitianBasis gm = gell_mann_basis(n);
            const HermitianBasis adapted = eigen_adapted_basis(rho);
            const std::string tag = " [n=" + std::to_string(n) + " state " +
                                    std::to_string(state_index) + "]";

            for (const MonotoneFunctionSpec& spec : catalog()) {
                const double q_ref = q_uncertainty_spectral(spec, rho);
                c.within(spec.name() + ": gell-mann route" + tag,
                         q_uncertainty_basis(spec, rho, gm) - q_ref, 1e-8);
                c.within(spec.name() + ": eigen-adapted route" + tag,
                         q_uncertainty_basis(spec, rho, adapted) - q_ref, 1e-8);
                for (int rot = 0; rot < 10; ++rot) {
                    const HermitianBasis rb =
                        rotate_basis(gm, seed * 41 + static_cast<std::uint64_t>(100 * state_index + rot));
                    c.within(spec.name() + ": rotated route " + std::to_string(rot) + tag,
                             q_uncertainty_basis(spec, rho, rb) - q_ref, 1e-8);
                }
                c.within(spec.name() + ": tilde route" + tag,
                         q_uncertainty_tilde(spec, rho) - q_ref, 1e-9);
            }
            c.within("wy closed form" + tag,
                     q_uncertainty_spectral(MonotoneFunctionSpec::wy(), rho) - qwy_closed_form(rho),
                     1e-9);
        }
    }
    return c.take();
}

SuiteResult suite_measure_properties(std::uint64_t seed) {
    Checker c("measures.properties");

    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 2 + trial % 4;
        const std::uint64_t s = seed * 43 + static_cast<std::uint64_t>(trial);
        const DensityMatrix rho = random_density(s, n, n);
        const Observable h = random_observable(s + 5000, n);
        const std::string tag = " [trial " + std::to_string(trial) + "]";

        for (const MonotoneFunctionSpec& spec : catalog()) {
            const double skew = skew_information(spec, rho, h);
            c.below(spec.name() + ": skew <= variance" + tag, skew, variance(rho, h), 1e-10);
            c.require(spec.name() + ": skew nonnegative" + tag, skew >= 0.0);

            const ComplexMatrix u = haar_unitary(s + 6000, n);
            const DensityMatrix rho_u = DensityMatrix(conjugated(u, rho.matrix()));
            const Observable h_u = Observable(conjugated(u, h.matrix()));
            c.within(spec.name() + ": skew unitary invariance" + tag,
                     skew_information(spec, rho_u, h_u) - skew, 1e-9);
            c.within(spec.name() + ": Q unitary invariance" + tag,
                     q_uncertainty_spectral(spec, rho_u) - q_uncertainty_spectral(spec, rho),
                     1e-9);

            // H commuting with rho: a quadratic polynomial in rho
            const ComplexMatrix poly = 0.4 * ComplexMatrix::Identity(n, n) +
                                       1.3 * rho.matrix() - 0.7 * rho.matrix() * rho.matrix();
            c.within(spec.name() + ": commuting pair gives zero" + tag,
                     skew_information(spec, rho, Observable(poly)), 1e-12);

            const ComplexMatrix comm =
                std::complex<double>(0.0, 1.0) * (rho.matrix() * h.matrix() - h.matrix() * rho.matrix());
            c.within(spec.name() + ": metric matches skew on commutators" + tag,
                     rel_diff(monotone_metric(spec, rho, comm, comm), skew), 1e-10);

            const double q = q_uncertainty_spectral(spec, rho);
            c.require(spec.name() + ": Q >= 0" + tag, q >= 0.0);
            c.below(spec.name() + ": Q <= n-1" + tag, q, static_cast<double>(n - 1), 1e-10);
            c.below(spec.name() + ": Q <= Q_sld" + tag, q,
                    q_uncertainty_spectral(MonotoneFunctionSpec::sld(), rho), 1e-9);
        }

        const Observable h_sym = random_observable(s + 7000, n);
        const ComplexMatrix a = h.matrix();
        const ComplexMatrix b = h_sym.matrix();
        const MonotoneFunctionSpec wy = MonotoneFunctionSpec::wy();
        c.within("metric symmetric in Hermitian arguments" + tag,
                 monotone_metric(wy, rho, a, b) - monotone_metric(wy, rho, b, a), 1e-12);

        c.within("total variance equals summed variances" + tag,
                 [&] {
                     const HermitianBasis gm = gell_mann_basis(n);
                     double acc = 0.0;
                     for (const Observable& hb : gm.elements()) {
                         acc += variance(rho, hb);
                     }
                     return acc - total_variance(rho);
                 }(),
                 1e-9);
    }

    // mixture convexity of I^f and Q^f
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 2 + trial % 3;
        const std::uint64_t s = seed * 47 + static_cast<std::uint64_t>(trial);
        const DensityMatrix rho1 = random_density(s, n, n);
        const DensityMatrix rho2 = random_density(s + 9000, n, n);
        const Observable h = random_observable(s + 10000, n);
        const double w = 0.1 * (1 + trial % 9);
        const DensityMatrix mix =
            DensityMatrix(w * rho1.matrix() + (1.0 - w) * rho2.matrix());
        const std::string tag = " [trial " + std::to_string(trial) + "]";
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.below(spec.name() + ": I convex in rho" + tag, skew_information(spec, mix, h),
                    w * skew_information(spec, rho1, h) + (1.0 - w) * skew_information(spec, rho2, h),
                    1e-9);
            c.below(spec.name() + ": Q convex in rho" + tag, q_uncertainty_spectral(spec, mix),
                    w * q_uncertainty_spectral(spec, rho1) +
                        (1.0 - w) * q_uncertainty_spectral(spec, rho2),
                    1e-9);
        }
    }

    // weak superadditivity under the partial trace
    const std::vector<std::pair<Eigen::Index, Eigen::Index>> dims = {{2, 2}, {2, 3}, {3, 3}};
    for (int trial = 0; trial < 50; ++trial) {
        const auto [m, n] = dims[static_cast<std::size_t>(trial % 3)];
        const std::uint64_t s = seed * 53 + static_cast<std::uint64_t>(trial);
        const BipartiteState state(m, n, random_density(s, m * n, m * n));
        const Observable a = random_observable(s + 11000, m);
        const Observable a_ext =
            Observable(tensor(a.matrix(), ComplexMatrix::Identity(n, n)));
        const DensityMatrix rho_a = state.reduced(Subsystem::A);
        const std::string tag = " [trial " + std::to_string(trial) + "]";
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.below(spec.name() + ": weak superadditivity" + tag,
                    skew_information(spec, rho_a, a), skew_information(spec, state.state(), a_ext),
                    1e-9);
        }
    }

    // tight bounds
    for (Eigen::Index n = 2; n <= 8; ++n) {
        const DensityMatrix mixed = DensityMatrix::maximally_mixed(n);
        const DensityMatrix pure = random_density(seed * 59 + static_cast<std::uint64_t>(n), n, 1);
        const Observable h = random_observable(seed * 59 + 100 + static_cast<std::uint64_t>(n), n);
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.within(spec.name() + ": Q(1/n) = 0 [n=" + std::to_string(n) + "]",
                     q_uncertainty_spectral(spec, mixed), 1e-12);
            c.within(spec.name() + ": Q(pure) = n-1 [n=" + std::to_string(n) + "]",
                     q_uncertainty_spectral(spec, pure) - static_cast<double>(n - 1), 1e-10);
            c.within(spec.name() + ": pure-state skew equals variance [n=" + std::to_string(n) + "]",
                     skew_information(spec, pure, h) - variance(pure, h), 1e-10);
        }
    }
    return c.take();
}

SuiteResult suite_detect(std::uint64_t seed) {
    Checker c("detect");

    const std::vector<std::pair<Eigen::Index, Eigen::Index>> dims = {{2, 2}, {2, 3}, {3, 3}};
    for (int trial = 0; trial < 50; ++trial) {
        const auto [m, n] = dims[static_cast<std::size_t>(trial % 3)];
        const std::uint64_t s = seed * 61 + static_cast<std::uint64_t>(trial);
        const BipartiteState prod =
            product_state(random_density(s, m, m), random_density(s + 21000, n, n));
        const std::string tag = " [trial " + std::to_string(trial) + ", " + std::to_string(m) +
                                "x" + std::to_string(n) + "]";
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.within(spec.name() + ": f_bar vanishes on product states" + tag,
                     f_bar(spec, prod), 1e-8);
        }
    }

    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index m = 2 + trial % 2;
        const std::uint64_t s = seed * 67 + static_cast<std::uint64_t>(trial);
        const BipartiteState sep = random_separable_state(s, m, m);
        const std::string tag = " [trial " + std::to_string(trial) + ", m=" + std::to_string(m) + "]";
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.below(spec.name() + ": separable ceiling" + tag, f_hat(spec, sep),
                    2.0 * static_cast<double>(m) - 2.0, 1e-8);
        }
    }

    // classical-quantum states with distinct branches carry correlations
    {
        ComplexMatrix d0 = ComplexMatrix::Zero(2, 2);
        d0(0, 0) = 1.0;
        ComplexMatrix d1 = ComplexMatrix::Zero(2, 2);
        d1(1, 1) = 1.0;
        const BipartiteState cq = classical_quantum_state(
            {0.5, 0.5}, {DensityMatrix(d0), DensityMatrix(d1)});
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.require(spec.name() + ": distinct-branch cq state detected",
                      f_bar(spec, cq) > 1e-6);
        }
        const DensityMatrix branch = random_density(seed * 71 + 3, 2, 2);
        const BipartiteState cq_equal = classical_quantum_state({0.3, 0.7}, {branch, branch});
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.within(spec.name() + ": equal-branch cq state is product",
                     f_bar(spec, cq_equal), 1e-8);
        }
    }

    // closed form of the isotropic family, d = 3
    for (const MonotoneFunctionSpec& spec : catalog()) {
        double worst = 0.0;
        for (int k = 0; k <= 20; ++k) {
            const double p = 0.05 * k;
            const double numeric = f_hat(spec, isotropic_state(p, 3));
            const double closed = f_hat_isotropic_closed_form(spec, p, 3);
            worst = std::max(worst, rel_diff(numeric, closed));
        }
        c.within(spec.name() + ": isotropic closed form matches numeric sum", worst, 1e-8);
    }
    {
        double worst = 0.0;
        for (int k = 0; k <= 20; ++k) {
            const double p = 0.05 * k;
            worst = std::max(worst,
                             std::abs(v_hat(isotropic_state(p, 3)) - (16.0 + 4.0 * p) / 3.0));
        }
        c.within("isotropic variance sum is 16/3 + 4p/3", worst, 1e-8);
    }

    // basis invariance of both detectors under a joint rotation
    for (int trial = 0; trial < 5; ++trial) {
        const std::uint64_t s = seed * 73 + static_cast<std::uint64_t>(trial);
        const BipartiteState state(3, 3, random_density(s, 9, 9));
        const HermitianBasis gm = gell_mann_basis(3);
        const Eigen::MatrixXd rot = random_orthogonal(s + 23000, gm.size());
        const HermitianBasis rotated = rotate_basis(gm, rot);
        const std::string tag = " [trial " + std::to_string(trial) + "]";
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.within(spec.name() + ": f_bar basis invariance" + tag,
                     f_bar(spec, state, rotated) - f_bar(spec, state, gm), 1e-8);
            c.within(spec.name() + ": f_hat joint-rotation invariance" + tag,
                     f_hat(spec, state, rotated, rotated) - f_hat(spec, state, gm, gm), 1e-8);
        }
        for (const MonotoneFunctionSpec& spec : catalog()) {
            c.require(spec.name() + ": f_bar nonnegative" + tag,
                      f_bar(spec, state) >= -1e-8);
        }
    }
    return c.take();
}

} // namespace

bool SelftestReport::passed() const {
    for (const SuiteResult& s : suites) {
        if (s.failures > 0) {
            return false;
        }
    }
    return true;
}

int SelftestReport::total_checks() const {
    int acc = 0;
    for (const SuiteResult& s : suites) {
        acc += s.checks;
    }
    return acc;
}

int SelftestReport::total_failures() const {
    int acc = 0;
    for (const SuiteResult& s : suites) {
        acc += s.failures;
    }
    return acc;
}

SelftestReport run_selftest(std::uint64_t seed, const SelftestOptions& options) {
    SelftestReport report;
    report.seed = seed;
    report.suites.push_back(suite_specfun(seed, options.inject_fault));
    report.suites.push_back(suite_qstate(seed));
    report.suites.push_back(suite_measure_routes(seed));
    report.suites.push_back(suite_measure_properties(seed));
    report.suites.push_back(suite_detect(seed));
    return report;
}

} // namespace masi
