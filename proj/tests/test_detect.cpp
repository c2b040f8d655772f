#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "masi/detect.hpp"
#include "masi/measures.hpp"
#include "masi/qstate.hpp"

using namespace masi;

namespace {

const std::complex<double> I1(0.0, 1.0);

std::vector<MonotoneFunctionSpec> catalog() {
    return {MonotoneFunctionSpec::wy(), MonotoneFunctionSpec::sld(),
            MonotoneFunctionSpec::wyd(0.25), MonotoneFunctionSpec::wyd(0.5),
            MonotoneFunctionSpec::wyd(0.75)};
}

ComplexMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j, std::complex<double> v) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    m(i, j) = v;
    return m;
}

// The canonical local observable basis for a qutrit: three projectors, three
// symmetrized pairs, three antisymmetrized pairs.
std::vector<Observable> qutrit_projector_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Observable> list;
    for (Eigen::Index j = 0; j < 3; ++j) {
        list.emplace_back(unit(3, j, j, 1.0));
    }
    list.emplace_back(ComplexMatrix(unit(3, 0, 1, s) + unit(3, 1, 0, s)));
    list.emplace_back(ComplexMatrix(unit(3, 0, 2, s) + unit(3, 2, 0, s)));
    list.emplace_back(ComplexMatrix(unit(3, 1, 2, s) + unit(3, 2, 1, s)));
    list.emplace_back(ComplexMatrix(unit(3, 0, 1, I1 * s) + unit(3, 1, 0, -I1 * s)));
    list.emplace_back(ComplexMatrix(unit(3, 0, 2, I1 * s) + unit(3, 2, 0, -I1 * s)));
    list.emplace_back(ComplexMatrix(unit(3, 1, 2, I1 * s) + unit(3, 2, 1, -I1 * s)));
    return list;
}

} // namespace

TEST_CASE("isotropic_state: spectrum and boundaries") {
    const BipartiteState flat = isotropic_state(0.0, 3);
    CHECK((flat.state().matrix() - ComplexMatrix::Identity(9, 9) / 9.0).cwiseAbs().maxCoeff() <=
          1e-15);

    const BipartiteState pure = isotropic_state(1.0, 3);
    CHECK(std::abs(pure.state().spectrum()[0] - 1.0) <= 1e-12);
    CHECK(pure.state().spectrum().tail(8).cwiseAbs().maxCoeff() == 0.0);

    // spectrum (1-p)/d^2 + p once, (1-p)/d^2 with multiplicity d^2 - 1
    const BipartiteState mid = isotropic_state(0.7, 3);
    CHECK(std::abs(mid.state().spectrum()[0] - (0.3 / 9.0 + 0.7)) <= 1e-12);
    for (Eigen::Index k = 1; k < 9; ++k) {
        CHECK(std::abs(mid.state().spectrum()[k] - 0.3 / 9.0) <= 1e-12);
    }

    CHECK_THROWS_AS(isotropic_state(-0.1, 3), std::domain_error);
    CHECK_THROWS_AS(isotropic_state(1.1, 3), std::domain_error);
}

TEST_CASE("f_hat: the d = 3 isotropic family") {
    // p = 0.7 with the arithmetic-mean spec: 29400/6900
    const double expected = (20.0 / 3.0) * 0.5 * 0.49 / (0.5 * (6.6 / 9.0 + 0.3 / 9.0));
    CHECK(expected == doctest::Approx(4.2609).epsilon(2e-5));
    const double fh = f_hat(MonotoneFunctionSpec::sld(), isotropic_state(0.7, 3));
    CHECK(std::abs(fh - expected) <= 1e-10);
    CHECK(std::abs(fh - 4.2609) <= 5e-4);

    CHECK(f_hat(MonotoneFunctionSpec::wy(), isotropic_state(0.0, 3)) <= 1e-12);
    for (const auto& spec : catalog()) {
        CHECK(std::abs(f_hat(spec, isotropic_state(1.0, 3)) - 20.0 / 3.0) <= 1e-9);
    }
}

TEST_CASE("f_hat: closed form matches the numeric sum") {
    CHECK(std::abs(f_hat_isotropic_closed_form(MonotoneFunctionSpec::sld(), 0.7) - 4.26087) <=
          5e-6);
    for (const auto& spec : catalog()) {
        CHECK(f_hat_isotropic_closed_form(spec, 0.0) == 0.0);
        CHECK(std::abs(f_hat_isotropic_closed_form(MonotoneFunctionSpec::wy(), 1.0) - 20.0 / 3.0) <=
              1e-12);
        for (int k = 0; k <= 10; ++k) {
            const double p = 0.1 * k;
            const double numeric = f_hat(spec, isotropic_state(p, 3));
            const double closed = f_hat_isotropic_closed_form(spec, p, 3);
            CHECK(std::abs(numeric - closed) <= 1e-8 * std::max(1.0, closed));
        }
    }
}

TEST_CASE("f_hat: mismatched factor dimensions are rejected") {
    const BipartiteState rect(2, 3, random_density(5, 6, 6));
    CHECK_THROWS_AS(f_hat(MonotoneFunctionSpec::wy(), rect), std::domain_error);
    CHECK_THROWS_AS(v_hat(rect), std::domain_error);
    CHECK_THROWS_AS(detect_entanglement(MonotoneFunctionSpec::wy(), rect), std::domain_error);
}

TEST_CASE("v_hat: 16/3 + 4p/3 on the isotropic family") {
    for (int k = 0; k <= 10; ++k) {
        const double p = 0.1 * k;
        CHECK(std::abs(v_hat(isotropic_state(p, 3)) - (16.0 + 4.0 * p) / 3.0) <= 1e-8);
    }
    CHECK(std::abs(v_hat(isotropic_state(0.0, 3)) - 16.0 / 3.0) <= 1e-10);
    CHECK(std::abs(v_hat(isotropic_state(1.0, 3)) - 20.0 / 3.0) <= 1e-10);
}

TEST_CASE("f_bar: product states carry no correlations") {
    const BipartiteState prod = product_state(random_density(31, 2, 2), random_density(32, 3, 3));
    for (const auto& spec : catalog()) {
        CHECK(std::abs(f_bar(spec, prod)) <= 1e-9);
    }
}

TEST_CASE("f_bar: classically correlated and maximally entangled states") {
    // (|00><00| + |11><11|)/2
    ComplexMatrix cc = ComplexMatrix::Zero(4, 4);
    cc(0, 0) = 0.5;
    cc(3, 3) = 0.5;
    const BipartiteState classical(2, 2, DensityMatrix(cc));
    for (const auto& spec : catalog()) {
        CHECK(f_bar(spec, classical) > 1e-3);
    }

    const BipartiteState ent = isotropic_state(1.0, 3);
    // the reduced state is 1/3, so the subtracted sum vanishes
    for (const auto& spec : catalog()) {
        CHECK(q_uncertainty_basis(spec, ent.reduced(Subsystem::A), gell_mann_basis(3)) <= 1e-12);
        CHECK(f_bar(spec, ent) > 0.0);
    }
}

TEST_CASE("classical_quantum_state: construction and detection") {
    const DensityMatrix branch = random_density(41, 2, 2);
    const BipartiteState equal = classical_quantum_state({0.25, 0.75}, {branch, branch});
    for (const auto& spec : catalog()) {
        CHECK(std::abs(f_bar(spec, equal)) <= 1e-9);
    }

    ComplexMatrix d0 = ComplexMatrix::Zero(2, 2);
    d0(0, 0) = 1.0;
    ComplexMatrix d1 = ComplexMatrix::Zero(2, 2);
    d1(1, 1) = 1.0;
    const BipartiteState distinct =
        classical_quantum_state({0.5, 0.5}, {DensityMatrix(d0), DensityMatrix(d1)});
    for (const auto& spec : catalog()) {
        CHECK(f_bar(spec, distinct) > 1e-3);
    }

    const BipartiteState single = classical_quantum_state({1.0}, {branch});
    CHECK(single.dim_a() == 1);
    // a single branch is rho_a x branch with a trivial first factor; the
    // state equals the branch on the second factor
    CHECK((single.reduced(Subsystem::B).matrix() - branch.matrix()).cwiseAbs().maxCoeff() <=
          1e-12);
    for (const auto& spec : catalog()) {
        CHECK(std::abs(f_bar(spec, single)) <= 1e-9);
    }

    CHECK_THROWS_AS(classical_quantum_state({0.5, 0.4}, {branch, branch}), std::domain_error);
    CHECK_THROWS_AS(classical_quantum_state({0.5, 0.5}, {branch}), std::invalid_argument);
}

TEST_CASE("detectors are invariant under a joint basis rotation") {
    const BipartiteState state(3, 3, random_density(51, 9, 9));
    const HermitianBasis gm = gell_mann_basis(3);
    const Eigen::MatrixXd rot = random_orthogonal(52, gm.size());
    const HermitianBasis rotated = rotate_basis(gm, rot);
    for (const auto& spec : catalog()) {
        CHECK(std::abs(f_bar(spec, state, rotated) - f_bar(spec, state, gm)) <= 1e-8);
        CHECK(std::abs(f_hat(spec, state, rotated, rotated) - f_hat(spec, state, gm, gm)) <= 1e-8);
        CHECK(std::abs(v_hat(state, rotated, rotated) - v_hat(state, gm, gm)) <= 1e-8);
    }
}

TEST_CASE("gell-mann defaults reproduce the qutrit projector-basis values") {
    const std::vector<Observable> proj = qutrit_projector_basis();
    std::vector<Observable> elems = proj;
    const HermitianBasis proj_basis(3, std::move(elems));
    const HermitianBasis gm = gell_mann_basis(3);

    // the off-diagonal sector agrees element by element up to order and sign
    for (std::size_t i = 3; i < 9; ++i) {
        bool found = false;
        for (const Observable& h : gm.elements()) {
            if ((h.matrix() - proj[i].matrix()).cwiseAbs().maxCoeff() <= 1e-14 ||
                (h.matrix() + proj[i].matrix()).cwiseAbs().maxCoeff() <= 1e-14) {
                found = true;
                break;
            }
        }
        CHECK(found);
    }

    // identical detector values on the paper-style fixture
    const BipartiteState state = isotropic_state(0.7, 3);
    for (const auto& spec : catalog()) {
        CHECK(std::abs(f_hat(spec, state, proj_basis, proj_basis) - f_hat(spec, state)) <= 1e-10);
    }
    CHECK(std::abs(v_hat(state, proj_basis, proj_basis) - v_hat(state)) <= 1e-10);
    const BipartiteState rnd(3, 3, random_density(53, 9, 9));
    for (const auto& spec : catalog()) {
        CHECK(std::abs(f_bar(spec, rnd, proj_basis) - f_bar(spec, rnd)) <= 1e-8);
    }
}

TEST_CASE("random separable mixtures respect the ceiling") {
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Index m = 2 + trial % 2;
        const BipartiteState sep = random_separable_state(60 + trial, m, m);
        for (const auto& spec : catalog()) {
            CHECK(f_hat(spec, sep) <= 2.0 * static_cast<double>(m) - 2.0 + 1e-8);
        }
    }
}

TEST_CASE("detect_entanglement: verdicts") {
    const DetectionReport hit =
        detect_entanglement(MonotoneFunctionSpec::sld(), isotropic_state(0.7, 3));
    CHECK(hit.overall == Verdict::Entangled);
    CHECK(hit.entries.size() == 2);
    CHECK(hit.entries[0].measure == "f_hat");
    CHECK(std::abs(hit.entries[0].value - 4.2609) <= 5e-4);
    CHECK(hit.entries[0].threshold == 4.0);
    CHECK(hit.entries[0].verdict == Verdict::Entangled);
    CHECK(hit.entries[1].measure == "v_hat");
    CHECK(std::abs(hit.entries[1].value - 18.8 / 3.0) <= 1e-8);
    CHECK(hit.entries[1].verdict == Verdict::Inconclusive);

    const DetectionReport prod = detect_entanglement(
        MonotoneFunctionSpec::sld(), product_state(random_density(71, 3, 3), random_density(72, 3, 3)));
    CHECK(prod.overall == Verdict::Inconclusive);

    const DetectionReport weak =
        detect_entanglement(MonotoneFunctionSpec::sld(), isotropic_state(0.2, 3));
    CHECK(weak.overall == Verdict::Inconclusive);

    const MeasureReport fbar_prod = f_bar_report(
        MonotoneFunctionSpec::wy(), product_state(random_density(73, 2, 2), random_density(74, 2, 2)));
    CHECK(fbar_prod.verdict == Verdict::Product);
    const MeasureReport fbar_ent = f_bar_report(MonotoneFunctionSpec::wy(), isotropic_state(0.7, 3));
    CHECK(fbar_ent.verdict == Verdict::Correlated);
}
