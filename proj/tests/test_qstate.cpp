#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "masi/errors.hpp"
#include "masi/qstate.hpp"

using namespace masi;

namespace {

const std::complex<double> I1(0.0, 1.0);

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, -I1, I1, 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

double max_gram_residual(const HermitianBasis& basis) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < basis.size(); ++i) {
        for (Eigen::Index j = 0; j < basis.size(); ++j) {
            const double ip = (basis[i].matrix() * basis[j].matrix()).trace().real();
            worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

bool basis_contains(const HermitianBasis& basis, const ComplexMatrix& target, double tol) {
    for (const Observable& h : basis.elements()) {
        if ((h.matrix() - target).cwiseAbs().maxCoeff() <= tol ||
            (h.matrix() + target).cwiseAbs().maxCoeff() <= tol) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("Observable: hermiticity is checked then enforced") {
    ComplexMatrix near(2, 2);
    near << 1.0, std::complex<double>(0.5, 1e-12), std::complex<double>(0.5, -3e-12), 2.0;
    const Observable obs(near);
    CHECK((obs.matrix() - obs.matrix().adjoint()).cwiseAbs().maxCoeff() == 0.0);

    ComplexMatrix bad(2, 2);
    bad << 1.0, 0.5, 0.7, 2.0;
    CHECK_THROWS_AS(Observable{bad}, InvariantError);
}

TEST_CASE("eigh: diagonal, Pauli, and random reconstruction") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const EighResult r = eigh(Observable(d));
    CHECK(r.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.values[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.values[2] == doctest::Approx(3.0).epsilon(1e-14));
    // permutation eigenvectors: one unit entry per column
    for (Eigen::Index j = 0; j < 3; ++j) {
        std::vector<double> mags;
        for (Eigen::Index i = 0; i < 3; ++i) {
            mags.push_back(std::abs(r.vectors(i, j)));
        }
        std::sort(mags.begin(), mags.end());
        CHECK(mags[2] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mags[1] <= 1e-12);
    }

    const EighResult px = eigh(Observable(pauli_x()));
    CHECK(px.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(px.values[1] == doctest::Approx(1.0).epsilon(1e-14));

    const Observable m = random_observable(91, 5);
    const EighResult rr = eigh(m);
    const ComplexMatrix recon = rr.vectors * rr.values.asDiagonal() * rr.vectors.adjoint();
    CHECK((recon - m.matrix()).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((rr.vectors.adjoint() * rr.vectors - ComplexMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() <=
          1e-9);
}

TEST_CASE("gell_mann_basis: Pauli basis at n = 2") {
    const HermitianBasis basis = gell_mann_basis(2);
    CHECK(basis.size() == 4);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(basis_contains(basis, s * ComplexMatrix::Identity(2, 2), 1e-15));
    CHECK(basis_contains(basis, s * pauli_x(), 1e-15));
    CHECK(basis_contains(basis, s * pauli_y(), 1e-15));
    CHECK(basis_contains(basis, s * pauli_z(), 1e-15));
}

TEST_CASE("gell_mann_basis: orthonormality and errors") {
    CHECK(max_gram_residual(gell_mann_basis(3)) <= 1e-12);
    CHECK(gell_mann_basis(3).size() == 9);
    CHECK(max_gram_residual(gell_mann_basis(5)) <= 1e-12);
    CHECK_THROWS_AS(gell_mann_basis(1), std::domain_error);
}

TEST_CASE("gell_mann_basis: expansion reproduces a random observable") {
    for (Eigen::Index n : {2, 3, 4}) {
        const HermitianBasis basis = gell_mann_basis(n);
        const Observable m = random_observable(311 + static_cast<std::uint64_t>(n), n);
        ComplexMatrix expansion = ComplexMatrix::Zero(n, n);
        for (const Observable& h : basis.elements()) {
            expansion += (m.matrix() * h.matrix()).trace().real() * h.matrix();
        }
        CHECK((expansion - m.matrix()).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("eigen_adapted_basis: diag(0.7, 0.3) yields the projector basis") {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 0.7;
    d(1, 1) = 0.3;
    const DensityMatrix rho(d);
    const HermitianBasis basis = eigen_adapted_basis(rho);

    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix sym = ComplexMatrix::Zero(2, 2);
    sym(0, 1) = s;
    sym(1, 0) = s;
    ComplexMatrix asym = ComplexMatrix::Zero(2, 2);
    asym(0, 1) = I1 * s;
    asym(1, 0) = -I1 * s;

    CHECK(basis_contains(basis, p0, 1e-12));
    CHECK(basis_contains(basis, p1, 1e-12));
    CHECK(basis_contains(basis, sym, 1e-12));
    CHECK(basis_contains(basis, asym, 1e-12));
    CHECK(max_gram_residual(basis) <= 1e-9);
}

TEST_CASE("eigen_adapted_basis: degenerate spectrum still orthonormal") {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
    CHECK(max_gram_residual(eigen_adapted_basis(mixed)) <= 1e-9);
    const DensityMatrix random = random_density(5, 3, 3);
    CHECK(max_gram_residual(eigen_adapted_basis(random)) <= 1e-9);
}

TEST_CASE("rotate_basis: identity rotation, orthonormality, seed dependence") {
    const HermitianBasis basis = gell_mann_basis(3);
    const HermitianBasis same = rotate_basis(basis, Eigen::MatrixXd::Identity(9, 9));
    for (Eigen::Index i = 0; i < basis.size(); ++i) {
        CHECK((same[i].matrix() - basis[i].matrix()).cwiseAbs().maxCoeff() <= 1e-14);
    }

    const HermitianBasis r1 = rotate_basis(basis, 12345);
    CHECK(max_gram_residual(r1) <= 1e-8);
    const HermitianBasis r2 = rotate_basis(basis, 54321);
    double distance = 0.0;
    for (Eigen::Index i = 0; i < basis.size(); ++i) {
        distance = std::max(distance, (r1[i].matrix() - r2[i].matrix()).cwiseAbs().maxCoeff());
    }
    CHECK(distance > 1e-3);
}

TEST_CASE("tensor: identities and the mixed-product rule") {
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    CHECK((tensor(id2, id2) - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected(1, 1) = 1.0;
    expected(2, 2) = -1.0;
    expected(3, 3) = -1.0;
    CHECK((tensor(pauli_z(), id2) - expected).cwiseAbs().maxCoeff() == 0.0);

    const ComplexMatrix a = random_observable(7, 2).matrix();
    const ComplexMatrix b = random_observable(8, 2).matrix();
    CHECK((tensor(a, id2) * tensor(id2, b) - tensor(a, b)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("partial_trace: product, maximally entangled, and random states") {
    const DensityMatrix a = random_density(21, 2, 2);
    const DensityMatrix b = random_density(22, 3, 3);
    const BipartiteState prod(2, 3, DensityMatrix(tensor(a.matrix(), b.matrix())));
    CHECK((partial_trace(prod, Subsystem::A).matrix() - a.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((partial_trace(prod, Subsystem::B).matrix() - b.matrix()).cwiseAbs().maxCoeff() <= 1e-12);

    // |Omega><Omega| at d = 3 reduces to 1/3
    ComplexMatrix omega = ComplexMatrix::Zero(9, 9);
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
            omega(i * 3 + i, j * 3 + j) = 1.0 / 3.0;
        }
    }
    const BipartiteState ent(3, 3, DensityMatrix(omega));
    CHECK((partial_trace(ent, Subsystem::A).matrix() - ComplexMatrix::Identity(3, 3) / 3.0)
              .cwiseAbs()
              .maxCoeff() <= 1e-12);

    const BipartiteState ginibre(2, 3, random_density(23, 6, 6));
    const DensityMatrix red = partial_trace(ginibre, Subsystem::B);
    CHECK(std::abs(red.matrix().trace().real() - 1.0) <= 1e-12);
    CHECK(red.spectrum().minCoeff() >= 0.0);
}

TEST_CASE("BipartiteState: dimension factorization enforced") {
    CHECK_THROWS_AS(BipartiteState(2, 2, random_density(1, 6, 6)), std::invalid_argument);
}

TEST_CASE("random_density: rank, determinism, validation") {
    const DensityMatrix pure = random_density(77, 4, 1);
    CHECK(std::abs(pure.spectrum()[0] - 1.0) <= 1e-12);
    CHECK(pure.spectrum().tail(3).cwiseAbs().maxCoeff() == 0.0);

    const DensityMatrix full = random_density(78, 4, 4);
    CHECK(full.spectrum().minCoeff() > 1e-12);
    int rank2_count = 0;
    const DensityMatrix rank2 = random_density(79, 4, 2);
    for (Eigen::Index k = 0; k < 4; ++k) {
        if (rank2.spectrum()[k] > 1e-12) {
            ++rank2_count;
        }
    }
    CHECK(rank2_count == 2);

    const DensityMatrix again = random_density(77, 4, 1);
    CHECK((pure.matrix().array() == again.matrix().array()).all());

    CHECK_THROWS_AS(random_density(1, 3, 0), std::domain_error);
    CHECK_THROWS_AS(random_density(1, 3, 4), std::domain_error);
}

TEST_CASE("haar_unitary: unitarity and determinism") {
    const ComplexMatrix u1 = haar_unitary(5, 1);
    CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) <= 1e-12);

    const ComplexMatrix u = haar_unitary(6, 4);
    CHECK((u.adjoint() * u - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-10);
    const ComplexMatrix v = haar_unitary(6, 4);
    CHECK((u.array() == v.array()).all());
}

TEST_CASE("DensityMatrix: construction invariants") {
    // trace renormalization
    ComplexMatrix near = ComplexMatrix::Identity(2, 2) * (0.5 + 2e-11);
    const DensityMatrix rho(near);
    CHECK(rho.spectrum().sum() == 1.0);

    // trace too far from one
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(2, 2))), InvariantError);

    // non-Hermitian input
    ComplexMatrix skew(2, 2);
    skew << 0.5, 0.3, -0.3, 0.5;
    CHECK_THROWS_AS(DensityMatrix{skew}, InvariantError);

    // tiny negative eigenvalue is clamped to exactly zero
    ComplexMatrix dirty = ComplexMatrix::Zero(2, 2);
    dirty(0, 0) = 1.0 + 1e-10;
    dirty(1, 1) = -1e-10;
    const DensityMatrix clamped(dirty);
    CHECK(clamped.spectrum()[1] == 0.0);
    CHECK(clamped.spectrum()[0] == 1.0);

    // a genuinely negative eigenvalue is an error
    ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix{negative}, InvariantError);

    // reconstruction from the cached decomposition
    const DensityMatrix rnd = random_density(101, 5, 5);
    const ComplexMatrix recon =
        rnd.eigenvectors() * rnd.spectrum().asDiagonal() * rnd.eigenvectors().adjoint();
    CHECK((recon - rnd.matrix()).cwiseAbs().maxCoeff() <= 1e-9);
    bool descending = true;
    for (Eigen::Index k = 1; k < 5; ++k) {
        descending = descending && rnd.spectrum()[k - 1] >= rnd.spectrum()[k];
    }
    CHECK(descending);
}
