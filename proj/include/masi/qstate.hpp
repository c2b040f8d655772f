#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace masi {

using ComplexMatrix = Eigen::MatrixXcd;

/// A Hermitian operator. Construction checks max|M - M^dag| <= 1e-10 and
/// then symmetrizes, so matrix() is exactly Hermitian.
class Observable {
public:
    explicit Observable(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }

private:
    ComplexMatrix mat_;
};

struct EighResult {
    Eigen::VectorXd values;  ///< ascending
    ComplexMatrix vectors;   ///< unitary, column k pairs with values[k]
};

/// Spectral decomposition M = V diag(values) V^dag of a Hermitian operator.
EighResult eigh(const Observable& m);

/// A density operator with its spectral decomposition cached at construction.
///
/// The input must be Hermitian to 1e-10 and have trace within 1e-10 of one;
/// it is then symmetrized and renormalized. Eigenvalues below -1e-9 are a
/// hard error; values in [-1e-9, 1e-12) are clamped to exactly zero and the
/// spectrum renormalized to sum one.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m);

    static DensityMatrix maximally_mixed(Eigen::Index n);

    const ComplexMatrix& matrix() const { return mat_; }
    /// Clamped spectrum, descending, sums to one.
    const Eigen::VectorXd& spectrum() const { return spectrum_; }
    /// Unitary of eigenvectors, column k pairs with spectrum()[k].
    const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
    Eigen::Index dim() const { return mat_.rows(); }

private:
    ComplexMatrix mat_;
    Eigen::VectorXd spectrum_;
    ComplexMatrix eigenvectors_;
};

/// n^2 observables, orthonormal under <A,B> = tr(AB).
class HermitianBasis {
public:
    HermitianBasis(Eigen::Index dim, std::vector<Observable> elements);

    Eigen::Index dim() const { return dim_; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(elements_.size()); }
    const Observable& operator[](Eigen::Index j) const { return elements_[static_cast<std::size_t>(j)]; }
    const std::vector<Observable>& elements() const { return elements_; }

private:
    Eigen::Index dim_;
    std::vector<Observable> elements_;
};

/// Generalized Gell-Mann basis: identity/sqrt(n), symmetric and antisymmetric
/// off-diagonal pairs, and traceless diagonal elements. n >= 2.
HermitianBasis gell_mann_basis(Eigen::Index n);

/// Basis adapted to rho's eigenvectors {|phi_j>}: the projectors
/// |phi_j><phi_j|, then (|phi_k><phi_j| + h.c.)/sqrt(2) and
/// (i|phi_k><phi_j| + h.c.)/sqrt(2) for k < j.
HermitianBasis eigen_adapted_basis(const DensityMatrix& rho);

/// Seeded random real orthogonal matrix (QR of a Gaussian matrix with sign
/// correction on the R diagonal).
Eigen::MatrixXd random_orthogonal(std::uint64_t seed, Eigen::Index n);

/// New basis K_i = sum_j coeffs(i,j) H_j for a real orthogonal coeffs.
HermitianBasis rotate_basis(const HermitianBasis& basis, const Eigen::MatrixXd& coeffs);

/// Rotation by random_orthogonal(seed, n^2).
HermitianBasis rotate_basis(const HermitianBasis& basis, std::uint64_t seed);

/// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// A density operator on a tensor-product space with remembered factor
/// dimensions (m, n).
class BipartiteState {
public:
    BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, DensityMatrix state);

    Eigen::Index dim_a() const { return dim_a_; }
    Eigen::Index dim_b() const { return dim_b_; }
    const DensityMatrix& state() const { return state_; }

    DensityMatrix reduced(Subsystem keep) const;

private:
    Eigen::Index dim_a_;
    Eigen::Index dim_b_;
    DensityMatrix state_;
};

DensityMatrix partial_trace(const BipartiteState& state, Subsystem keep);

/// rho = G G^dag / tr(G G^dag) for a seeded n x rank complex Gaussian G.
DensityMatrix random_density(std::uint64_t seed, Eigen::Index n, Eigen::Index rank);

/// Seeded Haar-random unitary (QR with phase fixing).
ComplexMatrix haar_unitary(std::uint64_t seed, Eigen::Index n);

/// Seeded random Hermitian matrix with Gaussian entries, symmetrized.
Observable random_observable(std::uint64_t seed, Eigen::Index n);

/// Deterministic Gaussian stream: mt19937_64 bits -> 53-bit uniform ->
/// Box-Muller. Identical output on every platform for a given seed.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double uniform();   ///< strictly inside (0, 1)
    double gaussian();  ///< standard normal
    std::complex<double> complex_gaussian(); ///< independent N(0,1) parts

private:
    std::mt19937_64 rng_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace masi
