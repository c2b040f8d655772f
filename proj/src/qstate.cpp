#include "masi/qstate.hpp"
#include "masi/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace masi {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigNegTol = 1e-9;   // below -kEigNegTol: hard error
constexpr double kEigZeroTol = 1e-12; // below this: clamped to exactly 0
constexpr double kBasisGramTol = 1e-9;

// Full Gram validation is O(dim^6); skip it for large systems where the
// named constructors guarantee orthonormality anyway.
constexpr Eigen::Index kBasisValidateMaxDim = 16;

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square and nonempty");
    }
}

} // namespace

double GaussianSource::uniform() {
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianSource::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

std::complex<double> GaussianSource::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

Observable::Observable(ComplexMatrix m) : mat_(std::move(m)) {
    require_square(mat_, "Observable");
    if (!mat_.allFinite()) {
        throw InvariantError("Observable: entries must be finite");
    }
    const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol) {
        throw InvariantError("Observable: matrix is not Hermitian (max deviation " +
                             std::to_string(herm) + ")");
    }
    mat_ = 0.5 * (mat_ + mat_.adjoint()).eval();
}

EighResult eigh(const Observable& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigh: eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
    require_square(m, "DensityMatrix");
    if (!m.allFinite()) {
        throw InvariantError("DensityMatrix: entries must be finite");
    }
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermTol) {
        throw InvariantError("DensityMatrix: matrix is not Hermitian (max deviation " +
                             std::to_string(herm) + ")");
    }
    mat_ = 0.5 * (m + m.adjoint()).eval();

    const double tr = mat_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw InvariantError("DensityMatrix: trace " + std::to_string(tr) + " is not 1");
    }
    mat_ /= tr;

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("DensityMatrix: eigendecomposition failed");
    }

    const Eigen::Index n = mat_.rows();
    spectrum_.resize(n);
    eigenvectors_.resize(n, n);
    // descending order
    for (Eigen::Index k = 0; k < n; ++k) {
        spectrum_[k] = solver.eigenvalues()[n - 1 - k];
        eigenvectors_.col(k) = solver.eigenvectors().col(n - 1 - k);
    }

    for (Eigen::Index k = 0; k < n; ++k) {
        if (spectrum_[k] < -kEigNegTol) {
            throw InvariantError("DensityMatrix: eigenvalue " + std::to_string(spectrum_[k]) +
                                 " below tolerance, matrix is not positive semidefinite");
        }
        if (spectrum_[k] < kEigZeroTol) {
            spectrum_[k] = 0.0;
        }
    }
    spectrum_ /= spectrum_.sum();
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index n) {
    if (n < 1) {
        throw std::domain_error("maximally_mixed: dimension must be positive");
    }
    ComplexMatrix m = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
    return DensityMatrix(m);
}

HermitianBasis::HermitianBasis(Eigen::Index dim, std::vector<Observable> elements)
    : dim_(dim), elements_(std::move(elements)) {
    if (dim_ < 1) {
        throw std::invalid_argument("HermitianBasis: dimension must be positive");
    }
    if (static_cast<Eigen::Index>(elements_.size()) != dim_ * dim_) {
        throw std::invalid_argument("HermitianBasis: expected dim^2 elements");
    }
    for (const Observable& h : elements_) {
        if (h.dim() != dim_) {
            throw std::invalid_argument("HermitianBasis: element dimension mismatch");
        }
    }
    if (dim_ <= kBasisValidateMaxDim) {
        const Eigen::Index n2 = dim_ * dim_;
        for (Eigen::Index i = 0; i < n2; ++i) {
            for (Eigen::Index j = i; j < n2; ++j) {
                const double ip = (elements_[i].matrix() * elements_[j].matrix()).trace().real();
                const double target = (i == j) ? 1.0 : 0.0;
                if (std::abs(ip - target) > kBasisGramTol) {
                    throw InvariantError("HermitianBasis: elements are not trace-orthonormal");
                }
            }
        }
    }
}

HermitianBasis gell_mann_basis(Eigen::Index n) {
    if (n < 2) {
        throw std::domain_error("gell_mann_basis: dimension must be at least 2");
    }
    std::vector<Observable> elems;
    elems.reserve(static_cast<std::size_t>(n * n));

    elems.emplace_back(ComplexMatrix(ComplexMatrix::Identity(n, n) / std::sqrt(static_cast<double>(n))));

    for (Eigen::Index l = 1; l < n; ++l) {
        ComplexMatrix d = ComplexMatrix::Zero(n, n);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
        for (Eigen::Index i = 0; i < l; ++i) {
            d(i, i) = norm;
        }
        d(l, l) = -static_cast<double>(l) * norm;
        elems.emplace_back(std::move(d));
    }

    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index j = k + 1; j < n; ++j) {
            ComplexMatrix sym = ComplexMatrix::Zero(n, n);
            sym(k, j) = s;
            sym(j, k) = s;
            elems.emplace_back(std::move(sym));

            ComplexMatrix asym = ComplexMatrix::Zero(n, n);
            asym(k, j) = std::complex<double>(0.0, -s);
            asym(j, k) = std::complex<double>(0.0, s);
            elems.emplace_back(std::move(asym));
        }
    }
    return {n, std::move(elems)};
}

HermitianBasis eigen_adapted_basis(const DensityMatrix& rho) {
    const Eigen::Index n = rho.dim();
    const ComplexMatrix& v = rho.eigenvectors();
    std::vector<Observable> elems;
    elems.reserve(static_cast<std::size_t>(n * n));

    for (Eigen::Index j = 0; j < n; ++j) {
        elems.emplace_back(ComplexMatrix(v.col(j) * v.col(j).adjoint()));
    }
    const double s = 1.0 / std::sqrt(2.0);
    const std::complex<double> is(0.0, s);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index j = k + 1; j < n; ++j) {
            elems.emplace_back(ComplexMatrix(s * (v.col(k) * v.col(j).adjoint()) +
                                             s * (v.col(j) * v.col(k).adjoint())));
            elems.emplace_back(ComplexMatrix(is * (v.col(k) * v.col(j).adjoint()) -
                                             is * (v.col(j) * v.col(k).adjoint())));
        }
    }
    return {n, std::move(elems)};
}

Eigen::MatrixXd random_orthogonal(std::uint64_t seed, Eigen::Index n) {
    GaussianSource src(seed);
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = src.gaussian();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (qr.matrixQR()(i, i) < 0.0) {
            q.col(i) = -q.col(i);
        }
    }
    return q;
}

HermitianBasis rotate_basis(const HermitianBasis& basis, const Eigen::MatrixXd& coeffs) {
    const Eigen::Index n2 = basis.size();
    if (coeffs.rows() != n2 || coeffs.cols() != n2) {
        throw std::invalid_argument("rotate_basis: coefficient matrix must be n^2 x n^2");
    }
    std::vector<Observable> elems;
    elems.reserve(static_cast<std::size_t>(n2));
    for (Eigen::Index i = 0; i < n2; ++i) {
        ComplexMatrix k = ComplexMatrix::Zero(basis.dim(), basis.dim());
        for (Eigen::Index j = 0; j < n2; ++j) {
            k += coeffs(i, j) * basis[j].matrix();
        }
        elems.emplace_back(std::move(k));
    }
    return {basis.dim(), std::move(elems)};
}

HermitianBasis rotate_basis(const HermitianBasis& basis, std::uint64_t seed) {
    return rotate_basis(basis, random_orthogonal(seed, basis.size()));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

BipartiteState::BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, DensityMatrix state)
    : dim_a_(dim_a), dim_b_(dim_b), state_(std::move(state)) {
    if (dim_a_ < 1 || dim_b_ < 1) {
        throw std::invalid_argument("BipartiteState: dimensions must be positive");
    }
    if (dim_a_ * dim_b_ != state_.dim()) {
        throw std::invalid_argument("BipartiteState: dims (" + std::to_string(dim_a_) + ", " +
                                    std::to_string(dim_b_) + ") do not factor the state dimension " +
                                    std::to_string(state_.dim()));
    }
}

DensityMatrix BipartiteState::reduced(Subsystem keep) const {
    return partial_trace(*this, keep);
}

DensityMatrix partial_trace(const BipartiteState& state, Subsystem keep) {
    const Eigen::Index m = state.dim_a();
    const Eigen::Index n = state.dim_b();
    const ComplexMatrix& rho = state.state().matrix();

    if (keep == Subsystem::A) {
        ComplexMatrix out = ComplexMatrix::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = 0; j < m; ++j) {
                for (Eigen::Index k = 0; k < n; ++k) {
                    out(i, j) += rho(i * n + k, j * n + k);
                }
            }
        }
        return DensityMatrix(out);
    }
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            for (Eigen::Index i = 0; i < m; ++i) {
                out(k, l) += rho(i * n + k, i * n + l);
            }
        }
    }
    return DensityMatrix(out);
}

DensityMatrix random_density(std::uint64_t seed, Eigen::Index n, Eigen::Index rank) {
    if (n < 1) {
        throw std::domain_error("random_density: dimension must be positive");
    }
    if (rank < 1 || rank > n) {
        throw std::domain_error("random_density: rank must lie in [1, n]");
    }
    GaussianSource src(seed);
    ComplexMatrix g(n, rank);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < rank; ++j) {
            g(i, j) = src.complex_gaussian();
        }
    }
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(m);
}

ComplexMatrix haar_unitary(std::uint64_t seed, Eigen::Index n) {
    if (n < 1) {
        throw std::domain_error("haar_unitary: dimension must be positive");
    }
    GaussianSource src(seed);
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = src.complex_gaussian();
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::complex<double> r = qr.matrixQR()(i, i);
        const double mag = std::abs(r);
        const std::complex<double> phase = mag > 0.0 ? r / mag : std::complex<double>(1.0, 0.0);
        q.col(i) *= phase;
    }
    return q;
}

Observable random_observable(std::uint64_t seed, Eigen::Index n) {
    if (n < 1) {
        throw std::domain_error("random_observable: dimension must be positive");
    }
    GaussianSource src(seed);
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = src.complex_gaussian();
        }
    }
    return Observable(0.5 * (g + g.adjoint()).eval());
}

} // namespace masi
