#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "orthoframe/matrix.hpp"

namespace orthoframe {

/// Raised when an iteration fails to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
    double residual;
};

/// Square real matrix validated as symmetric on construction:
/// |a_ij - a_ji| <= 1e-12 * max(1, |A|_inf). Stored exactly symmetrized.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(const Matrix& a);

    std::size_t order() const { return m_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

/// Orthogonal U and eigenvalues D (ascending) with A = U diag(D) U^T.
/// Column U(:,k) pairs with D[k]. offdiag_history holds the off-diagonal
/// energy after each completed sweep, for monotonicity checks.
struct SpectralFactors {
    Matrix eigenvectors;               // U
    std::vector<double> eigenvalues;   // D, ascending
    std::vector<double> offdiag_history;
};

/// Sum of squares of off-diagonal entries; the Jacobi descent functional.
double offdiag_energy(const SymmetricMatrix& a);
double offdiag_energy(const Matrix& a);

/// Angle theta in [0, pi/2] such that the plane rotation
/// U = [cos sin; -sin cos] on rows/cols (r,s) zeroes entry (r,s) of U^T A U.
double jacobi_rotation_angle(const SymmetricMatrix& a, std::size_t r, std::size_t s);

/// Cyclic-by-rows Jacobi sweeps until the off-diagonal energy falls below
/// tol^2. Default tol is 1e-12 * |A|_F. Throws ConvergenceError after
/// max_sweeps (default 50) sweeps.
SpectralFactors jacobi_eigendecomposition(const SymmetricMatrix& a, double tol = -1.0,
                                          int max_sweeps = 50);

/// Smallest eigenvalue and a unit eigenvector for it.
std::pair<double, std::vector<double>> min_eigenpair(const SymmetricMatrix& a);

bool is_positive_definite(const SymmetricMatrix& a);

/// Spectral square root of a positive semi-definite matrix. Eigenvalues
/// negative within -1e-10 * |C|_inf are clamped to zero; materially negative
/// ones raise std::domain_error.
SymmetricMatrix sqrt_spd(const SymmetricMatrix& c);

}  // namespace orthoframe
