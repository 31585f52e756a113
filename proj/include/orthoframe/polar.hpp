#pragma once

#include "orthoframe/matrix.hpp"
#include "orthoframe/spectral.hpp"

namespace orthoframe {

/// A = R * P with R orthogonal, P symmetric positive definite, and
/// X = log P so that A = R * exp(X).
struct PolarFactors {
    Matrix rotation;   // R
    Matrix stretch;    // P
    Matrix log_stretch;  // X
};

/// Unique polar factorization of an invertible square matrix, computed from
/// the spectral factors of A^T A. Throws std::domain_error when the smallest
/// eigenvalue of A^T A signals a singular input.
PolarFactors polar_decompose(const Matrix& a);

/// exp of a symmetric matrix via its spectral factors; always SPD.
SymmetricMatrix matrix_exp_sym(const SymmetricMatrix& x);

/// log of a symmetric positive definite matrix via its spectral factors.
/// Throws std::domain_error on non-SPD input.
SymmetricMatrix matrix_log_spd(const SymmetricMatrix& p);

struct SvdFactors {
    Matrix u;                              // W
    std::vector<double> singular_values;   // descending, all > 0
    Matrix v;
};

/// SVD of an invertible square matrix through its polar form:
/// A = R P, P = V diag(g) V^T gives A = (R V) diag(g) V^T.
SvdFactors svd_via_polar(const Matrix& a);

/// Point at parameter t on the straight-line retraction in log coordinates,
/// A(t) = R exp((1-t) X). A(0) = A, A(1) = R, invertible throughout.
Matrix polar_retraction_path(const Matrix& a, double t);

}  // namespace orthoframe
