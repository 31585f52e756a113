#pragma once

#include <vector>

#include "orthoframe/matrix.hpp"
#include "orthoframe/quat.hpp"
#include "orthoframe/spectral.hpp"

namespace orthoframe {

/// One weighted vector observation: a unit reference direction and the
/// corresponding unit observed direction.
struct VectorObservation {
    double weight;
    Vector3 ref;
    Vector3 obs;
};

/// Weighted vector-matching problem. Requires at least two observations,
/// positive weights, unit vectors to 1e-9, and a non-collinear pair of
/// reference directions.
class WahbaProblem {
public:
    explicit WahbaProblem(std::vector<VectorObservation> observations);

    const std::vector<VectorObservation>& observations() const { return obs_; }

private:
    std::vector<VectorObservation> obs_;
};

/// Attitude profile matrix B = sum w * obs * ref^T and the Davenport
/// gain matrix K (symmetric, trace zero).
struct AttitudeProfile {
    Matrix b;
    SymmetricMatrix k;
};

/// The 4x4 symmetric matrix of quadratic forms in the entries of S whose
/// columns are all parallel to the quaternion of S; equals 4qq^T when S is
/// an exact rotation.
Matrix landis(const Matrix& s);

/// Bar-Itzhack two-measurement gain matrix K2, a function of the first two
/// columns of S only.
SymmetricMatrix itzhak(const Matrix& s);

/// Norm-square of the leading Landis column for an exact rotation,
/// evaluated by the linear formula 4 * (1 + trace S).
double landis_denominator(const Matrix& s);

/// Quaternion of a rotation matrix via the best-conditioned Landis column.
/// Scalar part canonically non-negative. Throws std::domain_error for
/// parity -1 input, which the cover does not reach.
Quaternion quat_from_rotation(const Matrix& s, double tol = 1e-6);

/// Nearest-rotation reconstruction with no square roots: the quadratic
/// cover formula applied to a Landis column, divided by the column's
/// norm-square. Exact rotations are returned unchanged. rescale_rows
/// additionally divides each output row by its norm.
Matrix orthogonalize_rational(const Matrix& s, bool rescale_rows = false);

AttitudeProfile attitude_profile(const WahbaProblem& p);

/// Optimal quaternion as the maximal eigenvector of the Davenport matrix.
/// Throws std::domain_error when the top eigenvalue is ambiguous.
Quaternion solve_wahba_davenport(const WahbaProblem& p);

/// Optimal rotation through the polar factor of the profile matrix B.
/// Throws std::domain_error for singular B or a reflection polar factor.
Matrix solve_wahba_svd(const WahbaProblem& p);

/// L(A) = 1/2 sum w |obs - A ref|^2.
double wahba_loss(const Matrix& a, const WahbaProblem& p);

/// F(A) = trace(A^T B); for unit vectors L = sum w - F.
double wahba_gain(const Matrix& a, const WahbaProblem& p);

}  // namespace orthoframe
