#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orthoframe/matrix.hpp"
#include "orthoframe/quat.hpp"

namespace orthoframe {

/// Plane rotation by theta radians touching coordinates i < j.
struct GivensStep {
    std::size_t i = 0;
    std::size_t j = 0;
    double theta = 0.0;
};

/// Continuous path in O(n): a base matrix followed by Givens segments,
/// each traversed linearly in theta over an equal sub-interval of [0, 1].
/// sample(0) is the base, sample(1) the fully rotated endpoint.
class GivensPath {
public:
    GivensPath(Matrix base, std::vector<GivensStep> steps);

    Matrix sample(double tau) const;
    const std::vector<GivensStep>& steps() const { return steps_; }
    const Matrix& base() const { return base_; }

private:
    Matrix base_;
    std::vector<GivensStep> steps_;
};

/// Orthonormal k-frame in R^n, columns of an n x k matrix.
/// Columns must be unit and pairwise orthogonal to 1e-10.
class Frame {
public:
    explicit Frame(Matrix columns);

    std::size_t ambient() const { return cols_.rows(); }
    std::size_t count() const { return cols_.cols(); }
    const Matrix& columns() const { return cols_; }
    std::vector<double> column(std::size_t j) const { return cols_.column(j); }

private:
    Matrix cols_;
};

struct GivensCoeffs {
    double c, s, rho;
};

/// Coefficients with c = a/rho, s = b/rho, rho = hypot(a, b) >= 0, so the
/// rotation [c s; -s c] sends (a, b) to (rho, 0). (0, 0) maps to (1, 0, 0).
GivensCoeffs givens_coeffs(double a, double b);

/// Premultiply by the plane rotation of the step: rows i and j mix, all
/// others stay fixed.
Matrix apply_givens(const Matrix& m, const GivensStep& step);

struct QrFactors {
    Matrix q;
    Matrix r;
    bool singular;  // some diagonal entry of R is numerically zero
};

/// QR by a sweep of Givens rotations; diagonal of R made non-negative.
QrFactors qr_givens(const Matrix& m);

struct CanonicalReduction {
    GivensPath path;  // sample(0) = input, sample(1) = I or diag(1,..,1,-1)
    int parity;       // +1 or -1
};

/// Rotate an orthogonal matrix to the identity frame or its last-column
/// flip by a continuous Givens path, classifying the path component with
/// no determinant involved. Throws std::domain_error when the input is
/// off-orthogonal beyond tol.
CanonicalReduction reduce_to_canonical(const Matrix& m, double tol = 1e-8);

/// The path component of an orthogonal matrix: +1 for the identity side.
int parity(const Matrix& m, double tol = 1e-8);

/// Forget the final column of a full frame.
Frame drop_last(const Frame& f);

/// Complete an (n-1)-frame to the two full frames, differing only in the
/// sign of the appended column (generalized cross product by cofactors).
std::pair<Frame, Frame> complete_frame(const Frame& f);

/// Orthonormalize independent vectors (given as matrix columns).
/// Throws std::domain_error at the first numerically dependent column.
Frame gram_schmidt(const Matrix& vectors);

/// The canonical loop generator: rotation of the (2,3)-plane (1-based) by
/// angle 2*theta inside I_n; closes up at theta = 0 and theta = pi.
Matrix givens_loop(std::size_t n, double theta);

/// Raised when consecutive loop samples are too far apart to lift.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopLift {
    std::vector<Quaternion> lift;
    bool antipodal;  // endpoints antipodal (true) or equal (false)
};

/// Lift a discretized loop of rotations through the double cover to a
/// continuous quaternion path. Requires every sample in the +1 component
/// and consecutive samples within 0.5 rad.
LoopLift lift_loop_to_s3(const std::vector<Matrix>& samples);

}  // namespace orthoframe
