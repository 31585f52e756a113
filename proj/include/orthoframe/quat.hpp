#pragma once

#include <array>

#include "orthoframe/matrix.hpp"

namespace orthoframe {

using Vector3 = std::array<double, 3>;

/// Real quaternion, scalar-first: x is the scalar part, (y,z,w) the vector part.
struct Quaternion {
    double x = 0.0, y = 0.0, z = 0.0, w = 0.0;

    bool operator==(const Quaternion&) const = default;
    Quaternion operator-() const { return {-x, -y, -z, -w}; }
};

/// Hamilton product.
Quaternion qprod(const Quaternion& a, const Quaternion& b);

/// Conjugate: scalar part kept, vector part negated.
Quaternion conjq(const Quaternion& q);

/// Squared Euclidean norm of the four components.
double nrmsq(const Quaternion& q);

/// Multiplicative inverse q*/|q|^2. Throws std::domain_error on the zero quaternion.
Quaternion qinv(const Quaternion& q);

/// Rescale to unit norm, positive scale. Throws std::domain_error on zero input.
Quaternion normalize(const Quaternion& q);

/// The double-cover map into SO(3). Defined for any q; orthogonal when |q| = 1,
/// and phi_so3(q) == phi_so3(-q) since every entry is quadratic in q.
Matrix phi_so3(const Quaternion& q);

/// Rotate k by unit q via the quadratic cross-product form,
/// k' = k + 2x(s x k) + 2(s x (s x k)) with s the vector part.
/// Throws std::domain_error if q is off-unit by more than 1e-9.
Vector3 rodrigues_apply(const Quaternion& q, const Vector3& k);

Vector3 cross(const Vector3& a, const Vector3& b);

}  // namespace orthoframe
