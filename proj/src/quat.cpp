#include "orthoframe/quat.hpp"

#include <cmath>
#include <stdexcept>

namespace orthoframe {

Quaternion qprod(const Quaternion& a, const Quaternion& b) {
    return {a.x * b.x - a.y * b.y - a.z * b.z - a.w * b.w,
            a.x * b.y + a.y * b.x + a.z * b.w - a.w * b.z,
            a.x * b.z - a.y * b.w + a.z * b.x + a.w * b.y,
            a.x * b.w + a.y * b.z - a.z * b.y + a.w * b.x};
}

Quaternion conjq(const Quaternion& q) { return {q.x, -q.y, -q.z, -q.w}; }

double nrmsq(const Quaternion& q) {
    return q.x * q.x + q.y * q.y + q.z * q.z + q.w * q.w;
}

Quaternion qinv(const Quaternion& q) {
    const double ns = nrmsq(q);
    if (ns == 0.0) throw std::domain_error("qinv: zero quaternion has no inverse");
    const Quaternion c = conjq(q);
    return {c.x / ns, c.y / ns, c.z / ns, c.w / ns};
}

Quaternion normalize(const Quaternion& q) {
    const double ns = nrmsq(q);
    if (ns == 0.0) throw std::domain_error("normalize: zero quaternion");
    const double inv = 1.0 / std::sqrt(ns);
    return {q.x * inv, q.y * inv, q.z * inv, q.w * inv};
}

Matrix phi_so3(const Quaternion& q) {
    const double x = q.x, y = q.y, z = q.z, w = q.w;
    return Matrix{{x * x + y * y - z * z - w * w, 2 * (y * z - x * w), 2 * (y * w + x * z)},
                  {2 * (y * z + x * w), x * x - y * y + z * z - w * w, 2 * (z * w - x * y)},
                  {2 * (y * w - x * z), 2 * (z * w + x * y), x * x - y * y - z * z + w * w}};
}

Vector3 cross(const Vector3& a, const Vector3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vector3 rodrigues_apply(const Quaternion& q, const Vector3& k) {
    if (std::fabs(nrmsq(q) - 1.0) > 1e-9)
        throw std::domain_error("rodrigues_apply: quaternion is not unit");
    const Vector3 s{q.y, q.z, q.w};
    const Vector3 sk = cross(s, k);
    const Vector3 ssk = cross(s, sk);
    Vector3 out;
    for (int i = 0; i < 3; ++i) out[i] = k[i] + 2.0 * q.x * sk[i] + 2.0 * ssk[i];
    return out;
}

}  // namespace orthoframe
