#include "orthoframe/attitude.hpp"

#include <cmath>
#include <stdexcept>

#include "orthoframe/polar.hpp"
#include "orthoframe/stiefel.hpp"

namespace orthoframe {

namespace {

// index of the largest Landis diagonal entry = best-conditioned column
int best_landis_column(const Matrix& w) {
    int best = 0;
    for (int k = 1; k < 4; ++k)
        if (w(k, k) > w(best, best)) best = k;
    return best;
}

Quaternion canonical_sign(Quaternion q) {
    if (q.x > 0.0) return q;
    if (q.x < 0.0) return -q;
    const double comps[3] = {q.y, q.z, q.w};
    for (double c : comps) {
        if (c > 0.0) return q;
        if (c < 0.0) return -q;
    }
    return q;
}

}  // namespace

Matrix landis(const Matrix& s) {
    if (s.rows() != 3 || s.cols() != 3) throw std::invalid_argument("landis: input must be 3x3");
    const double d12 = s(1, 0) - s(0, 1), s12 = s(1, 0) + s(0, 1);
    const double d13 = s(0, 2) - s(2, 0), s13 = s(0, 2) + s(2, 0);
    const double d23 = s(2, 1) - s(1, 2), s23 = s(2, 1) + s(1, 2);
    const double t = s(0, 0) + s(1, 1) + s(2, 2);
    return Matrix{{1.0 + t, d23, d13, d12},
                  {d23, 1.0 + s(0, 0) - s(1, 1) - s(2, 2), s12, s13},
                  {d13, s12, 1.0 - s(0, 0) + s(1, 1) - s(2, 2), s23},
                  {d12, s13, s23, 1.0 - s(0, 0) - s(1, 1) + s(2, 2)}};
}

SymmetricMatrix itzhak(const Matrix& s) {
    if (s.rows() != 3 || s.cols() != 3) throw std::invalid_argument("itzhak: input must be 3x3");
    const double a = s(0, 0), b = s(1, 1);
    const double sum12 = s(1, 0) + s(0, 1), dif12 = s(0, 1) - s(1, 0);
    Matrix m{{a - b, sum12, s(2, 0), -s(2, 1)},
             {sum12, b - a, s(2, 1), s(2, 0)},
             {s(2, 0), s(2, 1), -a - b, dif12},
             {-s(2, 1), s(2, 0), dif12, a + b}};
    return SymmetricMatrix(m * 0.5);
}

double landis_denominator(const Matrix& s) {
    if (s.rows() != 3 || s.cols() != 3)
        throw std::invalid_argument("landis_denominator: input must be 3x3");
    return 4.0 * (1.0 + s(0, 0) + s(1, 1) + s(2, 2));
}

Quaternion quat_from_rotation(const Matrix& s, double tol) {
    if (s.rows() != 3 || s.cols() != 3)
        throw std::invalid_argument("quat_from_rotation: input must be 3x3");
    const double defect = s.orthogonality_defect();
    if (defect > tol)
        throw std::domain_error("quat_from_rotation: input off-orthogonal by " +
                                std::to_string(defect));
    if (parity(s, tol) != +1)
        throw std::domain_error("quat_from_rotation: parity -1 input is not in the cover image");
    const Matrix w = landis(s);
    const int col = best_landis_column(w);
    return canonical_sign(normalize({w(0, col), w(1, col), w(2, col), w(3, col)}));
}

Matrix orthogonalize_rational(const Matrix& s, bool rescale_rows) {
    const Matrix w = landis(s);
    const int col = best_landis_column(w);
    const Quaternion q{w(0, col), w(1, col), w(2, col), w(3, col)};
    const double gamma = nrmsq(q);
    if (gamma < 1e-8)
        throw std::domain_error("orthogonalize_rational: degenerate Landis columns, norm-square " +
                                std::to_string(gamma));
    Matrix out = phi_so3(q) * (1.0 / gamma);
    if (rescale_rows) {
        for (std::size_t i = 0; i < 3; ++i) {
            const double rn = norm2(out.row(i));
            for (std::size_t j = 0; j < 3; ++j) out(i, j) /= rn;
        }
    }
    return out;
}

WahbaProblem::WahbaProblem(std::vector<VectorObservation> observations)
    : obs_(std::move(observations)) {
    if (obs_.size() < 2) throw std::invalid_argument("WahbaProblem: need at least 2 observations");
    for (const auto& o : obs_) {
        if (!(o.weight > 0.0)) throw std::invalid_argument("WahbaProblem: weights must be positive");
        const double nr = o.ref[0] * o.ref[0] + o.ref[1] * o.ref[1] + o.ref[2] * o.ref[2];
        const double no = o.obs[0] * o.obs[0] + o.obs[1] * o.obs[1] + o.obs[2] * o.obs[2];
        if (std::fabs(nr - 1.0) > 2e-9 || std::fabs(no - 1.0) > 2e-9)
            throw std::invalid_argument("WahbaProblem: vectors must be unit");
    }
    bool independent = false;
    for (std::size_t a = 0; a < obs_.size() && !independent; ++a)
        for (std::size_t b = a + 1; b < obs_.size() && !independent; ++b) {
            double d = 0.0;
            for (int i = 0; i < 3; ++i) d += obs_[a].ref[i] * obs_[b].ref[i];
            if (std::fabs(d) < 1.0 - 1e-9) independent = true;
        }
    if (!independent)
        throw std::invalid_argument("WahbaProblem: all reference vectors are collinear");
}

AttitudeProfile attitude_profile(const WahbaProblem& p) {
    Matrix b(3, 3);
    for (const auto& o : p.observations())
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) b(i, j) += o.weight * o.obs[i] * o.ref[j];

    const double sigma = b(0, 0) + b(1, 1) + b(2, 2);
    const double z[3] = {b(2, 1) - b(1, 2), b(0, 2) - b(2, 0), b(1, 0) - b(0, 1)};
    Matrix k(4, 4);
    k(0, 0) = sigma;
    for (int i = 0; i < 3; ++i) {
        k(0, i + 1) = z[i];
        k(i + 1, 0) = z[i];
        for (int j = 0; j < 3; ++j) k(i + 1, j + 1) = b(i, j) + b(j, i);
        k(i + 1, i + 1) -= sigma;
    }
    return {b, SymmetricMatrix(k)};
}

Quaternion solve_wahba_davenport(const WahbaProblem& p) {
    const AttitudeProfile prof = attitude_profile(p);
    const SpectralFactors f = jacobi_eigendecomposition(prof.k);
    const double lam_max = f.eigenvalues[3];
    const double gap = lam_max - f.eigenvalues[2];
    if (gap <= 1e-9 * std::max(1.0, std::fabs(lam_max)))
        throw std::domain_error("solve_wahba_davenport: ambiguous problem, top eigenvalue gap " +
                                std::to_string(gap));
    const std::vector<double> v = f.eigenvectors.column(3);
    return canonical_sign(normalize({v[0], v[1], v[2], v[3]}));
}

Matrix solve_wahba_svd(const WahbaProblem& p) {
    const AttitudeProfile prof = attitude_profile(p);
    Matrix r;
    try {
        r = polar_decompose(prof.b).rotation;
    } catch (const std::domain_error&) {
        throw std::domain_error("solve_wahba_svd: profile matrix B is singular");
    }
    if (parity(r) != +1)
        throw std::domain_error("solve_wahba_svd: polar factor is a reflection");
    return r;
}

double wahba_loss(const Matrix& a, const WahbaProblem& p) {
    double acc = 0.0;
    for (const auto& o : p.observations()) {
        const std::vector<double> ar = a * std::vector<double>{o.ref[0], o.ref[1], o.ref[2]};
        for (int i = 0; i < 3; ++i) {
            const double d = o.obs[i] - ar[i];
            acc += o.weight * d * d;
        }
    }
    return 0.5 * acc;
}

double wahba_gain(const Matrix& a, const WahbaProblem& p) {
    const Matrix b = attitude_profile(p).b;
    const Matrix atb = a.transpose() * b;
    return atb(0, 0) + atb(1, 1) + atb(2, 2);
}

}  // namespace orthoframe
