#include "orthoframe/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orthoframe {

SymmetricMatrix::SymmetricMatrix(const Matrix& a) : m_(a) {
    if (!a.square()) throw std::invalid_argument("SymmetricMatrix: input not square");
    const std::size_t n = a.rows();
    const double tol = 1e-12 * std::max(1.0, a.norm_inf());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::fabs(a(i, j) - a(j, i)) > tol)
                throw std::invalid_argument("SymmetricMatrix: asymmetry beyond tolerance");
            const double avg = 0.5 * (a(i, j) + a(j, i));
            m_(i, j) = avg;
            m_(j, i) = avg;
        }
}

double offdiag_energy(const Matrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) acc += a(i, j) * a(i, j);
    return acc;
}

double offdiag_energy(const SymmetricMatrix& a) { return offdiag_energy(a.matrix()); }

double jacobi_rotation_angle(const SymmetricMatrix& a, std::size_t r, std::size_t s) {
    if (r == s) throw std::invalid_argument("jacobi_rotation_angle: r == s");
    if (r >= a.order() || s >= a.order())
        throw std::invalid_argument("jacobi_rotation_angle: index out of range");
    if (a(r, s) == 0.0) throw std::invalid_argument("jacobi_rotation_angle: a_rs is already zero");
    double theta = 0.5 * std::atan2(2.0 * a(r, s), a(s, s) - a(r, r));
    const double half_pi = std::asin(1.0);
    while (theta < 0.0) theta += half_pi;
    while (theta > half_pi) theta -= half_pi;
    return theta;
}

namespace {

// B = U^T M U with the plane rotation U = [c s; -s c] on rows/cols (p,q),
// applied in place; the accumulator picks up M U on its columns.
void rotate_sym(Matrix& m, Matrix& u, std::size_t p, std::size_t q, double c, double s) {
    const std::size_t n = m.rows();
    for (std::size_t j = 0; j < n; ++j) {
        const double mp = m(p, j), mq = m(q, j);
        m(p, j) = c * mp - s * mq;
        m(q, j) = s * mp + c * mq;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double mp = m(i, p), mq = m(i, q);
        m(i, p) = c * mp - s * mq;
        m(i, q) = s * mp + c * mq;
        const double up = u(i, p), uq = u(i, q);
        u(i, p) = c * up - s * uq;
        u(i, q) = s * up + c * uq;
    }
}

void canonicalize_sign(Matrix& u, std::size_t col) {
    std::size_t best = 0;
    double mag = 0.0;
    for (std::size_t i = 0; i < u.rows(); ++i)
        if (std::fabs(u(i, col)) > mag) {
            mag = std::fabs(u(i, col));
            best = i;
        }
    if (u(best, col) < 0.0)
        for (std::size_t i = 0; i < u.rows(); ++i) u(i, col) = -u(i, col);
}

}  // namespace

SpectralFactors jacobi_eigendecomposition(const SymmetricMatrix& a, double tol, int max_sweeps) {
    const std::size_t n = a.order();
    if (tol < 0.0) tol = 1e-12 * a.matrix().norm_fro();
    if (tol == 0.0) tol = 1e-300;

    Matrix m = a.matrix();
    Matrix u = Matrix::identity(n);
    std::vector<double> history;

    double lam = offdiag_energy(m);
    bool converged = lam <= tol * tol;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (m(p, q) == 0.0) continue;
                double theta = 0.5 * std::atan2(2.0 * m(p, q), m(q, q) - m(p, p));
                rotate_sym(m, u, p, q, std::cos(theta), std::sin(theta));
                m(p, q) = 0.0;  // zeroed analytically; kill the roundoff remainder
                m(q, p) = 0.0;
            }
        lam = offdiag_energy(m);
        history.push_back(lam);
        converged = lam <= tol * tol;
    }
    if (!converged)
        throw ConvergenceError("jacobi_eigendecomposition: off-diagonal energy " +
                                   std::to_string(lam) + " above tolerance after " +
                                   std::to_string(max_sweeps) + " sweeps",
                               lam);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return m(i, i) < m(j, j); });

    SpectralFactors out;
    out.eigenvectors = Matrix(n, n);
    out.eigenvalues.resize(n);
    out.offdiag_history = std::move(history);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = m(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = u(i, order[k]);
        canonicalize_sign(out.eigenvectors, k);
    }
    return out;
}

std::pair<double, std::vector<double>> min_eigenpair(const SymmetricMatrix& a) {
    const SpectralFactors f = jacobi_eigendecomposition(a);
    return {f.eigenvalues.front(), f.eigenvectors.column(0)};
}

bool is_positive_definite(const SymmetricMatrix& a) {
    const double tol_pd = 1e-12 * a.matrix().norm_inf();
    return min_eigenpair(a).first > tol_pd;
}

SymmetricMatrix sqrt_spd(const SymmetricMatrix& c) {
    const std::size_t n = c.order();
    const SpectralFactors f = jacobi_eigendecomposition(c);
    const double clamp = -1e-10 * c.matrix().norm_inf();
    Matrix root(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = f.eigenvalues[k];
        if (lam < clamp)
            throw std::domain_error("sqrt_spd: materially negative eigenvalue " +
                                    std::to_string(lam));
        root(k, k) = std::sqrt(std::max(lam, 0.0));
    }
    Matrix p = f.eigenvectors * root * f.eigenvectors.transpose();
    // exact symmetrization absorbs roundoff from the triple product
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (p(i, j) + p(j, i));
            p(i, j) = avg;
            p(j, i) = avg;
        }
    return SymmetricMatrix(p);
}

}  // namespace orthoframe
