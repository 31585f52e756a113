#include "orthoframe/polar.hpp"

#include <cmath>
#include <stdexcept>

namespace orthoframe {

namespace {

Matrix symmetrized(const Matrix& m) {
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            const double avg = 0.5 * (m(i, j) + m(j, i));
            out(i, j) = avg;
            out(j, i) = avg;
        }
    return out;
}

// Map f over the spectrum: U diag(f(lambda)) U^T.
Matrix spectral_map(const SpectralFactors& f, double (*fn)(double)) {
    const std::size_t n = f.eigenvalues.size();
    Matrix d(n, n);
    for (std::size_t k = 0; k < n; ++k) d(k, k) = fn(f.eigenvalues[k]);
    return symmetrized(f.eigenvectors * d * f.eigenvectors.transpose());
}

}  // namespace

PolarFactors polar_decompose(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("polar_decompose: matrix not square");
    const std::size_t n = a.rows();

    const SymmetricMatrix gram(symmetrized(a.transpose() * a));
    const SpectralFactors f = jacobi_eigendecomposition(gram);
    const double sigma_min_sq = f.eigenvalues.front();
    const double floor = 1e-10 * a.norm_fro();
    if (sigma_min_sq <= floor * floor)
        throw std::domain_error("polar_decompose: singular input, smallest eigenvalue of A^T A = " +
                                std::to_string(sigma_min_sq));

    // R = A (A^T A)^{-1/2}, then two inverse-free Newton-Schulz sweeps to
    // pull R^T R back onto I at machine precision.
    Matrix inv_root(n, n);
    for (std::size_t k = 0; k < n; ++k) inv_root(k, k) = 1.0 / std::sqrt(f.eigenvalues[k]);
    Matrix r = a * (f.eigenvectors * inv_root * f.eigenvectors.transpose());
    const Matrix id3 = Matrix::identity(n) * 3.0;
    for (int it = 0; it < 2; ++it) r = r * (id3 - r.transpose() * r) * 0.5;

    const Matrix p = symmetrized(r.transpose() * a);
    const Matrix x = matrix_log_spd(SymmetricMatrix(p)).matrix();
    return {r, p, x};
}

SymmetricMatrix matrix_exp_sym(const SymmetricMatrix& x) {
    return SymmetricMatrix(spectral_map(jacobi_eigendecomposition(x), std::exp));
}

SymmetricMatrix matrix_log_spd(const SymmetricMatrix& p) {
    const SpectralFactors f = jacobi_eigendecomposition(p);
    if (f.eigenvalues.front() <= 0.0)
        throw std::domain_error("matrix_log_spd: input is not positive definite, min eigenvalue " +
                                std::to_string(f.eigenvalues.front()));
    return SymmetricMatrix(spectral_map(f, std::log));
}

SvdFactors svd_via_polar(const Matrix& a) {
    const PolarFactors pf = polar_decompose(a);
    const SpectralFactors f = jacobi_eigendecomposition(SymmetricMatrix(pf.stretch));
    const std::size_t n = a.rows();
    SvdFactors out;
    out.u = Matrix(n, n);
    out.v = Matrix(n, n);
    out.singular_values.resize(n);
    // spectral factors come back ascending; singular values go out descending
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = n - 1 - k;
        out.singular_values[k] = f.eigenvalues[src];
        out.v.set_column(k, f.eigenvectors.column(src));
    }
    out.u = pf.rotation * out.v;
    return out;
}

Matrix polar_retraction_path(const Matrix& a, double t) {
    if (t < 0.0 || t > 1.0)
        throw std::invalid_argument("polar_retraction_path: t outside [0, 1]");
    const PolarFactors pf = polar_decompose(a);
    return pf.rotation * matrix_exp_sym(SymmetricMatrix(pf.log_stretch * (1.0 - t))).matrix();
}

}  // namespace orthoframe
