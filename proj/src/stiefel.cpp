#include "orthoframe/stiefel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orthoframe {

namespace {

constexpr double kPi = std::numbers::pi;

double fold_to_2pi(double theta) {
    while (theta < 0.0) theta += 2.0 * kPi;
    while (theta > 2.0 * kPi) theta -= 2.0 * kPi;
    return theta;
}

double det_recursive(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(0, k) == 0.0) continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc += sign * m(0, k) * det_recursive(minor);
    }
    return acc;
}

// Largest-diagonal Landis column, normalized; valid for rotations only.
Quaternion rotation_to_quat_local(const Matrix& s) {
    const double diag[4] = {1.0 + s(0, 0) + s(1, 1) + s(2, 2), 1.0 + s(0, 0) - s(1, 1) - s(2, 2),
                            1.0 - s(0, 0) + s(1, 1) - s(2, 2), 1.0 - s(0, 0) - s(1, 1) + s(2, 2)};
    int best = 0;
    for (int k = 1; k < 4; ++k)
        if (diag[k] > diag[best]) best = k;
    double col[4];
    switch (best) {
        case 0:
            col[0] = diag[0];
            col[1] = s(2, 1) - s(1, 2);
            col[2] = s(0, 2) - s(2, 0);
            col[3] = s(1, 0) - s(0, 1);
            break;
        case 1:
            col[0] = s(2, 1) - s(1, 2);
            col[1] = diag[1];
            col[2] = s(1, 0) + s(0, 1);
            col[3] = s(0, 2) + s(2, 0);
            break;
        case 2:
            col[0] = s(0, 2) - s(2, 0);
            col[1] = s(1, 0) + s(0, 1);
            col[2] = diag[2];
            col[3] = s(2, 1) + s(1, 2);
            break;
        default:
            col[0] = s(1, 0) - s(0, 1);
            col[1] = s(0, 2) + s(2, 0);
            col[2] = s(2, 1) + s(1, 2);
            col[3] = diag[3];
            break;
    }
    return normalize({col[0], col[1], col[2], col[3]});
}

}  // namespace

GivensPath::GivensPath(Matrix base, std::vector<GivensStep> steps)
    : base_(std::move(base)), steps_(std::move(steps)) {
    if (!base_.square()) throw std::invalid_argument("GivensPath: base not square");
    for (const auto& st : steps_) {
        if (st.i >= st.j || st.j >= base_.rows())
            throw std::invalid_argument("GivensPath: bad step indices");
        if (st.theta < 0.0 || st.theta > 2.0 * kPi)
            throw std::invalid_argument("GivensPath: theta outside [0, 2pi]");
    }
}

Matrix GivensPath::sample(double tau) const {
    tau = std::clamp(tau, 0.0, 1.0);
    Matrix m = base_;
    if (steps_.empty()) return m;
    const double per = 1.0 / static_cast<double>(steps_.size());
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        const double lo = static_cast<double>(k) * per;
        if (tau <= lo) break;
        const double frac = std::min(1.0, (tau - lo) / per);
        m = apply_givens(m, {steps_[k].i, steps_[k].j, steps_[k].theta * frac});
    }
    return m;
}

Frame::Frame(Matrix columns) : cols_(std::move(columns)) {
    const std::size_t k = cols_.cols();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            const double d = dot(cols_.column(a), cols_.column(b));
            const double want = (a == b) ? 1.0 : 0.0;
            if (std::fabs(d - want) > 1e-10)
                throw std::invalid_argument("Frame: columns not orthonormal");
        }
}

GivensCoeffs givens_coeffs(double a, double b) {
    if (a == 0.0 && b == 0.0) return {1.0, 0.0, 0.0};
    // scale by the larger magnitude so the squares cannot overflow
    const double scale = std::max(std::fabs(a), std::fabs(b));
    const double as = a / scale, bs = b / scale;
    const double rho = scale * std::sqrt(as * as + bs * bs);
    return {a / rho, b / rho, rho};
}

Matrix apply_givens(const Matrix& m, const GivensStep& step) {
    if (step.i >= m.rows() || step.j >= m.rows() || step.i == step.j)
        throw std::invalid_argument("apply_givens: bad indices");
    const double c = std::cos(step.theta), s = std::sin(step.theta);
    Matrix out = m;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        const double vi = m(step.i, col), vj = m(step.j, col);
        out(step.i, col) = c * vi + s * vj;
        out(step.j, col) = -s * vi + c * vj;
    }
    return out;
}

QrFactors qr_givens(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("qr_givens: matrix not square");
    const std::size_t n = m.rows();
    Matrix r = m;
    Matrix q = Matrix::identity(n);
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = k + 1; i < n; ++i) {
            if (r(i, k) == 0.0) continue;
            const GivensCoeffs g = givens_coeffs(r(k, k), r(i, k));
            for (std::size_t col = 0; col < n; ++col) {
                const double vk = r(k, col), vi = r(i, col);
                r(k, col) = g.c * vk + g.s * vi;
                r(i, col) = -g.s * vk + g.c * vi;
            }
            r(i, k) = 0.0;
            for (std::size_t row = 0; row < n; ++row) {
                const double qk = q(row, k), qi = q(row, i);
                q(row, k) = g.c * qk + g.s * qi;
                q(row, i) = -g.s * qk + g.c * qi;
            }
        }
    bool singular = false;
    const double zero_tol = 1e-12 * std::max(1.0, m.norm_fro());
    for (std::size_t k = 0; k < n; ++k) {
        if (std::fabs(r(k, k)) <= zero_tol) singular = true;
        if (r(k, k) < 0.0) {
            for (std::size_t col = 0; col < n; ++col) r(k, col) = -r(k, col);
            for (std::size_t row = 0; row < n; ++row) q(row, k) = -q(row, k);
        }
    }
    return {q, r, singular};
}

CanonicalReduction reduce_to_canonical(const Matrix& m, double tol) {
    if (!m.square()) throw std::invalid_argument("reduce_to_canonical: matrix not square");
    const double defect = m.orthogonality_defect();
    if (defect > tol)
        throw std::domain_error("reduce_to_canonical: input off-orthogonal by " +
                                std::to_string(defect));
    const std::size_t n = m.rows();

    std::vector<GivensStep> steps;
    Matrix work = m;
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = k + 1; i < n; ++i) {
            if (work(i, k) == 0.0) continue;
            const GivensCoeffs g = givens_coeffs(work(k, k), work(i, k));
            const GivensStep step{k, i, fold_to_2pi(std::atan2(g.s, g.c))};
            if (step.theta == 0.0) continue;
            work = apply_givens(work, step);
            steps.push_back(step);
        }

    // work is now diag(+-1) up to the orthogonality defect; pair up the
    // -1 entries with half-turn rotations, leaving at most one at the end
    std::vector<std::size_t> negs;
    for (std::size_t k = 0; k < n; ++k)
        if (work(k, k) < 0.0) negs.push_back(k);

    const int result_parity = (negs.size() % 2 == 0) ? +1 : -1;
    if (negs.size() % 2 == 1) {
        const std::size_t lone = negs.back();
        negs.pop_back();
        if (lone != n - 1) {
            steps.push_back({lone, n - 1, kPi});
            // the half-turn parks the flip on the final axis
        }
    }
    for (std::size_t k = 0; k + 1 < negs.size(); k += 2) steps.push_back({negs[k], negs[k + 1], kPi});

    return {GivensPath(m, std::move(steps)), result_parity};
}

int parity(const Matrix& m, double tol) { return reduce_to_canonical(m, tol).parity; }

Frame drop_last(const Frame& f) {
    if (f.count() == 0) throw std::invalid_argument("drop_last: empty frame");
    Matrix cols(f.ambient(), f.count() - 1);
    for (std::size_t j = 0; j + 1 < f.count(); ++j) cols.set_column(j, f.column(j));
    return Frame(std::move(cols));
}

std::pair<Frame, Frame> complete_frame(const Frame& f) {
    const std::size_t n = f.ambient();
    if (f.count() != n - 1)
        throw std::invalid_argument("complete_frame: frame must have n-1 columns");

    // generalized cross product: v_i = det of the frame with e_i appended
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix minor(n - 1, n - 1);
        std::size_t ii = 0;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == i) continue;
            for (std::size_t col = 0; col + 1 < n; ++col)
                minor(ii, col) = f.columns()(row, col);
            ++ii;
        }
        const double sign = ((i + n - 1) % 2 == 0) ? 1.0 : -1.0;
        v[i] = sign * det_recursive(minor);
    }
    const double nv = norm2(v);
    for (double& x : v) x /= nv;

    Matrix plus(n, n), minus(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        plus.set_column(j, f.column(j));
        minus.set_column(j, f.column(j));
    }
    plus.set_column(n - 1, v);
    for (double& x : v) x = -x;
    minus.set_column(n - 1, v);
    return {Frame(std::move(plus)), Frame(std::move(minus))};
}

Frame gram_schmidt(const Matrix& vectors) {
    const std::size_t n = vectors.rows(), k = vectors.cols();
    Matrix out(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> v = vectors.column(j);
        for (std::size_t p = 0; p < j; ++p) {
            const std::vector<double> u = out.column(p);
            const double proj = dot(u, v);
            for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];
        }
        const double pivot = norm2(v);
        if (pivot < 1e-10)
            throw std::domain_error("gram_schmidt: dependent input at column " +
                                    std::to_string(j));
        for (double& x : v) x /= pivot;
        out.set_column(j, v);
    }
    return Frame(std::move(out));
}

Matrix givens_loop(std::size_t n, double theta) {
    if (n < 3) throw std::invalid_argument("givens_loop: order must be at least 3");
    Matrix m = Matrix::identity(n);
    const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta);
    m(1, 1) = c;
    m(1, 2) = -s;
    m(2, 1) = s;
    m(2, 2) = c;
    return m;
}

LoopLift lift_loop_to_s3(const std::vector<Matrix>& samples) {
    if (samples.empty()) throw std::invalid_argument("lift_loop_to_s3: no samples");
    std::vector<Quaternion> lift;
    lift.reserve(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const Matrix& s = samples[k];
        if (s.rows() != 3 || s.cols() != 3)
            throw std::invalid_argument("lift_loop_to_s3: samples must be 3x3");
        if (parity(s) != +1)
            throw std::domain_error("lift_loop_to_s3: sample " + std::to_string(k) +
                                    " has parity -1, not in the image of the cover");
        if (k > 0) {
            const Matrix rel = samples[k - 1].transpose() * s;
            const double ct = std::clamp(0.5 * (rel(0, 0) + rel(1, 1) + rel(2, 2) - 1.0), -1.0, 1.0);
            const double dist = std::acos(ct);
            if (dist > 0.5)
                throw ResolutionError("lift_loop_to_s3: samples " + std::to_string(k - 1) + "," +
                                      std::to_string(k) + " are " + std::to_string(dist) +
                                      " rad apart, sampling too coarse");
        }
        Quaternion q = rotation_to_quat_local(s);
        if (!lift.empty()) {
            const Quaternion& prev = lift.back();
            if (q.x * prev.x + q.y * prev.y + q.z * prev.z + q.w * prev.w < 0.0) q = -q;
        }
        lift.push_back(q);
    }
    const Quaternion &a = lift.front(), &b = lift.back();
    const double dsum = nrmsq({a.x + b.x, a.y + b.y, a.z + b.z, a.w + b.w});
    const double ddiff = nrmsq({a.x - b.x, a.y - b.y, a.z - b.z, a.w - b.w});
    return {std::move(lift), dsum < ddiff};
}

}  // namespace orthoframe
