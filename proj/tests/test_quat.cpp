#include <doctest.h>

#include <cmath>

#include "orthoframe/quat.hpp"
#include "test_util.hpp"

using namespace orthoframe;
using testutil::random_unit_quat;

namespace {
double qdist(const Quaternion& a, const Quaternion& b) {
    return std::sqrt(nrmsq({a.x - b.x, a.y - b.y, a.z - b.z, a.w - b.w}));
}
}  // namespace

TEST_CASE("qprod identity and generator relations") {
    const Quaternion q{0.3, -0.1, 0.7, 0.2};
    CHECK(qprod({1, 0, 0, 0}, q) == q);
    CHECK(qprod(q, {1, 0, 0, 0}) == q);
    // i * j = k
    CHECK(qprod({0, 1, 0, 0}, {0, 0, 1, 0}) == Quaternion{0, 0, 0, 1});
}

TEST_CASE("qprod norm multiplicativity") {
    for (int it = 0; it < 200; ++it) {
        const Quaternion a = random_unit_quat(), b = random_unit_quat();
        CHECK(std::fabs(nrmsq(qprod(a, b)) - 1.0) <= 1e-12);
    }
    const Quaternion a{1.5, -2.0, 0.25, 3.0}, b{-0.5, 1.0, 2.0, -1.25};
    CHECK(nrmsq(qprod(a, b)) == doctest::Approx(nrmsq(a) * nrmsq(b)).epsilon(1e-12));
}

TEST_CASE("qprod associativity") {
    for (int it = 0; it < 100; ++it) {
        const Quaternion a = random_unit_quat(), b = random_unit_quat(), c = random_unit_quat();
        CHECK(qdist(qprod(qprod(a, b), c), qprod(a, qprod(b, c))) <= 1e-12);
    }
}

TEST_CASE("conjq") {
    CHECK(conjq({1, 0, 0, 0}) == Quaternion{1, 0, 0, 0});
    CHECK(conjq({0.5, 0.5, 0.5, 0.5}) == Quaternion{0.5, -0.5, -0.5, -0.5});
    for (int it = 0; it < 50; ++it) {
        Quaternion q{testutil::gauss(), testutil::gauss(), testutil::gauss(), testutil::gauss()};
        CHECK(conjq(conjq(q)) == q);
        // hand-expanded: q q* = (|q|^2, 0, 0, 0)
        const Quaternion p = qprod(q, conjq(q));
        CHECK(p.x == doctest::Approx(nrmsq(q)).epsilon(1e-12));
        CHECK(std::fabs(p.y) <= 1e-12 * nrmsq(q));
        CHECK(std::fabs(p.z) <= 1e-12 * nrmsq(q));
        CHECK(std::fabs(p.w) <= 1e-12 * nrmsq(q));
    }
}

TEST_CASE("nrmsq") {
    CHECK(nrmsq({1, 0, 0, 0}) == 1.0);
    CHECK(nrmsq({1, 1, 1, 1}) == 4.0);
    CHECK(nrmsq({0.6647, 0.0578, 0.0781, -1.4858}) == doctest::Approx(2.6588).epsilon(1e-4));
}

TEST_CASE("qinv") {
    CHECK(qinv({1, 0, 0, 0}) == Quaternion{1, 0, 0, 0});
    CHECK(qinv({2, 0, 0, 0}) == Quaternion{0.5, 0, 0, 0});
    CHECK_THROWS_AS(qinv({0, 0, 0, 0}), std::domain_error);
    for (int it = 0; it < 50; ++it) {
        const Quaternion q = random_unit_quat();
        CHECK(qdist(qinv(q), conjq(q)) <= 1e-12);
        CHECK(qdist(qprod(q, qinv(q)), {1, 0, 0, 0}) <= 1e-12);
    }
}

TEST_CASE("phi_so3 values") {
    CHECK((phi_so3({1, 0, 0, 0}) - Matrix::identity(3)).norm_max() == 0.0);

    const double th = 0.37;
    const Matrix m = phi_so3({std::cos(th), std::sin(th), 0, 0});
    const Matrix want{{1, 0, 0},
                      {0, std::cos(2 * th), -std::sin(2 * th)},
                      {0, std::sin(2 * th), std::cos(2 * th)}};
    CHECK((m - want).norm_max() <= 1e-15);
}

TEST_CASE("phi_so3 orthogonality and double cover") {
    for (int it = 0; it < 200; ++it) {
        const Quaternion q = random_unit_quat();
        CHECK(phi_so3(q).orthogonality_defect() <= 1e-12);
        CHECK(phi_so3(q) == phi_so3(-q));
    }
}

TEST_CASE("phi_so3 homomorphism") {
    for (int it = 0; it < 500; ++it) {
        const Quaternion a = random_unit_quat(), b = random_unit_quat();
        CHECK((phi_so3(qprod(a, b)) - phi_so3(a) * phi_so3(b)).norm_max() <= 1e-12);
    }
}

TEST_CASE("rodrigues_apply") {
    const Vector3 k{1, 2, 3};
    CHECK(rodrigues_apply({1, 0, 0, 0}, k) == k);

    const Vector3 flipped = rodrigues_apply({0, 1, 0, 0}, {0, 1, 0});
    CHECK(flipped[0] == doctest::Approx(0.0));
    CHECK(flipped[1] == doctest::Approx(-1.0));
    CHECK(flipped[2] == doctest::Approx(0.0));

    CHECK_THROWS_AS(rodrigues_apply({2, 0, 0, 0}, k), std::domain_error);

    for (int it = 0; it < 100; ++it) {
        const Quaternion q = random_unit_quat();
        const Vector3 v{testutil::gauss(), testutil::gauss(), testutil::gauss()};
        const auto want = phi_so3(q) * std::vector<double>{v[0], v[1], v[2]};
        const Vector3 got = rodrigues_apply(q, v);
        for (int i = 0; i < 3; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
}

TEST_CASE("normalize") {
    CHECK(normalize({2, 0, 0, 0}) == Quaternion{1, 0, 0, 0});
    CHECK_THROWS_AS(normalize({0, 0, 0, 0}), std::domain_error);

    const Quaternion ld = normalize({0.1450, 0.3340, 0.6670, -0.0640});
    CHECK(ld.x == doctest::Approx(0.1901).epsilon(1e-3));
    CHECK(ld.y == doctest::Approx(0.4380).epsilon(1e-3));
    CHECK(ld.z == doctest::Approx(0.8746).epsilon(1e-3));
    CHECK(ld.w == doctest::Approx(-0.0839).epsilon(1e-3));

    const Quaternion u = random_unit_quat();
    CHECK(qdist(normalize(u), u) <= 1e-15);
}
