#include <doctest.h>

#include <cmath>
#include <random>

#include "spharray/spherical_harmonics.hpp"
#include "spharray/wigner.hpp"

using namespace spharray;

namespace {

EulerAngles random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return EulerAngles(two_pi * u(rng), pi * u(rng), two_pi * u(rng));
}

// z-y-z Euler angles of a rotation matrix (generic case, sin(beta) != 0).
EulerAngles euler_from_matrix(const Eigen::Matrix3d& r) {
    const double beta = std::acos(std::clamp(r(2, 2), -1.0, 1.0));
    if (std::sin(beta) < 1e-12)
        return EulerAngles(std::atan2(r(1, 0), r(0, 0)), 0.0, 0.0);
    return EulerAngles(std::atan2(r(1, 2), r(0, 2)), beta, std::atan2(r(2, 1), -r(2, 0)));
}

}  // namespace

TEST_CASE("wigner d: identity rotation") {
    for (int n : {0, 1, 3, 7}) {
        const EulerAngles id(0.0, 0.0, 0.0);
        for (int mr = -n; mr <= n; ++mr)
            for (int mc = -n; mc <= n; ++mc) {
                const cplx v = wigner_D(n, mr, mc, id);
                CHECK(std::abs(v - (mr == mc ? 1.0 : 0.0)) < 1e-13);
            }
    }
}

TEST_CASE("wigner d: order-1 closed forms") {
    const double beta = 0.73;
    const double c = std::cos(beta), s = std::sin(beta);
    CHECK(wigner_d(1, 0, 0, pi / 3.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(wigner_d(1, 1, 1, beta) == doctest::Approx(0.5 * (1.0 + c)).epsilon(1e-13));
    CHECK(wigner_d(1, 1, 0, beta) == doctest::Approx(-s / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(wigner_d(1, 1, -1, beta) == doctest::Approx(0.5 * (1.0 - c)).epsilon(1e-13));
    CHECK(wigner_d(1, 0, 1, beta) == doctest::Approx(s / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(wigner_d(1, 0, 0, beta) == doctest::Approx(c).epsilon(1e-13));
    CHECK(wigner_d(1, -1, -1, beta) == doctest::Approx(0.5 * (1.0 + c)).epsilon(1e-13));
    CHECK(wigner_d(1, -1, 1, beta) == doctest::Approx(0.5 * (1.0 - c)).epsilon(1e-13));
}

TEST_CASE("wigner D: unitarity at n = 4") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        const EulerAngles ang = random_angles(rng);
        const Eigen::MatrixXcd d = wigner_D_block(4, ang);
        const double resid =
            (d * d.adjoint() - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff();
        CHECK(resid < 1e-12);
    }
}

TEST_CASE("wigner D: composition equals product") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 15; ++t) {
        const EulerAngles a1 = random_angles(rng);
        const EulerAngles a2 = random_angles(rng);
        const EulerAngles a3 = euler_from_matrix(rotation_matrix(a1) * rotation_matrix(a2));
        REQUIRE((rotation_matrix(a3) - rotation_matrix(a1) * rotation_matrix(a2))
                    .cwiseAbs()
                    .maxCoeff() < 1e-12);
        for (int n : {1, 2, 4}) {
            const Eigen::MatrixXcd lhs = wigner_D_block(n, a1) * wigner_D_block(n, a2);
            const Eigen::MatrixXcd rhs = wigner_D_block(n, a3);
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

// Convention anchor for steering: Y_m(R Omega) = sum_{m'} conj(D_{m,m'}) Y_{m'}(Omega).
TEST_CASE("wigner D: rotation of spherical harmonics") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 15; ++t) {
        const EulerAngles ang = random_angles(rng);
        const Direction dir(std::acos(2.0 * u(rng) - 1.0), two_pi * u(rng));
        const Direction rotated = rotate(dir, ang);
        for (int n : {1, 3, 5}) {
            const Eigen::MatrixXcd dblk = wigner_D_block(n, ang);
            for (int m = -n; m <= n; ++m) {
                cplx sum = 0.0;
                for (int mp = -n; mp <= n; ++mp)
                    sum += std::conj(dblk(m + n, mp + n)) * sph_harmonic(n, mp, dir);
                CHECK(std::abs(sum - sph_harmonic(n, m, rotated)) < 1e-12);
            }
        }
    }
}

TEST_CASE("wigner: index violations") {
    CHECK_THROWS_AS(wigner_d(2, 3, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(wigner_d(2, 0, -3, 1.0), std::domain_error);
}
