#include <doctest.h>

#include <cmath>

#include "spharray/quadrature.hpp"
#include "spharray/spherical_harmonics.hpp"

using namespace spharray;

TEST_CASE("gauss-legendre rule exactness") {
    const GaussLegendreRule gl = gauss_legendre(8);
    double wsum = 0.0;
    for (double w : gl.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int k = 0; k <= 15; ++k) {
        double q = 0.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i)
            q += gl.weights[i] * std::pow(gl.nodes[i], k);
        const double exact = (k % 2 == 0) ? 2.0 / (k + 1.0) : 0.0;
        CHECK(std::abs(q - exact) < 1e-13);
    }
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        CHECK(gl.nodes[i] == doctest::Approx(-gl.nodes[gl.nodes.size() - 1 - i]).epsilon(1e-14));
}

TEST_CASE("gaussian sphere rule: order 0 layout") {
    const SphereRule rule = gaussian_sphere_rule(0);
    REQUIRE(rule.dirs.size() == 2);
    CHECK(rule.dirs[0].theta == doctest::Approx(pi / 2.0));
    CHECK(rule.dirs[1].theta == doctest::Approx(pi / 2.0));
    CHECK(rule.weights[0] == doctest::Approx(two_pi));
}

TEST_CASE("gaussian sphere rule integrates harmonic products exactly") {
    const int order = 3;
    const SphereRule rule = gaussian_sphere_rule(order);
    for (int n = 0; n <= order; ++n)
        for (int np = 0; np <= order; ++np)
            for (int m = -n; m <= n; ++m)
                for (int mp = -np; mp <= np; ++mp) {
                    cplx ip = 0.0;
                    for (std::size_t i = 0; i < rule.dirs.size(); ++i)
                        ip += rule.weights[i] * sph_harmonic(n, m, rule.dirs[i]) *
                              std::conj(sph_harmonic(np, mp, rule.dirs[i]));
                    const double expect = (n == np && m == mp) ? 1.0 : 0.0;
                    CHECK(std::abs(ip - expect) < 1e-12);
                }
}
