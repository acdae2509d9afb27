#include "spharray/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "spharray/special.hpp"

namespace spharray {

GaussLegendreRule gauss_legendre(int npts) {
    if (npts < 1) throw std::invalid_argument("gauss_legendre: npts must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(npts);
    rule.weights.resize(npts);
    const int half = (npts + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev-based initial guess.
        double z = std::cos(pi * (i + 0.75) / (npts + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < npts; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = npts * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[npts - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[npts - 1 - i] = w;
    }
    if (npts % 2 == 1) rule.nodes[npts / 2] = 0.0;
    return rule;
}

SphereRule gaussian_sphere_rule(int order) {
    if (order < 0) throw std::invalid_argument("gaussian_sphere_rule: order must be >= 0");
    const int n_colat = order + 1;
    const int n_az = 2 * (order + 1);
    const GaussLegendreRule gl = gauss_legendre(n_colat);
    SphereRule rule;
    rule.dirs.reserve(static_cast<std::size_t>(n_colat) * n_az);
    rule.weights.reserve(static_cast<std::size_t>(n_colat) * n_az);
    const double waz = two_pi / n_az;
    for (int i = 0; i < n_colat; ++i) {
        const double theta = std::acos(gl.nodes[i]);
        for (int l = 0; l < n_az; ++l) {
            rule.dirs.emplace_back(theta, waz * l);
            rule.weights.push_back(gl.weights[i] * waz);
        }
    }
    return rule;
}

}  // namespace spharray
