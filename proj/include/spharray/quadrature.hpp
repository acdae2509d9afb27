#pragma once

#include <vector>

#include "spharray/direction.hpp"

namespace spharray {

/// Gauss-Legendre nodes and weights on [-1, 1], exact for polynomials of
/// degree 2*npts - 1.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int npts);

/// Quadrature rule on the unit sphere: sum w_i f(dir_i) ~ integral f dOmega.
struct SphereRule {
    std::vector<Direction> dirs;
    std::vector<double> weights;
};

/// Product rule with (order+1) Gauss-Legendre colatitudes and 2*(order+1)
/// uniform azimuths; integrates spherical polynomials up to order 2*order+1
/// exactly (so products of two order-`order` fields are exact).
SphereRule gaussian_sphere_rule(int order);

}  // namespace spharray
