#pragma once

#include <Eigen/Dense>

#include "spharray/direction.hpp"
#include "spharray/special.hpp"

namespace spharray {

/// Linear index of harmonic (n, m): q = n^2 + n + m.
inline int harmonic_index(int n, int m) { return n * n + n + m; }

/// Number of harmonics up to and including order N.
inline int num_harmonics(int order) { return (order + 1) * (order + 1); }

/// Order n of linear index q.
inline int harmonic_order(int q) { return static_cast<int>(std::sqrt(static_cast<double>(q))); }

/// Degree m of linear index q.
inline int harmonic_degree(int q) {
    int n = harmonic_order(q);
    return q - n * n - n;
}

/// Complex orthonormal spherical harmonic Y_n^m with Condon-Shortley phase.
/// Requires |m| <= n <= max_order.
cplx sph_harmonic(int n, int m, const Direction& dir);

/// All Y_n^m for n <= order, packed at linear index q = n^2 + n + m.
Eigen::VectorXcd sh_vector(int order, const Direction& dir);

}  // namespace spharray
