#pragma once

#include <complex>

namespace spharray {

using cplx = std::complex<double>;

/// Maximum supported harmonic / Bessel order.
inline constexpr int max_order = 30;

/// Spherical Bessel function of the first kind j_n(x), n in [0, max_order],
/// x >= 0. Downward (Miller) recurrence for x < n, upward otherwise.
double sph_bessel_j(int n, double x);

/// dj_n/dx. The x = 0 limit is handled from the power series
/// (j'_0(0) = 0, j'_1(0) = 1/3, j'_n(0) = 0 for n >= 2).
double sph_bessel_j_deriv(int n, double x);

/// Spherical Bessel function of the second kind y_n(x), x > 0.
double sph_bessel_y(int n, double x);

/// dy_n/dx, x > 0.
double sph_bessel_y_deriv(int n, double x);

/// Spherical Hankel function of the first kind, h_n = j_n + i*y_n, x > 0.
/// First kind is used everywhere in this library.
cplx sph_hankel_h(int n, double x);

/// dh_n/dx, x > 0.
cplx sph_hankel_h_deriv(int n, double x);

/// Legendre polynomial P_n(x).
double legendre_p(int n, double x);

/// Chebyshev polynomial T_n(t) for any real t (hyperbolic form for |t| > 1).
double chebyshev_t(int n, double t);

/// log(n!) for n in [0, 4*max_order], precomputed.
double log_factorial(int n);

/// i^n for integer n >= 0.
cplx ipow(int n);

}  // namespace spharray
