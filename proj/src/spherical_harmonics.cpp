#include "spharray/spherical_harmonics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace spharray {

namespace {

// Fully normalized associated Legendre functions Pbar_n^m(cos theta) with the
// Condon-Shortley phase, so that Y_n^m = Pbar_n^m e^{i m phi}. The 1/sqrt(4pi)
// is folded in, which keeps every value O(1) up to the supported order.
//
// Column-by-column recurrence: for each m, seed Pbar_m^m, then raise n.
void normalized_legendre(int order, double x, std::vector<double>& out) {
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));  // sin(theta)
    out.assign(static_cast<std::size_t>(num_harmonics(order)), 0.0);
    double pmm = 1.0 / std::sqrt(four_pi);  // Pbar_0^0
    for (int m = 0; m <= order; ++m) {
        out[static_cast<std::size_t>(harmonic_index(m, m))] = pmm;
        double pm1 = pmm;  // Pbar_{n-1}^m
        double pm2 = 0.0;  // Pbar_{n-2}^m
        for (int n = m + 1; n <= order; ++n) {
            const double a =
                std::sqrt((4.0 * n * n - 1.0) / (double(n) * n - double(m) * m));
            const double b = std::sqrt(((n - 1.0) * (n - 1.0) - double(m) * m) /
                                       (4.0 * (n - 1.0) * (n - 1.0) - 1.0));
            const double p = a * (x * pm1 - b * pm2);
            out[static_cast<std::size_t>(harmonic_index(n, m))] = p;
            pm2 = pm1;
            pm1 = p;
        }
        // Seed for the next diagonal: Pbar_{m+1}^{m+1}.
        pmm *= -std::sqrt((2.0 * m + 3.0) / (2.0 * m + 2.0)) * s;
    }
}

}  // namespace

cplx sph_harmonic(int n, int m, const Direction& dir) {
    if (n < 0 || n > max_order || std::abs(m) > n)
        throw std::domain_error("sph_harmonic: invalid (n, m) = (" + std::to_string(n) + ", " +
                                std::to_string(m) + ")");
    const int ma = std::abs(m);
    // Single-column recurrence for the requested |m|.
    const double x = std::cos(dir.theta);
    const double s = std::sin(dir.theta);
    double pmm = 1.0 / std::sqrt(four_pi);
    for (int k = 0; k < ma; ++k) pmm *= -std::sqrt((2.0 * k + 3.0) / (2.0 * k + 2.0)) * s;
    double pm1 = pmm;
    double pm2 = 0.0;
    double p = pmm;
    for (int nn = ma + 1; nn <= n; ++nn) {
        const double a = std::sqrt((4.0 * nn * nn - 1.0) / (double(nn) * nn - double(ma) * ma));
        const double b = std::sqrt(((nn - 1.0) * (nn - 1.0) - double(ma) * ma) /
                                   (4.0 * (nn - 1.0) * (nn - 1.0) - 1.0));
        p = a * (x * pm1 - b * pm2);
        pm2 = pm1;
        pm1 = p;
    }
    const cplx e = std::polar(1.0, ma * dir.phi);
    if (m >= 0) return p * e;
    const double sign = (ma % 2 == 0) ? 1.0 : -1.0;
    return sign * p * std::conj(e);
}

Eigen::VectorXcd sh_vector(int order, const Direction& dir) {
    if (order < 0 || order > max_order)
        throw std::domain_error("sh_vector: order out of range");
    std::vector<double> pbar;
    normalized_legendre(order, std::cos(dir.theta), pbar);
    Eigen::VectorXcd y(num_harmonics(order));
    for (int m = 0; m <= order; ++m) {
        const cplx e = std::polar(1.0, m * dir.phi);
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        for (int n = m; n <= order; ++n) {
            const double p = pbar[static_cast<std::size_t>(harmonic_index(n, m))];
            y(harmonic_index(n, m)) = p * e;
            if (m > 0) y(harmonic_index(n, -m)) = sign * p * std::conj(e);
        }
    }
    return y;
}

}  // namespace spharray
