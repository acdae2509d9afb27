#include "spharray/wigner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spharray {

namespace {

void check_indices(int n, int m_row, int m_col) {
    if (n < 0 || n > max_order || std::abs(m_row) > n || std::abs(m_col) > n)
        throw std::domain_error("wigner: invalid indices (n, m_row, m_col) = (" +
                                std::to_string(n) + ", " + std::to_string(m_row) + ", " +
                                std::to_string(m_col) + ")");
}

// pow with the 0^0 = 1 convention needed at beta = 0 or pi.
double ipow_real(double base, int e) {
    if (e == 0) return 1.0;
    return std::pow(base, e);
}

}  // namespace

double wigner_d(int n, int m_row, int m_col, double beta) {
    check_indices(n, m_row, m_col);
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);
    const double pref = 0.5 * (log_factorial(n + m_row) + log_factorial(n - m_row) +
                               log_factorial(n + m_col) + log_factorial(n - m_col));
    const int s_lo = std::max(0, m_col - m_row);
    const int s_hi = std::min(n + m_col, n - m_row);
    double sum = 0.0;
    for (int t = s_lo; t <= s_hi; ++t) {
        const double lg = pref - log_factorial(n + m_col - t) - log_factorial(t) -
                          log_factorial(m_row - m_col + t) - log_factorial(n - m_row - t);
        const double sign = ((m_row - m_col + t) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::exp(lg) * ipow_real(c, 2 * n + m_col - m_row - 2 * t) *
               ipow_real(s, m_row - m_col + 2 * t);
    }
    return sum;
}

cplx wigner_D(int n, int m_row, int m_col, const EulerAngles& ang) {
    const double d = wigner_d(n, m_row, m_col, ang.beta);
    return std::polar(d, -m_row * ang.alpha - m_col * ang.gamma);
}

Eigen::MatrixXcd wigner_D_block(int n, const EulerAngles& ang) {
    Eigen::MatrixXcd D(2 * n + 1, 2 * n + 1);
    for (int mr = -n; mr <= n; ++mr)
        for (int mc = -n; mc <= n; ++mc) D(mr + n, mc + n) = wigner_D(n, mr, mc, ang);
    return D;
}

}  // namespace spharray
