#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

long double bessel_j_series(int n, long double x) {
    // j_n(x) = sum_s (-1)^s x^{n+2s} / (2^s s! (2n+2s+1)!!)
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) term *= x / (2.0L * k + 1.0L);
    long double sum = term;
    long double s_term = term;
    for (int s = 1; s < 200; ++s) {
        s_term *= -x * x / (2.0L * s * (2.0L * (n + s) + 1.0L));
        sum += s_term;
        if (std::abs(s_term) < 1e-25L * std::abs(sum) + 1e-300L) break;
    }
    return sum;
}

long double legendre(int n, long double x) {
    if (n == 0) return 1.0L;
    long double pm = 1.0L, pc = x;
    for (int k = 1; k < n; ++k) {
        const long double pn = ((2.0L * k + 1.0L) * x * pc - k * pm) / (k + 1.0L);
        pm = pc;
        pc = pn;
    }
    return pc;
}

Eigen::VectorXd jacobi_singular_values(const Eigen::MatrixXcd& a) {
    // One-sided Jacobi: orthogonalize column pairs of A; singular values are
    // the final column norms. Work on the transpose when rows > cols.
    Eigen::MatrixXcd w = a.rows() <= a.cols() ? Eigen::MatrixXcd(a.adjoint()) : a;
    const int n = static_cast<int>(w.cols());
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const std::complex<double> apq = w.col(p).dot(w.col(q));
                const double app = w.col(p).squaredNorm();
                const double aqq = w.col(q).squaredNorm();
                if (std::abs(apq) <= 1e-30 * std::sqrt(app * aqq)) continue;
                off = std::max(off, std::abs(apq) / std::sqrt(app * aqq));
                // Complex Jacobi rotation diagonalizing the 2x2 Gram block.
                const double tau = (aqq - app) / (2.0 * std::abs(apq));
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const std::complex<double> phase = apq / std::abs(apq);
                const std::complex<double> s = t * c * phase;
                const Eigen::VectorXcd vp = w.col(p);
                const Eigen::VectorXcd vq = w.col(q);
                w.col(p) = c * vp - std::conj(s) * vq;
                w.col(q) = s * vp + c * vq;
            }
        }
        if (off < 1e-15) break;
    }
    Eigen::VectorXd sv(n);
    for (int i = 0; i < n; ++i) sv(i) = w.col(i).norm();
    std::sort(sv.data(), sv.data() + n, std::greater<double>());
    return sv;
}

Eigen::VectorXcd nullspace_project(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& d0) {
    // Feasibility A d = 0 means d is orthogonal to conj(row_i); orthonormalize
    // those vectors and subtract the projection.
    std::vector<Eigen::VectorXcd> basis;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Eigen::VectorXcd v = a.row(i).conjugate().transpose();
        for (const auto& u : basis) v -= u.dot(v) * u;
        const double nrm = v.norm();
        if (nrm > 1e-12) basis.push_back(v / nrm);
    }
    Eigen::VectorXcd d = d0;
    for (const auto& u : basis) d -= u.dot(d) * u;
    return d;
}

double sphere_integral(int n_theta, int n_phi,
                       const std::function<double(double, double)>& f) {
    const double pi = 3.14159265358979323846;
    const double dt = pi / n_theta;
    const double dp = 2.0 * pi / n_phi;
    double sum = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        const double theta = (i + 0.5) * dt;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = (j + 0.5) * dp;
            sum += f(theta, phi) * std::sin(theta);
        }
    }
    return sum * dt * dp;
}

}  // namespace oracle
