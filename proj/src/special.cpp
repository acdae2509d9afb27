#include "spharray/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace spharray {

namespace {

void check_order_arg(int n, double x) {
    if (n < 0 || n > max_order)
        throw std::domain_error("Bessel order out of supported range [0, 30]: " +
                                std::to_string(n));
    if (!std::isfinite(x)) throw std::domain_error("Bessel argument must be finite");
}

// j_0, j_1 from trig forms; the x -> 0 limits are handled by callers.
double j0(double x) { return std::sin(x) / x; }
double j1(double x) { return std::sin(x) / (x * x) - std::cos(x) / x; }

// Downward (Miller) recurrence, normalized against j_0 or j_1, whichever is
// larger in magnitude. Upward recurrence for j_n loses all digits once x < n.
double bessel_j_downward(int n, double x) {
    const int start = n + 60;
    double fp = 0.0;        // f_{k+1}
    double fc = 1e-300;     // f_k, arbitrary seed
    std::array<double, 2> low{};  // f_1, f_0 once reached
    double fn = 0.0;
    for (int k = start; k >= 1; --k) {
        const double fm = (2.0 * k + 1.0) / x * fc - fp;
        fp = fc;
        fc = fm;
        if (k - 1 == n) fn = fc;
        if (k - 1 == 1) low[0] = fc;
        if (k - 1 == 0) low[1] = fc;
        // Rescale to avoid overflow of the unnormalized solution.
        if (std::abs(fc) > 1e250) {
            fp *= 1e-250;
            fc *= 1e-250;
            fn *= 1e-250;
            low[0] *= 1e-250;
            low[1] *= 1e-250;
        }
    }
    const double ref0 = j0(x);
    const double ref1 = j1(x);
    const double scale = std::abs(low[1]) >= std::abs(low[0]) ? ref0 / low[1] : ref1 / low[0];
    return fn * scale;
}

double bessel_j_upward(int n, double x) {
    double jm = j0(x);
    if (n == 0) return jm;
    double jc = j1(x);
    for (int k = 1; k < n; ++k) {
        const double jn = (2.0 * k + 1.0) / x * jc - jm;
        jm = jc;
        jc = jn;
    }
    return jc;
}

}  // namespace

double sph_bessel_j(int n, double x) {
    check_order_arg(n, x);
    if (x < 0.0) throw std::domain_error("sph_bessel_j requires x >= 0");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x < 1e-6) {
        // Leading series term; avoids 0/0 noise in the trig forms.
        double t = 1.0;
        for (int k = 1; k <= n; ++k) t *= x / (2.0 * k + 1.0);
        return t * (1.0 - x * x / (2.0 * (2.0 * n + 3.0)));
    }
    return x >= n ? bessel_j_upward(n, x) : bessel_j_downward(n, x);
}

double sph_bessel_j_deriv(int n, double x) {
    check_order_arg(n, x);
    if (x < 0.0) throw std::domain_error("sph_bessel_j_deriv requires x >= 0");
    if (x == 0.0) return n == 1 ? 1.0 / 3.0 : 0.0;
    if (n == 0) return -sph_bessel_j(1, x);
    return sph_bessel_j(n - 1, x) - (n + 1.0) / x * sph_bessel_j(n, x);
}

double sph_bessel_y(int n, double x) {
    check_order_arg(n, x);
    if (x <= 0.0) throw std::domain_error("sph_bessel_y requires x > 0");
    double ym = -std::cos(x) / x;
    if (n == 0) return ym;
    double yc = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int k = 1; k < n; ++k) {
        const double yn = (2.0 * k + 1.0) / x * yc - ym;
        ym = yc;
        yc = yn;
    }
    return yc;
}

double sph_bessel_y_deriv(int n, double x) {
    check_order_arg(n, x);
    if (x <= 0.0) throw std::domain_error("sph_bessel_y_deriv requires x > 0");
    if (n == 0) return -sph_bessel_y(1, x);
    return sph_bessel_y(n - 1, x) - (n + 1.0) / x * sph_bessel_y(n, x);
}

cplx sph_hankel_h(int n, double x) {
    return {sph_bessel_j(n, x), sph_bessel_y(n, x)};
}

cplx sph_hankel_h_deriv(int n, double x) {
    return {sph_bessel_j_deriv(n, x), sph_bessel_y_deriv(n, x)};
}

double legendre_p(int n, double x) {
    if (n < 0) throw std::domain_error("legendre_p requires n >= 0");
    if (n == 0) return 1.0;
    double pm = 1.0;
    double pc = x;
    for (int k = 1; k < n; ++k) {
        const double pn = ((2.0 * k + 1.0) * x * pc - k * pm) / (k + 1.0);
        pm = pc;
        pc = pn;
    }
    return pc;
}

double chebyshev_t(int n, double t) {
    if (n < 0) throw std::domain_error("chebyshev_t requires n >= 0");
    if (t >= 1.0) return std::cosh(n * std::acosh(t));
    if (t <= -1.0) {
        const double v = std::cosh(n * std::acosh(-t));
        return n % 2 == 0 ? v : -v;
    }
    return std::cos(n * std::acos(t));
}

double log_factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(4 * max_order + 2, 0.0);
        for (std::size_t k = 2; k < t.size(); ++k) t[k] = t[k - 1] + std::log(double(k));
        return t;
    }();
    if (n < 0 || n >= static_cast<int>(table.size()))
        throw std::domain_error("log_factorial argument out of range");
    return table[n];
}

cplx ipow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace spharray
