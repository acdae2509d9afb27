#include "spharray/radial.hpp"

#include "spharray/direction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spharray {

void validate_boundary(const BoundaryModel& model) {
    if (const auto* rigid = std::get_if<RigidSphere>(&model)) {
        if (!(rigid->r0 > 0.0) || !std::isfinite(rigid->r0))
            throw std::invalid_argument("rigid sphere requires r0 > 0");
    } else if (const auto* dual = std::get_if<DualSphere>(&model)) {
        if (!(dual->alpha > 0.0 && dual->alpha < 1.0))
            throw std::invalid_argument("dual sphere requires alpha in (0, 1)");
    }
}

std::string boundary_name(const BoundaryModel& model) {
    struct Visitor {
        std::string operator()(const OpenPressure&) const { return "open"; }
        std::string operator()(const RigidSphere&) const { return "rigid"; }
        std::string operator()(const OpenCardioid&) const { return "cardioid"; }
        std::string operator()(const DualSphere&) const { return "dual"; }
        std::string operator()(const FreeField&) const { return "free"; }
    };
    return std::visit(Visitor{}, model);
}

cplx radial_bn(const BoundaryModel& model, int n, double k, double r) {
    if (!(k > 0.0) || !(r > 0.0))
        throw std::domain_error("radial_bn requires k > 0 and r > 0");
    validate_boundary(model);
    const double kr = k * r;
    const cplx scale = four_pi * ipow(n);

    struct Visitor {
        int n;
        double k, r, kr;
        cplx scale;

        cplx operator()(const OpenPressure&) const { return scale * sph_bessel_j(n, kr); }
        cplx operator()(const FreeField&) const { return scale * sph_bessel_j(n, kr); }
        cplx operator()(const RigidSphere& rigid) const {
            if (r < rigid.r0 * (1.0 - 1e-12))
                throw std::domain_error("rigid sphere: microphone radius below r0");
            const double kr0 = k * rigid.r0;
            const cplx scattered = sph_bessel_j_deriv(n, kr0) / sph_hankel_h_deriv(n, kr0) *
                                   sph_hankel_h(n, kr);
            return scale * (sph_bessel_j(n, kr) - scattered);
        }
        cplx operator()(const OpenCardioid&) const {
            return scale * (sph_bessel_j(n, kr) - cplx(0.0, 1.0) * sph_bessel_j_deriv(n, kr));
        }
        cplx operator()(const DualSphere& dual) const {
            // Hard sphere-selecting switch: take the sphere with the larger
            // |j_n|, which maximizes the row-norm contribution to B.
            const double outer = sph_bessel_j(n, kr);
            const double inner = sph_bessel_j(n, dual.alpha * kr);
            return scale * (std::abs(outer) >= std::abs(inner) ? outer : inner);
        }
    };
    return std::visit(Visitor{n, k, r, kr, scale}, model);
}

namespace {

std::vector<double> min_abs_bn_impl(const BoundaryModel& model, int order,
                                    const std::vector<double>& k_grid, double r, bool parallel) {
    if (k_grid.empty()) throw std::invalid_argument("min_abs_bn: empty wavenumber grid");
    if (order < 0 || order > max_order) throw std::domain_error("min_abs_bn: order out of range");
    std::vector<double> out(static_cast<std::size_t>(order) + 1,
                            std::numeric_limits<double>::infinity());
#ifdef _OPENMP
    if (parallel) {
        const int npts = static_cast<int>(k_grid.size());
#pragma omp parallel
        {
            std::vector<double> local(out.size(), std::numeric_limits<double>::infinity());
#pragma omp for nowait
            for (int i = 0; i < npts; ++i) {
                for (int n = 0; n <= order; ++n) {
                    const double v = std::abs(radial_bn(model, n, k_grid[i], r));
                    local[n] = std::min(local[n], v);
                }
            }
#pragma omp critical
            for (std::size_t n = 0; n < out.size(); ++n) out[n] = std::min(out[n], local[n]);
        }
        return out;
    }
#else
    (void)parallel;
#endif
    for (const double k : k_grid)
        for (int n = 0; n <= order; ++n)
            out[n] = std::min(out[n], std::abs(radial_bn(model, n, k, r)));
    return out;
}

}  // namespace

std::vector<double> min_abs_bn(const BoundaryModel& model, int order,
                               const std::vector<double>& k_grid, double r) {
    return min_abs_bn_impl(model, order, k_grid, r, true);
}

std::vector<double> min_abs_bn_serial(const BoundaryModel& model, int order,
                                      const std::vector<double>& k_grid, double r) {
    return min_abs_bn_impl(model, order, k_grid, r, false);
}

std::vector<std::pair<double, double>> dual_alpha_sweep(int order, double kr_lo, double kr_hi,
                                                        int alpha_steps, int band_steps) {
    if (!(kr_lo > 0.0) || !(kr_hi > kr_lo))
        throw std::invalid_argument("dual_alpha_sweep: need 0 < kr_lo < kr_hi");
    if (alpha_steps < 2 || band_steps < 2)
        throw std::invalid_argument("dual_alpha_sweep: need at least 2 steps");
    std::vector<double> band(static_cast<std::size_t>(band_steps));
    for (int i = 0; i < band_steps; ++i)
        band[static_cast<std::size_t>(i)] = kr_lo + (kr_hi - kr_lo) * i / (band_steps - 1.0);
    std::vector<std::pair<double, double>> table(static_cast<std::size_t>(alpha_steps));
    for (int a = 0; a < alpha_steps; ++a) {
        const double alpha = 0.5 + (0.95 - 0.5) * a / (alpha_steps - 1.0);
        // r = 1 without loss of generality: b_n depends on kr only.
        const std::vector<double> mins = min_abs_bn(DualSphere{alpha}, order, band, 1.0);
        table[static_cast<std::size_t>(a)] = {alpha, *std::min_element(mins.begin(), mins.end())};
    }
    return table;
}

DualAlphaResult optimal_dual_alpha(int order, double kr_lo, double kr_hi, int alpha_steps,
                                   int band_steps) {
    const auto table = dual_alpha_sweep(order, kr_lo, kr_hi, alpha_steps, band_steps);
    DualAlphaResult best{table.front().first, table.front().second};
    for (const auto& [alpha, worst] : table) {
        if (worst > best.worst_min) best = {alpha, worst};
    }
    return best;
}

}  // namespace spharray
