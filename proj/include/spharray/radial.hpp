#pragma once

#include <string>
#include <variant>
#include <vector>

#include "spharray/special.hpp"

namespace spharray {

// Array boundary models. FreeField covers shell and free-position
// configurations: every microphone keeps its own radius and uses the
// open-sphere radial term.
struct OpenPressure {};
struct RigidSphere {
    double r0 = 0.0;  // sphere radius, meters; microphones at r >= r0
};
struct OpenCardioid {};
struct DualSphere {
    double alpha = 0.0;  // inner/outer radius ratio, strictly in (0, 1)
};
struct FreeField {};

using BoundaryModel = std::variant<OpenPressure, RigidSphere, OpenCardioid, DualSphere, FreeField>;

/// Validates variant parameters (rigid r0 > 0, dual alpha in (0, 1)).
void validate_boundary(const BoundaryModel& model);

std::string boundary_name(const BoundaryModel& model);

/// Radial mode strength b_n(kr) for the given boundary:
///   open/free : 4 pi i^n j_n(kr)
///   rigid     : 4 pi i^n (j_n(kr) - j'_n(kr0)/h'_n(kr0) h_n(kr))
///   cardioid  : 4 pi i^n (j_n(kr) - i j'_n(kr))
///   dual      : 4 pi i^n j_n at the sphere (r or alpha*r) with the larger
///               |j_n|, a hard per-(n, kr) switch
/// Requires k > 0, r > 0 and, for RigidSphere, r >= r0.
cplx radial_bn(const BoundaryModel& model, int n, double k, double r);

/// Per-order minimum of |b_n| over a wavenumber grid; row n of the result is
/// min over k in k_grid of |b_n(k r)|. Used for operating-band validation.
std::vector<double> min_abs_bn(const BoundaryModel& model, int order,
                               const std::vector<double>& k_grid, double r);

/// Serial reference for min_abs_bn (identical results).
std::vector<double> min_abs_bn_serial(const BoundaryModel& model, int order,
                                      const std::vector<double>& k_grid, double r);

/// Brute-force search for the dual-sphere radius ratio maximizing the
/// worst-case (over orders <= order and the kr band) |b_n|. Scans
/// `alpha_steps` ratios in [0.5, 0.95] against `band_steps` points in
/// [kr_lo, kr_hi]. Approximate by construction; no closed-form ratio is used.
struct DualAlphaResult {
    double alpha = 0.0;
    double worst_min = 0.0;  // min over n, kr of |b_n| at the best alpha
};
DualAlphaResult optimal_dual_alpha(int order, double kr_lo, double kr_hi,
                                   int alpha_steps = 46, int band_steps = 400);

/// The alpha -> worst-band min |b_n| table behind optimal_dual_alpha.
std::vector<std::pair<double, double>> dual_alpha_sweep(int order, double kr_lo, double kr_hi,
                                                        int alpha_steps = 46, int band_steps = 400);

}  // namespace spharray
