#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "spharray/direction.hpp"
#include "spharray/geometry.hpp"
#include "spharray/spherical_harmonics.hpp"

namespace spharray {

/// Axisymmetric weights: d_n per order plus the look direction. Expands to
/// the general form via d_nm = d_n Y_n^m(look).
struct AxisymmetricWeights {
    Eigen::VectorXcd dn;  // length order+1
    Direction look;
};

/// General weights: d_nm packed at linear index q = n^2 + n + m.
struct GeneralWeights {
    Eigen::VectorXcd dnm;  // length (order+1)^2
};

struct BeamformerWeights {
    int order = 0;
    std::variant<AxisymmetricWeights, GeneralWeights> form;

    bool axisymmetric() const { return std::holds_alternative<AxisymmetricWeights>(form); }
    const AxisymmetricWeights& axi() const { return std::get<AxisymmetricWeights>(form); }
    const GeneralWeights& general() const { return std::get<GeneralWeights>(form); }
};

/// Pattern values sampled on a direction grid.
struct BeamPattern {
    std::vector<Direction> grid;
    Eigen::VectorXcd values;
    int order = 0;
};

/// Beam pattern value for a unit plane wave from `arrival`:
///   sum_{n,m} d_nm conj(Y_n^m(arrival)).
/// Axisymmetric weights are evaluated through the addition theorem,
///   sum_n d_n (2n+1)/(4 pi) P_n(cos Theta).
cplx pattern_value(const BeamformerWeights& w, const Direction& arrival);

/// Pattern on a grid; OpenMP-parallel over directions.
BeamPattern evaluate_pattern(const BeamformerWeights& w, const std::vector<Direction>& grid);

/// Serial reference for evaluate_pattern (identical results).
BeamPattern evaluate_pattern_serial(const BeamformerWeights& w, const std::vector<Direction>& grid);

/// d_n = 1 for all n: truncated plane-wave decomposition.
BeamformerWeights regular_weights(int order, const Direction& look);

/// d_n = |b_n(kr)|^2. Requires a single-radius geometry.
BeamformerWeights delay_sum_weights(int order, const Direction& look, const ArrayGeometry& geom,
                                    double k);

/// Equiripple design: maps T_{2N}(x0 cos(Theta/2)), x0 = cosh(acosh(R)/(2N)),
/// onto the order-N Legendre basis by exact Gauss-Legendre projection. All
/// sidelobe extrema sit at 1/R of the main-lobe peak. Requires N >= 1, R > 1.
BeamformerWeights dolph_chebyshev_weights(int order, const Direction& look, double sidelobe_ratio);

/// Expand axisymmetric weights to the general form.
BeamformerWeights axisymmetric_to_general(const BeamformerWeights& w);

/// Minimal-perturbation redesign: minimize ||d - d_desired||_2 subject to
/// pattern(d, null) = 0 for every null (closed-form KKT solution). Throws on
/// a rank-deficient constraint set.
BeamformerWeights null_constrained_weights(const BeamformerWeights& desired,
                                           const std::vector<Direction>& nulls);

/// Rotate general weights: d'_nm = sum_{m'} conj(D^n_{m,m'}(ang)) d_{nm'} per
/// order block. The steered pattern at the rotated arrival R(ang) * Omega
/// equals the original pattern at Omega.
BeamformerWeights steer_weights(const BeamformerWeights& w, const EulerAngles& ang);

/// Look direction for axisymmetric weights, dense-grid |pattern| maximum
/// for general ones.
Direction pattern_peak(const BeamformerWeights& w);

/// 10 log10(|pattern(peak)|^2 / ((1/4pi) integral |pattern|^2 dOmega)).
/// The peak is the look direction for axisymmetric weights and a dense-grid
/// maximum otherwise; the integral uses a quadrature exact at order 2N.
double directivity_index(const BeamformerWeights& w);

/// Weights file format (version 1, plain text, radians):
///   spharray-weights v1
///   order <N>
///   axisymmetric | general
///   look <theta> <phi>        (axisymmetric only)
///   <re im>                   (N+1 lines axisymmetric, (N+1)^2 general)
BeamformerWeights load_weights(const std::string& path);
BeamformerWeights read_weights(std::istream& in);
void save_weights(const BeamformerWeights& w, const std::string& path);
void write_weights(const BeamformerWeights& w, std::ostream& out);

}  // namespace spharray
