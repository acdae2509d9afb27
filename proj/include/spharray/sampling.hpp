#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spharray/beamforming.hpp"
#include "spharray/geometry.hpp"
#include "spharray/spherical_harmonics.hpp"

namespace spharray {

enum class ModalRole { pressure_modal, amplitude_modal };

/// Order-limited spherical Fourier coefficients, packed at q = n^2 + n + m.
struct ModalCoefficients {
    int order = 0;
    Eigen::VectorXcd values;  // length (order+1)^2
    ModalRole role = ModalRole::amplitude_modal;
};

/// The (N+1)^2 x M sampling matrix with entries b_n(k r_j) Y_n^m(Omega_j),
/// row index q = n^2 + n + m, plus its singular values. condition_number is
/// +inf when the matrix is rank deficient (sigma_min below 1e-12 relative to
/// max(sigma_max, 1); the unit floor catches matrices whose every row has
/// collapsed, e.g. an order-0 open sphere at a Bessel zero).
struct SamplingMatrixB {
    int order = 0;
    double k = 0.0;
    Eigen::MatrixXcd entries;
    Eigen::VectorXd singular_values;  // descending
    double condition_number = 0.0;

    bool rank_deficient() const { return !std::isfinite(condition_number); }
};

/// Sampling coefficients c_nm^j; row q holds c_nm across microphones.
struct SamplingOperator {
    int order = 0;
    double k = 0.0;
    Eigen::MatrixXcd coefficients;  // (N+1)^2 x M
};

/// Raw matrix of b_n(k r_j) Y_n^m(Omega_j) entries without the microphone
/// count constraint; used for both analysis (build_matrix_B) and synthesis.
/// OpenMP-parallel over microphones.
Eigen::MatrixXcd assemble_entries(const ArrayGeometry& geom, int order, double k);

/// Serial reference for assemble_entries (identical results).
Eigen::MatrixXcd assemble_entries_serial(const ArrayGeometry& geom, int order, double k);

/// Builds B for the geometry, requiring (N+1)^2 <= M, and computes its
/// singular values and condition number.
SamplingMatrixB build_matrix_B(const ArrayGeometry& geom, int order, double k);

/// Condition number of B(k) for every k in k_list; OpenMP-parallel over k.
std::vector<double> conditioning_sweep(const ArrayGeometry& geom, int order,
                                       const std::vector<double>& k_list);

/// Serial reference for conditioning_sweep (identical results).
std::vector<double> conditioning_sweep_serial(const ArrayGeometry& geom, int order,
                                              const std::vector<double>& k_list);

/// Least-norm / Tikhonov solution of B c_nm = I_nm per harmonic:
///   C = (B^H (B B^H + reg I)^{-1})^T.
/// With reg = 0 the orthogonality system is satisfied to solver precision
/// when B is well conditioned. Throws when reg = 0 and sigma_min <
/// 1e-12 sigma_max.
SamplingOperator solve_sampling_operator(const SamplingMatrixB& B, double reg = 0.0);

/// Modal estimate from microphone pressures: a_nm = sum_j c_nm^j p_j.
/// The b_n compensation lives inside C, so the result is amplitude_modal.
ModalCoefficients estimate_modal(const SamplingOperator& op, const Eigen::VectorXcd& pressures);

/// Composed microphone-domain weights w_j = sum_{n,m} d_nm c_nm^j.
Eigen::VectorXcd microphone_weights(const SamplingOperator& op, const BeamformerWeights& weights);

/// White-noise-gain robustness metric in dB:
///   WNG = |pattern(look)|^2 / sum_j |w_j|^2.
/// Throws on a zero denominator.
double white_noise_gain(const SamplingOperator& op, const BeamformerWeights& weights,
                        const Direction& look);

}  // namespace spharray
