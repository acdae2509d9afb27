#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spharray/beamforming.hpp"
#include "spharray/geometry.hpp"
#include "spharray/sampling.hpp"

namespace spharray {

inline constexpr double speed_of_sound = 343.0;  // m/s, used for Hz <-> k conversion

struct PlaneWaveSource {
    cplx amplitude = 1.0;
    Direction arrival;
};

/// A far-field scene: plane waves at one wavenumber, synthesized to order
/// `order_sim`, with optional circular complex Gaussian sensor noise.
struct Scenario {
    std::vector<PlaneWaveSource> sources;
    double k = 0.0;
    int order_sim = 0;
    double noise_std = 0.0;
    std::uint64_t seed = 0;
};

/// Modal amplitudes of a plane wave: a_nm = amplitude * conj(Y_n^m(arrival)).
ModalCoefficients plane_wave_to_modal(const PlaneWaveSource& src, int order_sim);

/// Microphone pressures p_j = sum_{n<=order_sim,m} a_nm b_n(k r_j) Y_nm(Omega_j)
/// plus noise. Noise draws are deterministic per scenario seed.
Eigen::VectorXcd synthesize_pressure(const Scenario& sc, const ArrayGeometry& geom);

struct ChainResult {
    cplx output;                    // y(k)
    double condition_number = 0.0;  // cond B(k) at the array order
    double wng_db = 0.0;
    Eigen::VectorXcd source_gains;  // pattern value at each source arrival
    double aliasing_residual = 0.0; // relative change in a_hat vs an order-N-limited field
};

/// Full processing chain: synthesize -> estimate -> beamform, with
/// conditioning / WNG / per-source-gain diagnostics. Requires
/// (N+1)^2 <= M and N <= order_sim.
ChainResult run_chain(const Scenario& sc, const ArrayGeometry& geom, int order,
                      const BeamformerWeights& weights, double reg = 0.0);

/// Scenario file format (version 1, plain text, radians):
///   spharray-scenario v1
///   k <rad/m>  |  freq <Hz>      (freq converts with c = 343 m/s)
///   order <N_sim>
///   noise <std>
///   seed <n>
///   sources <count>
///   <re im theta phi>            (count lines)
Scenario load_scenario(const std::string& path);
Scenario read_scenario(std::istream& in);
void save_scenario(const Scenario& sc, const std::string& path);
void write_scenario(const Scenario& sc, std::ostream& out);

}  // namespace spharray
