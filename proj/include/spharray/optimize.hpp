#pragma once

#include <cstdint>
#include <vector>

#include "spharray/geometry.hpp"

namespace spharray {

struct OptimizeOptions {
    int iterations = 2000;     // objective-evaluation budget
    std::uint64_t seed = 1;    // drives restarts; result is deterministic per seed
    int restarts = 10;
    bool move_radius = true;   // whether r is a free coordinate
    double r_lo = 0.0;         // radius bounds (0 keeps the mic's own radius as lower bound / 2)
    double r_hi = 0.0;         // 0 means 2x the mic's own radius
};

struct OptimizeResult {
    ArrayGeometry geometry;
    double initial_objective = 0.0;
    double final_objective = 0.0;
    int evaluations = 0;
};

/// Objective for position optimization: worst-case condition number of B(k)
/// over the band (max-reduced, so evaluation order never matters).
double conditioning_objective(const ArrayGeometry& geom, int order,
                              const std::vector<double>& k_list);

/// Derivative-free fine-tuning of microphone positions: random-restart
/// coordinate descent over (theta, phi, r) of each moveable microphone with
/// step halving on failed sweeps. Only improvements are accepted, so the
/// returned objective never exceeds the initial one. Deterministic per seed.
OptimizeResult optimize_positions(const ArrayGeometry& geom0, int order,
                                  const std::vector<double>& k_list,
                                  const std::vector<int>& moveable, const OptimizeOptions& opts);

}  // namespace spharray
