#include "spharray/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "spharray/sampling.hpp"

namespace spharray {

double conditioning_objective(const ArrayGeometry& geom, int order,
                              const std::vector<double>& k_list) {
    const std::vector<double> cond = conditioning_sweep(geom, order, k_list);
    double worst = 0.0;
    for (const double c : cond) worst = std::max(worst, c);
    return worst;
}

namespace {

enum Coord { coord_theta = 0, coord_phi = 1, coord_radius = 2 };

ArrayGeometry with_move(const ArrayGeometry& geom, int mic, Coord coord, double delta,
                        double r_lo, double r_hi) {
    ArrayGeometry g = geom;
    auto& p = g.mics[static_cast<std::size_t>(mic)];
    switch (coord) {
        case coord_theta: p.dir = Direction(p.dir.theta + delta, p.dir.phi); break;
        case coord_phi: p.dir = Direction(p.dir.theta, p.dir.phi + delta); break;
        case coord_radius: p.r = std::clamp(p.r + delta, r_lo, r_hi); break;
    }
    return g;
}

}  // namespace

OptimizeResult optimize_positions(const ArrayGeometry& geom0, int order,
                                  const std::vector<double>& k_list,
                                  const std::vector<int>& moveable, const OptimizeOptions& opts) {
    if (k_list.empty()) throw std::invalid_argument("optimize_positions: empty wavenumber band");
    for (const int i : moveable)
        if (i < 0 || i >= geom0.size())
            throw std::invalid_argument("optimize_positions: moveable index out of range");

    // Candidates violating geometry constraints are simply rejected.
    auto objective = [&](const ArrayGeometry& g) {
        try {
            return conditioning_objective(g, order, k_list);
        } catch (const std::invalid_argument&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    OptimizeResult res;
    res.geometry = geom0;
    res.initial_objective = objective(geom0);
    res.final_objective = res.initial_objective;
    if (moveable.empty() || opts.iterations <= 0) return res;

    const double rigid_r0 = std::holds_alternative<RigidSphere>(geom0.boundary)
                                ? std::get<RigidSphere>(geom0.boundary).r0
                                : 0.0;
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    ArrayGeometry best = geom0;
    double f_best = res.initial_objective;
    int evals = 0;

    for (int restart = 0; restart < std::max(1, opts.restarts) && evals < opts.iterations;
         ++restart) {
        ArrayGeometry cur = best;
        double f_cur = f_best;
        double step_ang = 0.05 + 0.25 * uni(rng);
        double step_r = 0.02 + 0.08 * uni(rng);
        while (evals < opts.iterations && step_ang > 1e-6) {
            bool improved = false;
            for (const int mic : moveable) {
                const double r_init = geom0.mics[static_cast<std::size_t>(mic)].r;
                const double r_lo =
                    std::max(opts.r_lo > 0.0 ? opts.r_lo : 0.5 * r_init, rigid_r0);
                const double r_hi = opts.r_hi > 0.0 ? opts.r_hi : 2.0 * r_init;
                const int n_coords = opts.move_radius ? 3 : 2;
                for (int c = 0; c < n_coords && evals < opts.iterations; ++c) {
                    const double step = (c == coord_radius) ? step_r * r_init : step_ang;
                    for (const double sign : {1.0, -1.0}) {
                        if (evals >= opts.iterations) break;
                        const ArrayGeometry cand =
                            with_move(cur, mic, static_cast<Coord>(c), sign * step, r_lo, r_hi);
                        const double f = objective(cand);
                        ++evals;
                        if (f < f_cur) {
                            cur = cand;
                            f_cur = f;
                            improved = true;
                            break;
                        }
                    }
                }
            }
            if (!improved) {
                step_ang *= 0.5;
                step_r *= 0.5;
            }
        }
        if (f_cur < f_best) {
            best = cur;
            f_best = f_cur;
        }
    }

    res.geometry = best;
    res.final_objective = f_best;
    res.evaluations = evals;
    return res;
}

}  // namespace spharray
