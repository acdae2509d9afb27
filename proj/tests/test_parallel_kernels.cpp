// The OpenMP kernels must reproduce their serial references bit for bit:
// every parallel unit writes independent outputs or reduces with exact ops.
#include <doctest.h>

#include <random>

#include "spharray/beamforming.hpp"
#include "spharray/sampling.hpp"

using namespace spharray;

TEST_CASE("assemble_entries: parallel == serial") {
    auto geom = make_spherical_array(sphere_sampling(SamplingScheme::near_uniform, 5, 48), 0.07,
                                     RigidSphere{0.07});
    const Eigen::MatrixXcd a = assemble_entries(geom, 5, 31.0);
    const Eigen::MatrixXcd b = assemble_entries_serial(geom, 5, 31.0);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conditioning_sweep: parallel == serial") {
    auto geom = make_spherical_array(sphere_sampling(SamplingScheme::near_uniform, 3, 20), 0.1,
                                     OpenPressure{});
    std::vector<double> ks;
    for (int i = 0; i < 24; ++i) ks.push_back(5.0 + 2.0 * i);
    const std::vector<double> a = conditioning_sweep(geom, 3, ks);
    const std::vector<double> b = conditioning_sweep_serial(geom, 3, ks);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("evaluate_pattern: parallel == serial") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Direction> grid;
    for (int i = 0; i < 4000; ++i)
        grid.emplace_back(std::acos(2.0 * u(rng) - 1.0), two_pi * u(rng));
    const BeamformerWeights w = dolph_chebyshev_weights(5, Direction(0.9, 0.9), 30.0);
    const BeamPattern a = evaluate_pattern(w, grid);
    const BeamPattern b = evaluate_pattern_serial(w, grid);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("min_abs_bn: parallel == serial") {
    std::vector<double> grid;
    for (int i = 0; i <= 3000; ++i) grid.push_back(0.2 + 0.01 * i);
    const auto a = min_abs_bn(RigidSphere{1.0}, 8, grid, 1.0);
    const auto b = min_abs_bn_serial(RigidSphere{1.0}, 8, grid, 1.0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
