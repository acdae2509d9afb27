#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spharray/sampling.hpp"
#include "spharray/simulation.hpp"

using namespace spharray;

namespace {

ArrayGeometry spiral_array(int order, int count, double r, const BoundaryModel& bm) {
    return make_spherical_array(sphere_sampling(SamplingScheme::near_uniform, order, count), r, bm);
}

}  // namespace

TEST_CASE("build_matrix_B: single microphone at order 0") {
    ArrayGeometry geom;
    geom.boundary = OpenPressure{};
    geom.mics.push_back({0.5, Direction(1.0, 2.0)});
    const double k = 3.0;
    const SamplingMatrixB b = build_matrix_B(geom, 0, k);
    REQUIRE(b.entries.rows() == 1);
    REQUIRE(b.entries.cols() == 1);
    const cplx expect = std::sqrt(four_pi) * sph_bessel_j(0, k * 0.5);
    CHECK(std::abs(b.entries(0, 0) - expect) < 1e-13);
}

TEST_CASE("build_matrix_B: order/microphone-count violation") {
    auto geom = spiral_array(3, 16, 0.1, OpenPressure{});
    CHECK_THROWS_AS(build_matrix_B(geom, 4, 10.0), std::invalid_argument);
}

TEST_CASE("build_matrix_B: Bessel zero flags an infinite condition number") {
    for (int order : {0, 1, 3}) {
        auto geom = spiral_array(order, std::max(2 * num_harmonics(order), 8), 1.0,
                                 OpenPressure{});
        const SamplingMatrixB b = build_matrix_B(geom, order, pi);  // kr = pi kills row n = 0
        CHECK(b.rank_deficient());
        CHECK(std::isinf(b.condition_number));
    }
}

TEST_CASE("build_matrix_B: condition number against an independent SVD oracle") {
    auto geom = spiral_array(4, 32, 0.1, RigidSphere{0.1});
    const SamplingMatrixB b = build_matrix_B(geom, 4, 30.0);
    const Eigen::VectorXd sv = oracle::jacobi_singular_values(b.entries);
    const double cond_ref = sv(0) / (sv(sv.size() - 1));
    CHECK(std::abs(b.condition_number - cond_ref) <= 1e-6 * cond_ref);
}

TEST_CASE("build_matrix_B: permutation of microphones permutes columns") {
    auto geom = spiral_array(2, 12, 0.08, OpenCardioid{});
    const SamplingMatrixB b = build_matrix_B(geom, 2, 17.0);
    ArrayGeometry perm = geom;
    std::rotate(perm.mics.begin(), perm.mics.begin() + 5, perm.mics.end());
    const SamplingMatrixB bp = build_matrix_B(perm, 2, 17.0);
    for (int j = 0; j < geom.size(); ++j) {
        const int jp = (j + 5) % geom.size();
        CHECK((b.entries.col(jp) - bp.entries.col(j)).cwiseAbs().maxCoeff() == 0.0);
    }
    CHECK(std::abs(b.condition_number - bp.condition_number) < 1e-10 * b.condition_number);
}

TEST_CASE("build_matrix_B: condition number invariant under global rotation") {
    auto geom = spiral_array(3, 24, 0.06, OpenPressure{});
    const double k = 40.0;
    const double cond0 = build_matrix_B(geom, 3, k).condition_number;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 5; ++t) {
        const EulerAngles ang(two_pi * u(rng), pi * u(rng), two_pi * u(rng));
        ArrayGeometry rot = geom;
        for (auto& mic : rot.mics) mic.dir = rotate(mic.dir, ang);
        const double cond1 = build_matrix_B(rot, 3, k).condition_number;
        CHECK(std::abs(cond1 - cond0) <= 1e-6 * cond0);
    }
}

TEST_CASE("solve_sampling_operator: orthonormal rows invert to the adjoint") {
    std::mt19937_64 rng(55);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd a(12, 5);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a(i, j) = cplx(g(rng), g(rng));
    const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a)
                                   .householderQ() *
                               Eigen::MatrixXcd::Identity(12, 5);
    SamplingMatrixB b;
    b.order = 1;  // 4 harmonics; shape only matters for the algebra here
    b.k = 1.0;
    b.entries = q.adjoint();  // 5 x 12 with orthonormal rows
    const SamplingOperator op = solve_sampling_operator(b, 0.0);
    CHECK((op.coefficients - b.entries.conjugate()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("solve_sampling_operator: orthogonality residual on a rigid sphere") {
    auto geom = spiral_array(4, 32, 0.1, RigidSphere{0.1});
    const SamplingMatrixB b = build_matrix_B(geom, 4, 25.0);
    const SamplingOperator op = solve_sampling_operator(b, 0.0);
    const Eigen::MatrixXcd resid =
        b.entries * op.coefficients.transpose() -
        Eigen::MatrixXcd::Identity(num_harmonics(4), num_harmonics(4));
    CHECK(resid.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("solve_sampling_operator: rank deficiency and regularization") {
    auto geom = spiral_array(1, 8, 1.0, OpenPressure{});
    const SamplingMatrixB b = build_matrix_B(geom, 1, pi);
    CHECK_THROWS_AS(solve_sampling_operator(b, 0.0), std::runtime_error);

    const double reg = 1e-2;
    const SamplingOperator op = solve_sampling_operator(b, reg);
    CHECK(op.coefficients.allFinite());
    const double bound = 1.0 / (2.0 * std::sqrt(reg));
    for (int q = 0; q < op.coefficients.rows(); ++q)
        CHECK(op.coefficients.row(q).norm() <= bound * (1.0 + 1e-12));

    // row-norm bound from the stored singular values
    const double smax = b.singular_values(0);
    const double smin = b.singular_values(b.singular_values.size() - 1);
    const double loose = smax / (smin * smin + reg);
    for (int q = 0; q < op.coefficients.rows(); ++q)
        CHECK(op.coefficients.row(q).norm() <= std::max(loose, bound) * (1.0 + 1e-12));
}

TEST_CASE("estimate_modal: zero input, plane waves, linearity") {
    auto geom = spiral_array(3, 24, 0.1, RigidSphere{0.1});
    const double k = 20.0;
    const SamplingOperator op = solve_sampling_operator(build_matrix_B(geom, 3, k), 0.0);

    const ModalCoefficients zero = estimate_modal(op, Eigen::VectorXcd::Zero(geom.size()));
    CHECK(zero.values.cwiseAbs().maxCoeff() == 0.0);
    CHECK(zero.role == ModalRole::amplitude_modal);

    const Direction a0(1.3, 0.4), a1(2.0, 4.0);
    Scenario sc;
    sc.k = k;
    sc.order_sim = 3;
    sc.sources = {{1.0, a0}};
    const ModalCoefficients one = estimate_modal(op, synthesize_pressure(sc, geom));
    const Eigen::VectorXcd expect = sh_vector(3, a0).conjugate();
    CHECK((one.values - expect).cwiseAbs().maxCoeff() < 1e-8);

    Scenario sc2 = sc;
    sc2.sources = {{cplx(0.5, 0.2), a0}, {cplx(-1.0, 0.3), a1}};
    const ModalCoefficients two = estimate_modal(op, synthesize_pressure(sc2, geom));
    const Eigen::VectorXcd expect2 = cplx(0.5, 0.2) * sh_vector(3, a0).conjugate() +
                                     cplx(-1.0, 0.3) * sh_vector(3, a1).conjugate();
    CHECK((two.values - expect2).cwiseAbs().maxCoeff() < 1e-8);

    CHECK_THROWS_AS(estimate_modal(op, Eigen::VectorXcd::Zero(geom.size() + 1)),
                    std::invalid_argument);
}

TEST_CASE("white_noise_gain: one-microphone formula") {
    ArrayGeometry geom;
    geom.boundary = OpenPressure{};
    geom.mics.push_back({0.1, Direction(0.7, 0.3)});
    const double k = 13.0;
    const SamplingOperator op = solve_sampling_operator(build_matrix_B(geom, 0, k), 0.0);
    BeamformerWeights w{0, AxisymmetricWeights{Eigen::VectorXcd::Ones(1), Direction(0.0, 0.0)}};
    const cplx w1 = op.coefficients(0, 0) / std::sqrt(four_pi);  // d_00 = d_0 Y_00
    const double expect =
        10.0 * std::log10(std::norm(pattern_value(w, Direction(0.0, 0.0))) / std::norm(w1));
    CHECK(white_noise_gain(op, w, Direction(0.0, 0.0)) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("white_noise_gain: delay-and-sum is frequency-flat on an open sphere") {
    const int order = 6;
    auto geom = spiral_array(order, 64, 0.05, OpenPressure{});
    const Direction look(1.2, 0.7);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < 10; ++i) {
        const double kr = 0.5 + (4.0 - 0.5) * i / 9.0;
        const double k = kr / 0.05;
        const SamplingOperator op = solve_sampling_operator(build_matrix_B(geom, order, k), 0.0);
        const double wng = white_noise_gain(op, delay_sum_weights(order, look, geom, k), look);
        lo = std::min(lo, wng);
        hi = std::max(hi, wng);
    }
    CHECK(hi - lo < 0.1);
}

TEST_CASE("white_noise_gain: regular weights collapse near a Bessel zero") {
    const int order = 2;
    auto geom = spiral_array(order, 16, 1.0, OpenPressure{});
    const Direction look(0.9, 0.2);
    const BeamformerWeights w = regular_weights(order, look);
    const SamplingOperator mid_op = solve_sampling_operator(build_matrix_B(geom, order, 2.0), 0.0);
    const SamplingOperator edge_op =
        solve_sampling_operator(build_matrix_B(geom, order, 3.13), 0.0);  // j_0 nearly gone
    const double mid = white_noise_gain(mid_op, w, look);
    const double edge = white_noise_gain(edge_op, w, look);
    CHECK(mid - edge > 20.0);
}

TEST_CASE("white_noise_gain: degenerate weights rejected") {
    auto geom = spiral_array(1, 8, 0.1, OpenPressure{});
    const SamplingOperator op = solve_sampling_operator(build_matrix_B(geom, 1, 15.0), 0.0);
    BeamformerWeights w{1, GeneralWeights{Eigen::VectorXcd::Zero(4)}};
    CHECK_THROWS_AS(white_noise_gain(op, w, Direction(0.0, 0.0)), std::runtime_error);
}
