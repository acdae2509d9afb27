#include "spharray/sampling.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spharray/radial.hpp"

namespace spharray {

namespace {

Eigen::MatrixXcd assemble_impl(const ArrayGeometry& geom, int order, double k, bool parallel) {
    if (order < 0 || order > max_order)
        throw std::domain_error("assemble_entries: order out of range");
    if (!(k > 0.0)) throw std::domain_error("assemble_entries: k must be > 0");
    const int m = geom.size();
    const int q = num_harmonics(order);
    Eigen::MatrixXcd b(q, m);
    auto fill_column = [&](int j) {
        const auto& mic = geom.mics[static_cast<std::size_t>(j)];
        const Eigen::VectorXcd y = sh_vector(order, mic.dir);
        for (int n = 0; n <= order; ++n) {
            const cplx bn = radial_bn(geom.boundary, n, k, mic.r);
            for (int mm = -n; mm <= n; ++mm) {
                const int row = harmonic_index(n, mm);
                b(row, j) = bn * y(row);
            }
        }
    };
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < m; ++j) fill_column(j);
        return b;
    }
#else
    (void)parallel;
#endif
    for (int j = 0; j < m; ++j) fill_column(j);
    return b;
}

double condition_from_singular_values(const Eigen::VectorXd& sv) {
    const double smax = sv.size() ? sv(0) : 0.0;
    const double smin = sv.size() ? sv(sv.size() - 1) : 0.0;
    // Unit floor on the reference scale: a matrix whose rows have all
    // collapsed (smax itself tiny) is rank deficient for any practical use.
    if (smin <= 1e-12 * std::max(smax, 1.0)) return std::numeric_limits<double>::infinity();
    return smax / smin;
}

}  // namespace

Eigen::MatrixXcd assemble_entries(const ArrayGeometry& geom, int order, double k) {
    return assemble_impl(geom, order, k, true);
}

Eigen::MatrixXcd assemble_entries_serial(const ArrayGeometry& geom, int order, double k) {
    return assemble_impl(geom, order, k, false);
}

SamplingMatrixB build_matrix_B(const ArrayGeometry& geom, int order, double k) {
    validate_geometry(geom, order);
    SamplingMatrixB b;
    b.order = order;
    b.k = k;
    b.entries = assemble_entries(geom, order, k);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b.entries);
    b.singular_values = svd.singularValues();
    b.condition_number = condition_from_singular_values(b.singular_values);
    return b;
}

std::vector<double> conditioning_sweep(const ArrayGeometry& geom, int order,
                                       const std::vector<double>& k_list) {
    validate_geometry(geom, order);
    std::vector<double> cond(k_list.size());
    const int n = static_cast<int>(k_list.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i) {
        const Eigen::MatrixXcd entries =
            assemble_impl(geom, order, k_list[static_cast<std::size_t>(i)], false);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(entries);
        cond[static_cast<std::size_t>(i)] = condition_from_singular_values(svd.singularValues());
    }
    return cond;
}

std::vector<double> conditioning_sweep_serial(const ArrayGeometry& geom, int order,
                                              const std::vector<double>& k_list) {
    validate_geometry(geom, order);
    std::vector<double> cond(k_list.size());
    for (std::size_t i = 0; i < k_list.size(); ++i) {
        const Eigen::MatrixXcd entries = assemble_impl(geom, order, k_list[i], false);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(entries);
        cond[i] = condition_from_singular_values(svd.singularValues());
    }
    return cond;
}

SamplingOperator solve_sampling_operator(const SamplingMatrixB& b, double reg) {
    if (!b.entries.allFinite()) throw std::runtime_error("solve_sampling_operator: B not finite");
    if (reg < 0.0) throw std::invalid_argument("solve_sampling_operator: reg must be >= 0");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b.entries, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (reg == 0.0 && smin < 1e-12 * smax)
        throw std::runtime_error("solve_sampling_operator: B is rank deficient (cond > 1e12); "
                                 "use regularization");
    // X = B^H (B B^H + reg I)^{-1} = V diag(s / (s^2 + reg)) U^H, so that
    // column q of X is the least-norm/Tikhonov c_nm for harmonic q.
    Eigen::VectorXd f(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        f(i) = sv(i) / (sv(i) * sv(i) + reg);
    const Eigen::MatrixXcd x =
        svd.matrixV() * f.asDiagonal() * svd.matrixU().adjoint();
    SamplingOperator op;
    op.order = b.order;
    op.k = b.k;
    op.coefficients = x.transpose();  // row q = c_nm across microphones
    return op;
}

ModalCoefficients estimate_modal(const SamplingOperator& op, const Eigen::VectorXcd& pressures) {
    if (pressures.size() != op.coefficients.cols())
        throw std::invalid_argument("estimate_modal: pressure count " +
                                    std::to_string(pressures.size()) + " != microphone count " +
                                    std::to_string(op.coefficients.cols()));
    ModalCoefficients out;
    out.order = op.order;
    out.values = op.coefficients * pressures;
    out.role = ModalRole::amplitude_modal;
    return out;
}

Eigen::VectorXcd microphone_weights(const SamplingOperator& op, const BeamformerWeights& weights) {
    if (weights.order != op.order)
        throw std::invalid_argument("microphone_weights: weight order != operator order");
    const BeamformerWeights gen =
        weights.axisymmetric() ? axisymmetric_to_general(weights) : weights;
    return op.coefficients.transpose() * gen.general().dnm;
}

double white_noise_gain(const SamplingOperator& op, const BeamformerWeights& weights,
                        const Direction& look) {
    const Eigen::VectorXcd w = microphone_weights(op, weights);
    const double denom = w.squaredNorm();
    if (denom <= 0.0 || !std::isfinite(denom))
        throw std::runtime_error("white_noise_gain: degenerate microphone weights");
    const double num = std::norm(pattern_value(weights, look));
    return 10.0 * std::log10(num / denom);
}

}  // namespace spharray
