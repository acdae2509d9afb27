#include "spharray/beamforming.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "spharray/quadrature.hpp"
#include "spharray/wigner.hpp"

namespace spharray {

cplx pattern_value(const BeamformerWeights& w, const Direction& arrival) {
    if (w.axisymmetric()) {
        const auto& axi = w.axi();
        const double ct = std::cos(angle_between(axi.look, arrival));
        cplx sum = 0.0;
        for (int n = 0; n <= w.order; ++n)
            sum += axi.dn(n) * ((2.0 * n + 1.0) / four_pi) * legendre_p(n, ct);
        return sum;
    }
    // sum_q d_q conj(Y_q); Eigen's dot conjugates its first operand.
    return sh_vector(w.order, arrival).dot(w.general().dnm);
}

namespace {

BeamPattern evaluate_impl(const BeamformerWeights& w, const std::vector<Direction>& grid,
                          bool parallel) {
    BeamPattern p;
    p.grid = grid;
    p.order = w.order;
    p.values.resize(static_cast<Eigen::Index>(grid.size()));
    const int n = static_cast<int>(grid.size());
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i)
            p.values(i) = pattern_value(w, grid[static_cast<std::size_t>(i)]);
        return p;
    }
#else
    (void)parallel;
#endif
    for (int i = 0; i < n; ++i) p.values(i) = pattern_value(w, grid[static_cast<std::size_t>(i)]);
    return p;
}

}  // namespace

BeamPattern evaluate_pattern(const BeamformerWeights& w, const std::vector<Direction>& grid) {
    return evaluate_impl(w, grid, true);
}

BeamPattern evaluate_pattern_serial(const BeamformerWeights& w, const std::vector<Direction>& grid) {
    return evaluate_impl(w, grid, false);
}

BeamformerWeights regular_weights(int order, const Direction& look) {
    if (order < 0 || order > max_order) throw std::invalid_argument("regular_weights: bad order");
    return {order, AxisymmetricWeights{Eigen::VectorXcd::Ones(order + 1), look}};
}

BeamformerWeights delay_sum_weights(int order, const Direction& look, const ArrayGeometry& geom,
                                    double k) {
    if (order < 0 || order > max_order) throw std::invalid_argument("delay_sum_weights: bad order");
    if (geom.mics.empty()) throw std::invalid_argument("delay_sum_weights: empty geometry");
    double r_lo = geom.mics.front().r, r_hi = r_lo;
    for (const auto& mic : geom.mics) {
        r_lo = std::min(r_lo, mic.r);
        r_hi = std::max(r_hi, mic.r);
    }
    if (r_hi - r_lo > 1e-12 * r_hi)
        throw std::invalid_argument("delay_sum_weights: d_n = |b_n(kr)|^2 requires a single-radius "
                                    "geometry");
    Eigen::VectorXcd dn(order + 1);
    for (int n = 0; n <= order; ++n) dn(n) = std::norm(radial_bn(geom.boundary, n, k, r_hi));
    return {order, AxisymmetricWeights{dn, look}};
}

BeamformerWeights dolph_chebyshev_weights(int order, const Direction& look, double sidelobe_ratio) {
    if (order < 1) throw std::invalid_argument("dolph_chebyshev_weights: order must be >= 1");
    if (!(sidelobe_ratio > 1.0))
        throw std::invalid_argument("dolph_chebyshev_weights: sidelobe ratio must be > 1");
    const double x0 = std::cosh(std::acosh(sidelobe_ratio) / (2.0 * order));
    // Project T_{2N}(x0 cos(Theta/2)) onto P_n(cos Theta). The target is a
    // polynomial of degree N in u = cos Theta, so Gauss-Legendre with N+1
    // nodes integrates every c_n contribution exactly.
    const GaussLegendreRule gl = gauss_legendre(order + 1);
    Eigen::VectorXcd dn(order + 1);
    for (int n = 0; n <= order; ++n) {
        double c = 0.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double u = gl.nodes[i];
            const double t = chebyshev_t(2 * order, x0 * std::sqrt(0.5 * (1.0 + u)));
            c += gl.weights[i] * t * legendre_p(n, u);
        }
        c *= (2.0 * n + 1.0) / 2.0;
        dn(n) = four_pi * c / (2.0 * n + 1.0);
    }
    return {order, AxisymmetricWeights{dn, look}};
}

BeamformerWeights axisymmetric_to_general(const BeamformerWeights& w) {
    if (!w.axisymmetric()) return w;
    const auto& axi = w.axi();
    const Eigen::VectorXcd y = sh_vector(w.order, axi.look);
    Eigen::VectorXcd dnm(num_harmonics(w.order));
    for (int n = 0; n <= w.order; ++n)
        for (int m = -n; m <= n; ++m) {
            const int q = harmonic_index(n, m);
            dnm(q) = axi.dn(n) * y(q);
        }
    return {w.order, GeneralWeights{dnm}};
}

BeamformerWeights null_constrained_weights(const BeamformerWeights& desired,
                                           const std::vector<Direction>& nulls) {
    if (nulls.empty()) return desired;
    const int q = num_harmonics(desired.order);
    const int k = static_cast<int>(nulls.size());
    if (k >= q)
        throw std::invalid_argument("null_constrained_weights: need fewer nulls than (N+1)^2");
    if (desired.axisymmetric()) {
        for (const Direction& d : nulls)
            if (angle_between(desired.axi().look, d) < 1e-9)
                throw std::invalid_argument("null_constrained_weights: null at the look direction");
    }
    const Eigen::VectorXcd d0 = axisymmetric_to_general(desired).general().dnm;
    Eigen::MatrixXcd a(k, q);
    for (int i = 0; i < k; ++i)
        a.row(i) = sh_vector(desired.order, nulls[static_cast<std::size_t>(i)]).conjugate();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const Eigen::VectorXd sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-12 * sv(0))
        throw std::runtime_error("null_constrained_weights: constraint set is rank deficient "
                                 "(coincident or dependent nulls)");
    // KKT solution of min ||d - d0|| s.t. A d = 0.
    const Eigen::MatrixXcd gram = a * a.adjoint();
    const Eigen::VectorXcd lambda = gram.ldlt().solve(a * d0);
    return {desired.order, GeneralWeights{d0 - a.adjoint() * lambda}};
}

BeamformerWeights steer_weights(const BeamformerWeights& w, const EulerAngles& ang) {
    if (w.axisymmetric())
        throw std::invalid_argument("steer_weights: expects general-form weights "
                                    "(use axisymmetric_to_general first)");
    const Eigen::VectorXcd& d = w.general().dnm;
    Eigen::VectorXcd out(d.size());
    for (int n = 0; n <= w.order; ++n) {
        const Eigen::MatrixXcd block = wigner_D_block(n, ang).conjugate();
        out.segment(harmonic_index(n, -n), 2 * n + 1) =
            block * d.segment(harmonic_index(n, -n), 2 * n + 1);
    }
    return {w.order, GeneralWeights{out}};
}

Direction pattern_peak(const BeamformerWeights& w) {
    if (w.axisymmetric()) return w.axi().look;
    // Dense scan; adequate for reporting, not a global optimizer.
    const SphereRule scan = gaussian_sphere_rule(std::max(2 * w.order, 16));
    Direction best = scan.dirs.front();
    double best2 = -1.0;
    for (const Direction& d : scan.dirs) {
        const double v = std::norm(pattern_value(w, d));
        if (v > best2) {
            best2 = v;
            best = d;
        }
    }
    return best;
}

double directivity_index(const BeamformerWeights& w) {
    const double peak2 = std::norm(pattern_value(w, pattern_peak(w)));
    const SphereRule rule = gaussian_sphere_rule(w.order);
    double power = 0.0;
    for (std::size_t i = 0; i < rule.dirs.size(); ++i)
        power += rule.weights[i] * std::norm(pattern_value(w, rule.dirs[i]));
    if (power <= 0.0) throw std::runtime_error("directivity_index: zero-power pattern");
    return 10.0 * std::log10(peak2 / (power / four_pi));
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("weights file: " + what);
}

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

BeamformerWeights read_weights(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line) || line.rfind("spharray-weights v1", 0) != 0)
        parse_fail("missing 'spharray-weights v1' header");
    if (!next_content_line(in, line)) parse_fail("missing order line");
    int order = -1;
    {
        std::istringstream ss(line);
        std::string key;
        ss >> key >> order;
        if (key != "order" || order < 0 || order > max_order) parse_fail("expected 'order <N>'");
    }
    if (!next_content_line(in, line)) parse_fail("missing form line");
    std::string form;
    {
        std::istringstream ss(line);
        ss >> form;
    }
    auto read_entries = [&](int count) {
        Eigen::VectorXcd v(count);
        for (int i = 0; i < count; ++i) {
            if (!next_content_line(in, line)) parse_fail("expected " + std::to_string(count) +
                                                         " coefficient lines");
            std::istringstream ss(line);
            double re = 0.0, im = 0.0;
            if (!(ss >> re >> im)) parse_fail("bad coefficient line: '" + line + "'");
            v(i) = cplx(re, im);
        }
        return v;
    };
    if (form == "axisymmetric") {
        if (!next_content_line(in, line)) parse_fail("missing look line");
        std::istringstream ss(line);
        std::string key;
        double theta = 0.0, phi = 0.0;
        ss >> key >> theta >> phi;
        if (key != "look") parse_fail("expected 'look <theta> <phi>'");
        return {order, AxisymmetricWeights{read_entries(order + 1), Direction(theta, phi)}};
    }
    if (form == "general")
        return {order, GeneralWeights{read_entries(num_harmonics(order))}};
    parse_fail("unknown form '" + form + "'");
}

BeamformerWeights load_weights(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open weights file: " + path);
    return read_weights(in);
}

void write_weights(const BeamformerWeights& w, std::ostream& out) {
    out << "spharray-weights v1\n";
    out << std::setprecision(17);
    out << "order " << w.order << '\n';
    if (w.axisymmetric()) {
        const auto& axi = w.axi();
        out << "axisymmetric\n";
        out << "look " << axi.look.theta << ' ' << axi.look.phi << '\n';
        for (int n = 0; n <= w.order; ++n)
            out << axi.dn(n).real() << ' ' << axi.dn(n).imag() << '\n';
    } else {
        out << "general\n";
        const auto& dnm = w.general().dnm;
        for (Eigen::Index i = 0; i < dnm.size(); ++i)
            out << dnm(i).real() << ' ' << dnm(i).imag() << '\n';
    }
}

void save_weights(const BeamformerWeights& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write weights file: " + path);
    write_weights(w, out);
}

}  // namespace spharray
