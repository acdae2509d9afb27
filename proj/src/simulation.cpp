#include "spharray/simulation.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace spharray {

ModalCoefficients plane_wave_to_modal(const PlaneWaveSource& src, int order_sim) {
    if (order_sim < 0 || order_sim > max_order)
        throw std::domain_error("plane_wave_to_modal: order out of range");
    ModalCoefficients out;
    out.order = order_sim;
    out.values = src.amplitude * sh_vector(order_sim, src.arrival).conjugate();
    out.role = ModalRole::amplitude_modal;
    return out;
}

Eigen::VectorXcd synthesize_pressure(const Scenario& sc, const ArrayGeometry& geom) {
    if (sc.order_sim < 0 || sc.order_sim > max_order)
        throw std::domain_error("synthesize_pressure: order_sim out of range");
    if (sc.noise_std < 0.0) throw std::invalid_argument("synthesize_pressure: noise_std < 0");
    const int m = geom.size();
    Eigen::VectorXcd p = Eigen::VectorXcd::Zero(m);
    if (!sc.sources.empty()) {
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(num_harmonics(sc.order_sim));
        for (const PlaneWaveSource& src : sc.sources)
            a += plane_wave_to_modal(src, sc.order_sim).values;
        p = assemble_entries(geom, sc.order_sim, sc.k).transpose() * a;
    }
    if (sc.noise_std > 0.0) {
        std::mt19937_64 rng(sc.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        const double s = sc.noise_std / std::sqrt(2.0);
        for (int j = 0; j < m; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            p(j) += cplx(s * re, s * im);
        }
    }
    return p;
}

ChainResult run_chain(const Scenario& sc, const ArrayGeometry& geom, int order,
                      const BeamformerWeights& weights, double reg) {
    if (order > sc.order_sim)
        throw std::invalid_argument("run_chain: array order exceeds synthesis order");
    if (weights.order != order) throw std::invalid_argument("run_chain: weight order mismatch");

    const SamplingMatrixB b = build_matrix_B(geom, order, sc.k);
    const SamplingOperator op = solve_sampling_operator(b, reg);
    const Eigen::VectorXcd p = synthesize_pressure(sc, geom);
    const ModalCoefficients ahat = estimate_modal(op, p);
    const Eigen::VectorXcd dnm = axisymmetric_to_general(weights).general().dnm;

    ChainResult res;
    res.output = (dnm.array() * ahat.values.array()).sum();
    res.condition_number = b.condition_number;
    res.wng_db = white_noise_gain(op, weights, pattern_peak(weights));
    res.source_gains.resize(static_cast<Eigen::Index>(sc.sources.size()));
    for (std::size_t i = 0; i < sc.sources.size(); ++i)
        res.source_gains(static_cast<Eigen::Index>(i)) =
            pattern_value(weights, sc.sources[i].arrival);

    // Aliasing diagnostic: modal estimate of the noiseless field versus the
    // same field truncated at the array order.
    {
        Scenario full = sc;
        full.noise_std = 0.0;
        Scenario trunc = full;
        trunc.order_sim = order;
        const Eigen::VectorXcd a_full = estimate_modal(op, synthesize_pressure(full, geom)).values;
        const Eigen::VectorXcd a_trunc =
            estimate_modal(op, synthesize_pressure(trunc, geom)).values;
        const double ref = a_trunc.norm();
        res.aliasing_residual = ref > 0.0 ? (a_full - a_trunc).norm() / ref : (a_full).norm();
    }
    return res;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("scenario file: " + what);
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

Scenario read_scenario(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line) || line.rfind("spharray-scenario v1", 0) != 0)
        parse_fail("missing 'spharray-scenario v1' header");
    Scenario sc;
    bool have_k = false;
    int n_sources = -1;
    while (n_sources < 0 && next_content_line(in, line)) {
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "k") {
            if (!(ss >> sc.k) || !(sc.k > 0.0)) parse_fail("bad k");
            have_k = true;
        } else if (key == "freq") {
            double f = 0.0;
            if (!(ss >> f) || !(f > 0.0)) parse_fail("bad freq");
            sc.k = two_pi * f / speed_of_sound;
            have_k = true;
        } else if (key == "order") {
            if (!(ss >> sc.order_sim)) parse_fail("bad order");
        } else if (key == "noise") {
            if (!(ss >> sc.noise_std) || sc.noise_std < 0.0) parse_fail("bad noise");
        } else if (key == "seed") {
            if (!(ss >> sc.seed)) parse_fail("bad seed");
        } else if (key == "sources") {
            if (!(ss >> n_sources) || n_sources < 0) parse_fail("bad source count");
        } else {
            parse_fail("unknown key '" + key + "'");
        }
    }
    if (!have_k) parse_fail("missing k or freq");
    if (n_sources < 0) parse_fail("missing sources line");
    for (int i = 0; i < n_sources; ++i) {
        if (!next_content_line(in, line)) parse_fail("expected " + std::to_string(n_sources) +
                                                     " source lines");
        std::istringstream ss(line);
        double re = 0.0, im = 0.0, theta = 0.0, phi = 0.0;
        if (!(ss >> re >> im >> theta >> phi)) parse_fail("bad source line: '" + line + "'");
        sc.sources.push_back({cplx(re, im), Direction(theta, phi)});
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    return read_scenario(in);
}

void write_scenario(const Scenario& sc, std::ostream& out) {
    out << "spharray-scenario v1\n";
    out << std::setprecision(17);
    out << "k " << sc.k << '\n';
    out << "order " << sc.order_sim << '\n';
    out << "noise " << sc.noise_std << '\n';
    out << "seed " << sc.seed << '\n';
    out << "sources " << sc.sources.size() << '\n';
    for (const auto& s : sc.sources)
        out << s.amplitude.real() << ' ' << s.amplitude.imag() << ' ' << s.arrival.theta << ' '
            << s.arrival.phi << '\n';
}

void save_scenario(const Scenario& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write scenario file: " + path);
    write_scenario(sc, out);
}

}  // namespace spharray
