#include "spharray/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "spharray/quadrature.hpp"
#include "spharray/spherical_harmonics.hpp"

namespace spharray {

void validate_geometry(const ArrayGeometry& geom, int order) {
    validate_boundary(geom.boundary);
    const int m = geom.size();
    if (m < num_harmonics(order))
        throw std::invalid_argument("geometry: need at least (N+1)^2 = " +
                                    std::to_string(num_harmonics(order)) + " microphones, got " +
                                    std::to_string(m));
    const double r0 =
        std::holds_alternative<RigidSphere>(geom.boundary) ? std::get<RigidSphere>(geom.boundary).r0 : 0.0;
    for (const auto& mic : geom.mics) {
        if (!(mic.r > 0.0) || !std::isfinite(mic.r))
            throw std::invalid_argument("geometry: microphone radius must be positive and finite");
        if (r0 > 0.0 && mic.r < r0 * (1.0 - 1e-12))
            throw std::invalid_argument("geometry: microphone inside the rigid sphere");
    }
    for (int i = 0; i < m; ++i) {
        const Eigen::Vector3d pi_ = geom.mics[i].r * geom.mics[i].dir.unit();
        for (int j = i + 1; j < m; ++j) {
            const Eigen::Vector3d pj = geom.mics[j].r * geom.mics[j].dir.unit();
            if ((pi_ - pj).norm() < 1e-9)
                throw std::invalid_argument("geometry: microphones " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide");
        }
    }
}

namespace {

SphereSampling equal_angle_sampling(int order) {
    const int n_col = 2 * (order + 1);
    const int n_az = 2 * (order + 1);
    // Colatitude weights solved for Legendre exactness up to degree 2N+1 on
    // the offset grid theta_i = pi (i + 1/2) / (2N+2).
    Eigen::MatrixXd a(n_col, n_col);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_col);
    rhs(0) = 2.0;
    std::vector<double> theta(static_cast<std::size_t>(n_col));
    for (int i = 0; i < n_col; ++i) {
        theta[static_cast<std::size_t>(i)] = pi * (i + 0.5) / n_col;
        for (int d = 0; d < n_col; ++d)
            a(d, i) = legendre_p(d, std::cos(theta[static_cast<std::size_t>(i)]));
    }
    const Eigen::VectorXd w_col = a.fullPivLu().solve(rhs);
    SphereSampling s;
    const double waz = two_pi / n_az;
    for (int i = 0; i < n_col; ++i)
        for (int l = 0; l < n_az; ++l) {
            s.dirs.emplace_back(theta[static_cast<std::size_t>(i)], waz * l);
            s.weights.push_back(w_col(i) * waz);
        }
    return s;
}

SphereSampling gaussian_sampling(int order) {
    const SphereRule rule = gaussian_sphere_rule(order);
    return SphereSampling{rule.dirs, rule.weights};
}

// Generalized spiral points: equal-area strips in cos(theta) with the golden
// angle advancing the azimuth. Deterministic in M.
SphereSampling spiral_sampling(int count) {
    SphereSampling s;
    const double golden_angle = pi * (3.0 - std::sqrt(5.0));
    for (int j = 0; j < count; ++j) {
        const double z = 1.0 - 2.0 * (j + 0.5) / count;
        s.dirs.emplace_back(std::acos(z), std::fmod(golden_angle * j, two_pi));
    }
    return s;
}

}  // namespace

SphereSampling sphere_sampling(SamplingScheme scheme, int order, int mic_count) {
    if (order < 0 || order > 10)
        throw std::invalid_argument("sphere_sampling: built-in schemes support order 0..10");
    switch (scheme) {
        case SamplingScheme::equal_angle: return equal_angle_sampling(order);
        case SamplingScheme::gaussian: return gaussian_sampling(order);
        case SamplingScheme::near_uniform: {
            int m = mic_count;
            if (m == 0) {
                m = static_cast<int>(std::ceil(1.25 * num_harmonics(order)));
                if (m % 2 == 1) ++m;
            }
            if (m < num_harmonics(order))
                throw std::invalid_argument("sphere_sampling: near_uniform needs M >= (N+1)^2");
            return spiral_sampling(m);
        }
    }
    throw std::invalid_argument("sphere_sampling: unknown scheme");
}

ArrayGeometry make_spherical_array(const SphereSampling& sampling, double r,
                                   const BoundaryModel& boundary) {
    if (!(r > 0.0)) throw std::invalid_argument("make_spherical_array: r must be > 0");
    ArrayGeometry geom;
    geom.boundary = boundary;
    geom.mics.reserve(sampling.dirs.size());
    for (const Direction& d : sampling.dirs) geom.mics.push_back({r, d});
    return geom;
}

namespace {

// Reads the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("geometry file: " + what);
}

}  // namespace

ArrayGeometry read_geometry(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line) || line.rfind("spharray-geometry v1", 0) != 0)
        parse_fail("missing 'spharray-geometry v1' header");

    ArrayGeometry geom;
    if (!next_content_line(in, line)) parse_fail("missing boundary line");
    {
        std::istringstream ss(line);
        std::string key, tag;
        ss >> key >> tag;
        if (key != "boundary") parse_fail("expected 'boundary', got '" + key + "'");
        if (tag == "open") {
            geom.boundary = OpenPressure{};
        } else if (tag == "rigid") {
            double r0 = 0.0;
            if (!(ss >> r0)) parse_fail("rigid boundary needs r0");
            geom.boundary = RigidSphere{r0};
        } else if (tag == "cardioid") {
            geom.boundary = OpenCardioid{};
        } else if (tag == "dual") {
            double alpha = 0.0;
            if (!(ss >> alpha)) parse_fail("dual boundary needs alpha");
            geom.boundary = DualSphere{alpha};
        } else if (tag == "free") {
            geom.boundary = FreeField{};
        } else {
            parse_fail("unknown boundary tag '" + tag + "'");
        }
    }
    validate_boundary(geom.boundary);

    if (!next_content_line(in, line)) parse_fail("missing mics line");
    int m = 0;
    {
        std::istringstream ss(line);
        std::string key;
        ss >> key >> m;
        if (key != "mics" || m <= 0) parse_fail("expected 'mics <count>'");
    }
    geom.mics.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) parse_fail("expected " + std::to_string(m) + " mic lines");
        std::istringstream ss(line);
        double r = 0.0, theta = 0.0, phi = 0.0;
        if (!(ss >> r >> theta >> phi)) parse_fail("bad mic line: '" + line + "'");
        geom.mics.push_back({r, Direction(theta, phi)});
    }
    return geom;
}

ArrayGeometry load_geometry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open geometry file: " + path);
    return read_geometry(in);
}

void write_geometry(const ArrayGeometry& geom, std::ostream& out) {
    out << "spharray-geometry v1\n";
    out << std::setprecision(17);
    out << "boundary " << boundary_name(geom.boundary);
    if (const auto* rigid = std::get_if<RigidSphere>(&geom.boundary)) out << ' ' << rigid->r0;
    if (const auto* dual = std::get_if<DualSphere>(&geom.boundary)) out << ' ' << dual->alpha;
    out << '\n';
    out << "mics " << geom.size() << '\n';
    for (const auto& mic : geom.mics)
        out << mic.r << ' ' << mic.dir.theta << ' ' << mic.dir.phi << '\n';
}

void save_geometry(const ArrayGeometry& geom, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write geometry file: " + path);
    write_geometry(geom, out);
}

}  // namespace spharray
