#include "spharray/direction.hpp"

#include <algorithm>

namespace spharray {

namespace {

double wrap_two_pi(double a) {
    double w = std::fmod(a, two_pi);
    if (w < 0.0) w += two_pi;
    return w;
}

}  // namespace

Direction::Direction(double theta_, double phi_) {
    double t = std::fmod(theta_, two_pi);
    if (t < 0.0) t += two_pi;
    double p = phi_;
    if (t > pi) {
        t = two_pi - t;
        p += pi;
    }
    theta = t;
    phi = wrap_two_pi(p);
}

Eigen::Vector3d Direction::unit() const {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Direction Direction::from_unit(const Eigen::Vector3d& v) {
    const Eigen::Vector3d u = v.normalized();
    const double t = std::acos(std::clamp(u.z(), -1.0, 1.0));
    const double p = std::atan2(u.y(), u.x());
    return Direction(t, p);
}

EulerAngles::EulerAngles(double alpha_, double beta_, double gamma_) {
    double b = std::fmod(beta_, two_pi);
    if (b < 0.0) b += two_pi;
    double a = alpha_;
    double g = gamma_;
    if (b > pi) {
        // R(a, b, g) = R(a + pi, 2*pi - b, g - pi) for b in (pi, 2*pi)
        b = two_pi - b;
        a += pi;
        g -= pi;
    }
    alpha = wrap_two_pi(a);
    beta = b;
    gamma = wrap_two_pi(g);
}

Eigen::Matrix3d rotation_matrix(const EulerAngles& ang) {
    using Eigen::AngleAxisd;
    using Eigen::Vector3d;
    return (AngleAxisd(ang.alpha, Vector3d::UnitZ()) * AngleAxisd(ang.beta, Vector3d::UnitY()) *
            AngleAxisd(ang.gamma, Vector3d::UnitZ()))
        .toRotationMatrix();
}

Direction rotate(const Direction& dir, const EulerAngles& ang) {
    return Direction::from_unit(rotation_matrix(ang) * dir.unit());
}

double angle_between(const Direction& a, const Direction& b) {
    const double c = a.unit().dot(b.unit());
    return std::acos(std::clamp(c, -1.0, 1.0));
}

Direction offset_from(const Direction& axis, double theta_off) {
    // Rotate the pole-offset direction so the pole lands on `axis`.
    const Eigen::Vector3d v =
        rotation_matrix(EulerAngles(axis.phi, axis.theta, 0.0)) * Direction(theta_off, 0.0).unit();
    return Direction::from_unit(v);
}

}  // namespace spharray
