#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace spharray {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double four_pi = 4.0 * pi;

/// Direction on the unit sphere: colatitude theta in [0, pi],
/// azimuth phi in [0, 2*pi). Constructed values are canonicalized.
struct Direction {
    double theta = 0.0;
    double phi = 0.0;

    Direction() = default;
    Direction(double theta_, double phi_);

    Eigen::Vector3d unit() const;
    static Direction from_unit(const Eigen::Vector3d& v);
};

/// z-y-z Euler angles in radians, beta canonicalized into [0, pi],
/// alpha/gamma into [0, 2*pi). R = Rz(alpha) * Ry(beta) * Rz(gamma).
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    EulerAngles() = default;
    EulerAngles(double alpha_, double beta_, double gamma_);
};

Eigen::Matrix3d rotation_matrix(const EulerAngles& ang);

/// Active rotation of a direction by R(alpha, beta, gamma).
Direction rotate(const Direction& dir, const EulerAngles& ang);

/// Great-circle angle between two directions, in [0, pi].
double angle_between(const Direction& a, const Direction& b);

/// Direction at angle `theta_off` away from `axis` (azimuth of the offset
/// measured around the axis is arbitrary but deterministic).
Direction offset_from(const Direction& axis, double theta_off);

}  // namespace spharray
