#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spharray/direction.hpp"
#include "spharray/radial.hpp"

namespace spharray {

struct MicrophonePosition {
    double r = 0.0;  // meters, > 0
    Direction dir;
};

/// A microphone layout plus its boundary model.
struct ArrayGeometry {
    std::vector<MicrophonePosition> mics;
    BoundaryModel boundary = OpenPressure{};

    int size() const { return static_cast<int>(mics.size()); }
};

/// Checks geometry invariants: positive finite radii, mic count >= (N+1)^2
/// for the given order, pairwise separation > 1e-9 m, rigid-sphere radii
/// >= r0. Throws std::invalid_argument on violation.
void validate_geometry(const ArrayGeometry& geom, int order);

enum class SamplingScheme { equal_angle, gaussian, near_uniform };

/// Directions (and quadrature weights where the scheme defines them) for the
/// standard single-sphere samplings:
///   equal_angle  : 2(N+1) x 2(N+1) offset grid, colatitude weights solved for
///                  Legendre exactness to degree 2N+1
///   gaussian     : (N+1) Gauss-Legendre colatitudes x 2(N+1) azimuths
///   near_uniform : generalized spiral points, M >= (N+1)^2 (no weights);
///                  mic_count overrides the default point count
struct SphereSampling {
    std::vector<Direction> dirs;
    std::vector<double> weights;  // empty for near_uniform
};

SphereSampling sphere_sampling(SamplingScheme scheme, int order, int mic_count = 0);

/// Geometry with all microphones of `sampling` placed at radius r.
ArrayGeometry make_spherical_array(const SphereSampling& sampling, double r,
                                   const BoundaryModel& boundary);

/// Geometry file format (version 1, plain text, SI units, radians):
///   spharray-geometry v1
///   boundary <open|rigid r0|cardioid|dual alpha|free>
///   mics <M>
///   <r theta phi>   (M lines, 17 significant digits on write)
ArrayGeometry load_geometry(const std::string& path);
ArrayGeometry read_geometry(std::istream& in);
void save_geometry(const ArrayGeometry& geom, const std::string& path);
void write_geometry(const ArrayGeometry& geom, std::ostream& out);

}  // namespace spharray
