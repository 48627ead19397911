// Copyright 2026 The Majorana Qutrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAJORANA_GEOMETRY_H
#define MAJORANA_GEOMETRY_H

#include <numbers>

namespace majorana {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance on |v| - 1 after construction or any transform.
inline constexpr double kUnitTolerance = 1e-12;

/// Below this sin(theta) the azimuth is treated as undefined and set to 0.
inline constexpr double kPoleTolerance = 1e-12;

/// Reduces an angle into [0, 2pi).
double wrap_two_pi(double angle);

/// Polar/azimuthal angles of a point on the unit sphere, in radians.
///
/// Always canonical: theta in [0, pi], phi in [0, 2pi), and phi == 0 at the
/// poles. Construction throws std::domain_error when theta is outside
/// [0, pi] by more than kUnitTolerance.
class SphericalAngles {
   public:
    SphericalAngles() = default;
    SphericalAngles(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }

   private:
    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// A point on S^2. The components are renormalized on construction.
class UnitVector {
   public:
    /// The north pole (0, 0, 1).
    UnitVector() = default;

    /// Throws std::domain_error on a (near) zero or non-finite vector.
    UnitVector(double x, double y, double z);

    static UnitVector from_spherical(const SphericalAngles &a);
    static UnitVector from_spherical(double theta, double phi) {
        return from_spherical(SphericalAngles(theta, phi));
    }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    SphericalAngles spherical() const;

    UnitVector operator-() const;

   private:
    struct Raw {};
    UnitVector(Raw, double x, double y, double z) : x_(x), y_(y), z_(z) {}

    double x_ = 0.0;
    double y_ = 0.0;
    double z_ = 1.0;
};

double dot(const UnitVector &a, const UnitVector &b);

/// Angle between two unit vectors, accurate for nearly (anti)parallel pairs.
double angular_distance(const UnitVector &a, const UnitVector &b);

UnitVector unit_from_spherical(const SphericalAngles &a);

/// Right-handed rotation about +z.
UnitVector rotate_about_z(const UnitVector &v, double angle);

/// Rodrigues rotation about an arbitrary unit axis.
UnitVector rotate_about_axis(const UnitVector &v, const UnitVector &axis, double angle);

/// (x, y, z) -> (x, y, -z).
UnitVector reflect_xy(const UnitVector &v);

/// v -> -v.
UnitVector invert(const UnitVector &v);

}  // namespace majorana

#endif
