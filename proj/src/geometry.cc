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

#include "majorana/geometry.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace majorana {

double wrap_two_pi(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round back up to exactly 2pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

SphericalAngles::SphericalAngles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::domain_error("spherical angles must be finite");
    }
    if (theta < -kUnitTolerance || theta > kPi + kUnitTolerance) {
        throw std::domain_error("polar angle out of [0, pi]: " + std::to_string(theta));
    }
    theta_ = std::clamp(theta, 0.0, kPi);
    phi_ = std::sin(theta_) < kPoleTolerance ? 0.0 : wrap_two_pi(phi);
}

UnitVector::UnitVector(double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(n) || n < 1e-300) {
        throw std::domain_error("cannot normalize a zero or non-finite vector");
    }
    x_ = x / n;
    y_ = y / n;
    z_ = z / n;
}

UnitVector UnitVector::from_spherical(const SphericalAngles &a) {
    double s = std::sin(a.theta());
    return UnitVector(Raw{}, s * std::cos(a.phi()), s * std::sin(a.phi()), std::cos(a.theta()));
}

SphericalAngles UnitVector::spherical() const {
    double rho = std::hypot(x_, y_);
    double theta = std::atan2(rho, z_);
    double phi = rho < kPoleTolerance ? 0.0 : std::atan2(y_, x_);
    return SphericalAngles(theta, phi);
}

UnitVector UnitVector::operator-() const {
    return UnitVector(Raw{}, -x_, -y_, -z_);
}

double dot(const UnitVector &a, const UnitVector &b) {
    return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

double angular_distance(const UnitVector &a, const UnitVector &b) {
    double cx = a.y() * b.z() - a.z() * b.y();
    double cy = a.z() * b.x() - a.x() * b.z();
    double cz = a.x() * b.y() - a.y() * b.x();
    return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot(a, b));
}

UnitVector unit_from_spherical(const SphericalAngles &a) {
    return UnitVector::from_spherical(a);
}

UnitVector rotate_about_z(const UnitVector &v, double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    return UnitVector(c * v.x() - s * v.y(), s * v.x() + c * v.y(), v.z());
}

UnitVector rotate_about_axis(const UnitVector &v, const UnitVector &axis, double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    double kv = dot(axis, v);
    double cx = axis.y() * v.z() - axis.z() * v.y();
    double cy = axis.z() * v.x() - axis.x() * v.z();
    double cz = axis.x() * v.y() - axis.y() * v.x();
    return UnitVector(
        v.x() * c + cx * s + axis.x() * kv * (1 - c),
        v.y() * c + cy * s + axis.y() * kv * (1 - c),
        v.z() * c + cz * s + axis.z() * kv * (1 - c));
}

UnitVector reflect_xy(const UnitVector &v) {
    return UnitVector(v.x(), v.y(), -v.z());
}

UnitVector invert(const UnitVector &v) {
    return -v;
}

}  // namespace majorana
