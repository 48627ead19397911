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

#ifndef MAJORANA_STATES_H
#define MAJORANA_STATES_H

#include <array>
#include <complex>
#include <string_view>
#include <variant>

#include "majorana/geometry.h"

namespace majorana {

using cdouble = std::complex<double>;

/// Angular tolerance for state equality (conversions accumulate more error
/// than pure vector transforms).
inline constexpr double kStateTolerance = 1e-9;

/// Tolerance on v1.v2 = +-1 for the coherent / anticoherent classes.
inline constexpr double kClassTolerance = 1e-9;

/// A pure spin-1 state as an unordered pair of Majorana vectors.
///
/// The pair is stored in a canonical order (lexicographic on (theta, phi),
/// with thetas closer than 1e-12 treated as equal), so MajoranaState(u, v)
/// and MajoranaState(v, u) are bitwise identical.
class MajoranaState {
   public:
    MajoranaState() = default;
    MajoranaState(const UnitVector &a, const UnitVector &b);

    /// (theta1, phi1 | theta2, phi2), the notation used by the state tables.
    static MajoranaState from_angles(double theta1, double phi1, double theta2, double phi2);

    const UnitVector &v1() const { return v1_; }
    const UnitVector &v2() const { return v2_; }

   private:
    UnitVector v1_;
    UnitVector v2_;
};

/// Angular distance between two unordered pairs (best of both pairings).
double state_distance(const MajoranaState &a, const MajoranaState &b);

bool approx_equal(const MajoranaState &a, const MajoranaState &b, double tol = kStateTolerance);

enum class StateClass { Coherent, Anticoherent, Devious };

std::string_view to_string(StateClass c);

StateClass classify(const MajoranaState &s);

/// A point of CP^2: three complex amplitudes up to a global complex scale.
///
/// Stored normalized, with the first component of modulus above 1e-12 made
/// real and positive. Components below 1e-14 in modulus are flushed to zero
/// so that exact table entries print cleanly.
class Ray {
   public:
    /// (1, 0, 0).
    Ray();

    /// Throws std::invalid_argument if all components vanish.
    Ray(cdouble c0, cdouble c1, cdouble c2);
    explicit Ray(const std::array<cdouble, 3> &c) : Ray(c[0], c[1], c[2]) {}

    const cdouble &operator[](size_t k) const { return c_[k]; }
    const std::array<cdouble, 3> &components() const { return c_; }

   private:
    std::array<cdouble, 3> c_;
};

/// <a|b> with the physics convention (conjugate-linear in the first slot).
cdouble inner(const Ray &a, const Ray &b);

/// Phase-aligned Euclidean distance min_chi |a - e^{i chi} b|; zero iff the
/// rays coincide, sqrt(2) for orthogonal rays.
double ray_distance(const Ray &a, const Ray &b);

bool approx_equal(const Ray &a, const Ray &b, double tol = kStateTolerance);

/// Majorana vectors -> ray (1, (alpha1 + alpha2)/sqrt2, alpha1 alpha2) with
/// alpha = tan(theta/2) e^{i phi}. Evaluated in homogeneous coordinates
/// (cos(theta/2) : e^{i phi} sin(theta/2)), so vectors at the south pole
/// (alpha infinite) need no special case: one of them gives
/// (0, 1, sqrt2 alpha_other) and two give (0, 0, 1).
Ray to_ray(const MajoranaState &s);

/// Inverse of to_ray. alpha1, alpha2 are the roots of
/// c0 z^2 - sqrt2 c1 z + c2 = 0, found with the cancellation-free quadratic
/// formula and kept homogeneous so that c0 = 0 maps to the south pole.
MajoranaState from_ray(const Ray &r);

struct Rotation {
    UnitVector axis;
    double angle = 0.0;
};
struct ReflectXY {};
/// Time reversal sends every Majorana vector to its negative.
struct TimeReversal {};

using StateTransform = std::variant<Rotation, ReflectXY, TimeReversal>;

UnitVector apply(const StateTransform &op, const UnitVector &v);
MajoranaState transform(const MajoranaState &s, const StateTransform &op);

/// Shorthand for a rotation about +z.
MajoranaState rotate_about_z(const MajoranaState &s, double angle);

}  // namespace majorana

#endif
