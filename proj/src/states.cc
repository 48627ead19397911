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

#include "majorana/states.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace majorana {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

bool spherical_less(const UnitVector &a, const UnitVector &b) {
    SphericalAngles sa = a.spherical();
    SphericalAngles sb = b.spherical();
    if (std::abs(sa.theta() - sb.theta()) > 1e-12) {
        return sa.theta() < sb.theta();
    }
    return sa.phi() < sb.phi();
}

struct Spinor {
    cdouble up;
    cdouble down;
};

Spinor spinor_of(const UnitVector &v) {
    SphericalAngles a = v.spherical();
    double half = 0.5 * a.theta();
    return {std::cos(half), std::polar(std::sin(half), a.phi())};
}

// Bloch vector of the (unnormalized) spinor (u, v).
UnitVector bloch_vector(cdouble u, cdouble v) {
    double uu = std::norm(u);
    double vv = std::norm(v);
    double n = uu + vv;
    cdouble xy = 2.0 * std::conj(u) * v / n;
    return UnitVector(xy.real(), xy.imag(), (uu - vv) / n);
}

}  // namespace

MajoranaState::MajoranaState(const UnitVector &a, const UnitVector &b) {
    if (spherical_less(b, a)) {
        v1_ = b;
        v2_ = a;
    } else {
        v1_ = a;
        v2_ = b;
    }
}

MajoranaState MajoranaState::from_angles(double theta1, double phi1, double theta2, double phi2) {
    return MajoranaState(UnitVector::from_spherical(theta1, phi1), UnitVector::from_spherical(theta2, phi2));
}

double state_distance(const MajoranaState &a, const MajoranaState &b) {
    double straight = std::max(angular_distance(a.v1(), b.v1()), angular_distance(a.v2(), b.v2()));
    double crossed = std::max(angular_distance(a.v1(), b.v2()), angular_distance(a.v2(), b.v1()));
    return std::min(straight, crossed);
}

bool approx_equal(const MajoranaState &a, const MajoranaState &b, double tol) {
    return state_distance(a, b) < tol;
}

std::string_view to_string(StateClass c) {
    switch (c) {
        case StateClass::Coherent:
            return "C";
        case StateClass::Anticoherent:
            return "A";
        case StateClass::Devious:
            return "D";
    }
    return "?";
}

StateClass classify(const MajoranaState &s) {
    double d = dot(s.v1(), s.v2());
    if (d > 1 - kClassTolerance) {
        return StateClass::Coherent;
    }
    if (d < -1 + kClassTolerance) {
        return StateClass::Anticoherent;
    }
    return StateClass::Devious;
}

Ray::Ray() : c_{1.0, 0.0, 0.0} {
}

Ray::Ray(cdouble c0, cdouble c1, cdouble c2) : c_{c0, c1, c2} {
    double n = std::sqrt(std::norm(c0) + std::norm(c1) + std::norm(c2));
    if (!std::isfinite(n) || n < 1e-300) {
        throw std::invalid_argument("a ray needs at least one nonzero finite component");
    }
    for (auto &c : c_) {
        c /= n;
        if (std::abs(c) < 1e-14) {
            c = 0.0;
        }
    }
    for (const auto &c : c_) {
        if (std::abs(c) > 1e-12) {
            cdouble phase = std::conj(c) / std::abs(c);
            for (auto &d : c_) {
                d *= phase;
            }
            break;
        }
    }
    // The pivot is real by construction; drop the rounding residue.
    for (auto &c : c_) {
        if (c != 0.0) {
            c = {c.real(), 0.0};
            break;
        }
    }
}

cdouble inner(const Ray &a, const Ray &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

double ray_distance(const Ray &a, const Ray &b) {
    cdouble z = inner(b, a);
    double m = std::abs(z);
    if (m == 0.0) {
        return kSqrt2;
    }
    cdouble phase = z / m;
    double acc = 0;
    for (size_t k = 0; k < 3; k++) {
        acc += std::norm(a[k] - phase * b[k]);
    }
    return std::sqrt(acc);
}

bool approx_equal(const Ray &a, const Ray &b, double tol) {
    return ray_distance(a, b) < tol;
}

Ray to_ray(const MajoranaState &s) {
    Spinor p = spinor_of(s.v1());
    Spinor q = spinor_of(s.v2());
    return Ray(p.up * q.up, (p.up * q.down + p.down * q.up) / kSqrt2, p.down * q.down);
}

MajoranaState from_ray(const Ray &r) {
    // alpha solves a z^2 + b z + c = 0; each root is carried as (u : v), z = v / u.
    cdouble a = r[0];
    cdouble b = -kSqrt2 * r[1];
    cdouble c = r[2];
    UnitVector south(0, 0, -1);
    if (std::abs(a) < 1e-15 && std::abs(b) < 1e-15) {
        return MajoranaState(south, south);
    }
    cdouble sq = std::sqrt(b * b - 4.0 * a * c);
    if ((std::conj(b) * sq).real() < 0) {
        sq = -sq;
    }
    cdouble q = -0.5 * (b + sq);
    UnitVector first = bloch_vector(a, q);
    // Second root as c/q or (-b - q)/a, whichever representation is larger.
    cdouble alt = -b - q;
    UnitVector second = (std::norm(q) + std::norm(c) >= std::norm(a) + std::norm(alt)) ? bloch_vector(q, c)
                                                                                     : bloch_vector(a, alt);
    return MajoranaState(first, second);
}

UnitVector apply(const StateTransform &op, const UnitVector &v) {
    return std::visit(
        [&](const auto &t) -> UnitVector {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Rotation>) {
                return rotate_about_axis(v, t.axis, t.angle);
            } else if constexpr (std::is_same_v<T, ReflectXY>) {
                return reflect_xy(v);
            } else {
                return invert(v);
            }
        },
        op);
}

MajoranaState transform(const MajoranaState &s, const StateTransform &op) {
    return MajoranaState(apply(op, s.v1()), apply(op, s.v2()));
}

MajoranaState rotate_about_z(const MajoranaState &s, double angle) {
    return MajoranaState(rotate_about_z(s.v1(), angle), rotate_about_z(s.v2(), angle));
}

}  // namespace majorana
