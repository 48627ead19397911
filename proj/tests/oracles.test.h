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

// Reference computations used only by the tests. None of them call into the
// library's numerics: states are rebuilt from spin coherent states, overlaps
// come from explicit vectors, polynomial roots from companion matrices.

#ifndef MAJORANA_TESTS_ORACLES_TEST_H
#define MAJORANA_TESTS_ORACLES_TEST_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "majorana/states.h"

namespace oracle {

using cd = std::complex<double>;
using Vec3c = Eigen::Vector3cd;

inline constexpr double kPi = 3.14159265358979323846;

inline const cd kOmega = std::polar(1.0, 2 * kPi / 3);

/// omega^(k/2) = exp(i pi k / 3).
inline cd omega_half(int k) {
    return std::polar(1.0, kPi * k / 3);
}

/// Spin-1 coherent state along (theta, phi) in the |+1>, |0>, |-1> basis.
inline Vec3c coherent(double theta, double phi) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return Vec3c(c * c, std::sqrt(2.0) * c * s * std::polar(1.0, phi), s * s * std::polar(1.0, 2 * phi));
}

inline Vec3c coherent(const majorana::UnitVector &u) {
    double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
    double phi = std::atan2(u.y(), u.x());
    return coherent(theta, phi);
}

/// The state whose Majorana stars are u1 and u2: it is orthogonal to the
/// coherent states pointing away from both stars, so for distinct stars it
/// is the cross product of those two coherent vectors. Eigen conjugates
/// complex cross products, which is what Hermitian orthogonality needs.
inline Vec3c star_state(const majorana::UnitVector &u1, const majorana::UnitVector &u2) {
    Vec3c a = coherent(-u1);
    Vec3c b = coherent(-u2);
    Vec3c v = a.cross(b);
    if (v.norm() < 1e-6) {
        // Coincident stars: the coherent state itself.
        v = coherent(u1);
    }
    return v.normalized();
}

inline Vec3c star_state(const majorana::MajoranaState &s) {
    return star_state(s.v1(), s.v2());
}

inline Vec3c from_ray(const majorana::Ray &r) {
    return Vec3c(r[0], r[1], r[2]).normalized();
}

inline double transition(const Vec3c &a, const Vec3c &b) {
    return std::norm(a.normalized().dot(b.normalized()));
}

/// 1 - |<a|b>| for normalized vectors; zero iff projectively equal.
inline double projective_gap(const Vec3c &a, const Vec3c &b) {
    return 1.0 - std::abs(a.normalized().dot(b.normalized()));
}

inline Eigen::Matrix3cd projector(const Vec3c &v) {
    Vec3c n = v.normalized();
    return n * n.adjoint();
}

/// Tr(rho_a rho_b rho_c) from explicit density matrices.
inline cd bargmann(const Vec3c &a, const Vec3c &b, const Vec3c &c) {
    return (projector(a) * projector(b) * projector(c)).trace();
}

/// Roots of sum c[k] x^k via the eigenvalues of the companion matrix.
inline std::vector<cd> companion_roots(const std::vector<double> &c) {
    int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; i++) {
        m(i, i - 1) = 1;
    }
    for (int i = 0; i < n; i++) {
        m(i, n - 1) = -c[i] / c[n];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    std::vector<cd> out;
    for (int i = 0; i < n; i++) {
        out.push_back(es.eigenvalues()[i]);
    }
    return out;
}

/// Hand-rolled generators. Gaussian sampling keeps them independent of the
/// library's own sampler.
class Gen {
   public:
    explicit Gen(uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    majorana::UnitVector unit() {
        std::normal_distribution<double> n;
        while (true) {
            double x = n(rng_), y = n(rng_), z = n(rng_);
            if (x * x + y * y + z * z > 1e-6) {
                return majorana::UnitVector(x, y, z);
            }
        }
    }

    majorana::MajoranaState state() {
        return majorana::MajoranaState(unit(), unit());
    }

    /// Occasionally returns poles, coincident and antipodal stars.
    majorana::MajoranaState edge_state() {
        switch (integer(0, 5)) {
            case 0:
                return majorana::MajoranaState(majorana::UnitVector(0, 0, 1), unit());
            case 1:
                return majorana::MajoranaState(majorana::UnitVector(0, 0, -1), unit());
            case 2: {
                auto u = unit();
                return majorana::MajoranaState(u, u);
            }
            case 3: {
                auto u = unit();
                return majorana::MajoranaState(u, -u);
            }
            default:
                return state();
        }
    }

    Vec3c vector() {
        std::normal_distribution<double> n;
        Vec3c v;
        for (int k = 0; k < 3; k++) {
            v[k] = cd(n(rng_), n(rng_));
        }
        return v.normalized();
    }

    std::mt19937_64 &engine() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

}  // namespace oracle

#endif
