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

#ifndef MAJORANA_SIC_H
#define MAJORANA_SIC_H

#include <array>
#include <string>
#include <vector>

#include "majorana/overlap.h"
#include "majorana/states.h"

namespace majorana {

inline constexpr double kEtriadTolerance = 1e-10;

/// First member (theta1, phi1 | theta2, phi2) of an equiangular triad. The
/// other two members are its rotations by 2pi/3 and 4pi/3 about z.
struct EtriadSeed {
    double theta1 = 0;
    double phi1 = 0;
    double theta2 = 0;
    double phi2 = 0;
};

/// Three states related by 2pi/3 rotations about z, pairwise equiangular.
using Etriad = std::array<MajoranaState, 3>;

/// Nine states. Equiangularity is checked by verify_sic, not enforced.
using Sic = std::vector<MajoranaState>;

/// Left-hand side of the general etriad condition, with D = phi2 - phi1:
///   sin^2 t1 sin^2 t2 cos^2 D - 2 sin t1 sin t2 (1 + 3 cos t1 cos t2) cos D
///   - 3 + 4 cos^2 t1 + 4 cos^2 t2 + 6 cos t1 cos t2 + 5 cos^2 t1 cos^2 t2.
/// Equals (4/3)(3 + v1.v2)^2 (overlap - 1/4) for any two members.
double etriad_residual(const EtriadSeed &seed);

/// The three rotated members, without any check.
Etriad etriad_states(const EtriadSeed &seed);

/// Max |overlap - 1/4| over the three member pairs.
double etriad_overlap_gap(const EtriadSeed &seed);

/// Throws std::invalid_argument (quoting the residual) unless
/// |etriad_residual(seed)| < kEtriadTolerance.
Etriad etriad_from_seed(const EtriadSeed &seed);

struct CatalogEntry {
    std::string label;
    std::string geometry;
    /// The seed adopted after residual testing.
    EtriadSeed seed;
    double residual = 0;
    /// The seed as tabulated, which for rows C and D3 differs from the one
    /// derived in the text; only one of the two satisfies the condition.
    EtriadSeed table_seed;
    double table_residual = 0;
    /// The competing seed from the derivation, when there is one.
    bool has_alternative = false;
    EtriadSeed alternative_seed;
    double alternative_residual = 0;
};

/// Rows C, A1, A2, D1 (phi2 = 0), D2, D3.
std::vector<CatalogEntry> catalog_etriads();

/// A1 etriad, D1 etriad with its lower vectors at azimuth phi_a + 2pi k/3,
/// inverted D1 etriad with its upper vectors at phi_b + 2pi k/3.
Sic build_sic1(double phi_a, double phi_b);

/// A2 etriad, D2 etriad, inverted D2 etriad.
Sic build_sic2();

std::vector<Ray> to_rays(const std::vector<MajoranaState> &states);

/// X^a Z^b |fiducial> for a, b in {0, 1, 2}, a-major order, canonicalized.
std::vector<Ray> weyl_heisenberg_orbit(const Ray &fiducial);

/// Number of projectively distinct rays at tolerance tol.
int count_distinct_rays(const std::vector<Ray> &rays, double tol = kStateTolerance);

struct SicMatch {
    bool matched = false;
    /// assignment[i] = index in b matched to a[i], or -1.
    std::vector<int> assignment;
    double max_distance = 0;
};

/// Greedy bipartite matching of two ray sets under ray_distance < tol.
SicMatch match_sic(const std::vector<Ray> &a, const std::vector<Ray> &b, double tol = kStateTolerance);
SicMatch match_sic(const Sic &a, const std::vector<Ray> &b, double tol = kStateTolerance);

struct SicReport {
    size_t size = 0;
    bool cardinality_ok = false;
    /// Max |overlap - 1/4| over all pairs.
    double max_overlap_error = 0;
    /// Max entry of |sum of projectors - 3 I|.
    double projector_sum_error = 0;
    bool passed = false;
};

SicReport verify_sic(const Sic &s, double tol);
SicReport verify_sic(const std::vector<Ray> &rays, double tol);

}  // namespace majorana

#endif
