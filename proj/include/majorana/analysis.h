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

#ifndef MAJORANA_ANALYSIS_H
#define MAJORANA_ANALYSIS_H

#include <complex>
#include <vector>

#include "majorana/mub.h"
#include "majorana/sic.h"
#include "majorana/states.h"

namespace majorana {

inline constexpr double kPhaseMergeTolerance = 1e-7;
inline constexpr double kHesseThreshold = 1e-10;

/// Tr(rho1 rho2 rho3) = <1|2><2|3><3|1> for pure states.
std::complex<double> bargmann_invariant(const Ray &r1, const Ray &r2, const Ray &r3);

/// |arg| of the Bargmann invariant, in [0, pi]. Throws std::domain_error when
/// the invariant is too small (|product| <= 1e-12) for its phase to mean anything.
double bargmann_phase(const Ray &r1, const Ray &r2, const Ray &r3);
double bargmann_phase(const MajoranaState &s1, const MajoranaState &s2, const MajoranaState &s3);

enum class PhaseConvention {
    /// |arg| in [0, pi]; triad orientation is ignored.
    Absolute,
    /// arg in (-pi, pi] for the triad taken in increasing index order.
    Signed,
};

struct PhaseBin {
    double phase = 0;
    int count = 0;
};

struct PhaseCensus {
    /// Ascending by phase.
    std::vector<PhaseBin> bins;
    int total = 0;

    /// Count in the bin within tol of `phase`, or 0.
    int count_at(double phase, double tol = kPhaseMergeTolerance) const;
};

/// Histogram of Bargmann phases over all triads i < j < k. Phases closer than
/// merge_tol fall in one bin, whose key is the mean of its members.
PhaseCensus phase_census(const std::vector<Ray> &rays, PhaseConvention convention = PhaseConvention::Absolute,
                         double merge_tol = kPhaseMergeTolerance);
PhaseCensus phase_census(const Sic &s, PhaseConvention convention = PhaseConvention::Absolute,
                         double merge_tol = kPhaseMergeTolerance);

struct CensusDifference {
    double phase = 0;
    int count_a = 0;
    int count_b = 0;
};

struct InequivalenceResult {
    bool inequivalent = false;
    PhaseCensus census_a;
    PhaseCensus census_b;
    /// Bins whose counts differ.
    std::vector<CensusDifference> differences;
};

/// Two SICs related by a unitary have the same absolute phase census, so any
/// differing bin proves them inequivalent.
InequivalenceResult inequivalence_test(const Sic &a, const Sic &b);

struct HesseConfiguration {
    /// The maximal MUB mapped by the equivalence unitary, basis by basis.
    std::vector<RayBasis> mub;
    /// build_sic1(pi, pi) as rays.
    std::vector<Ray> sic;
    /// For MUB state 3 * basis + index: the SIC states it is orthogonal to.
    std::vector<std::vector<int>> mub_partners;
    /// For each SIC state: the MUB states (flat index) it is orthogonal to.
    std::vector<std::vector<int>> sic_partners;
    int total_pairs = 0;
    /// Every SIC state has exactly one orthogonal partner in each basis.
    bool one_per_basis = false;
};

HesseConfiguration hesse_configuration(double threshold = kHesseThreshold);

struct SpinHalfReport {
    /// Max |overlap - 1/2| between states of different octahedron bases.
    double octahedron_cross_error = 0;
    /// Max overlap inside an octahedron basis (antipodal pairs).
    double octahedron_orthogonality = 0;
    /// Max |overlap - 1/3| between tetrahedron vertices.
    double tetrahedron_error = 0;
    /// min over unit v of |(v.x, v.y, v.z)|; a fourth basis would need 0.
    double fourth_basis_gap = 0;
    /// Least-squares residual of v.t_i = -1/3 over the four vertices; a fifth
    /// equiangular vector would need 0.
    double fifth_vertex_gap = 0;
};

SpinHalfReport spin_half_structures();

}  // namespace majorana

#endif
