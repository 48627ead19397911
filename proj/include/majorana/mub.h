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

#ifndef MAJORANA_MUB_H
#define MAJORANA_MUB_H

#include <array>
#include <vector>

#include <Eigen/Core>

#include "majorana/overlap.h"
#include "majorana/poly.h"
#include "majorana/states.h"

namespace majorana {

/// Three states; orthonormal when built by this module.
using Basis = std::array<MajoranaState, 3>;
using RayBasis = std::array<Ray, 3>;

/// A collection of bases, expected to be pairwise unbiased. verify_mub checks.
struct MubSet {
    std::vector<Basis> bases;

    size_t size() const { return bases.size(); }
    std::vector<MajoranaState> states() const;
};

/// The standard angular momentum basis along z: C-state up, A-state, C-state down.
Basis cac_basis();

struct SpecialAngles {
    double theta_d = 0;
    double phi_d = 0;
    double phi_h = 0;
    double theta_i = 0;
    double phi_i = 0;
    double phi_r = 0;
};

struct SpecialAngleResiduals {
    /// t^2 + 10 t - 3 at t = cos^2 theta_d.
    double theta_d_poly = 0;
    /// 3 t^2 + 6 t - 1 at t = cos^2 theta_i.
    double theta_i_poly = 0;
    /// cos(phi) + 2 cot^2(theta) for the d and i pairs.
    double phi_d_def = 0;
    double phi_i_def = 0;
    /// Quartic in cos(h) and the trigonometric unbiasedness equation it came
    /// from, both at h = phi_h.
    double phi_h_quartic = 0;
    double phi_h_equation = 0;
    /// phi_h - (phi_d / 2 + 3 pi / 4).
    double phi_h_identity = 0;
    /// phi_h against 2 pi - arccos(-sqrt((1 + sqrt(sqrt7 / 2 - 1)) / 2)).
    double phi_h_closed_form = 0;
    /// phi_r - (phi_d / 2 - pi / 3).
    double phi_r_identity = 0;
};

struct SpecialAnglesSolution {
    SpecialAngles angles;
    SpecialAngleResiduals residuals;
    /// Coefficients of the phi_h quartic in x = cos(h), and its four roots.
    Quartic phi_h_quartic{};
    std::array<std::complex<double>, 4> phi_h_quartic_roots{};
};

/// Solves every special angle from its defining polynomial.
///
/// theta_d and theta_i come from quadratics in t = cos^2(theta). phi_h is the
/// azimuth of the pi/2-cone basis that makes it unbiased to the theta_d basis:
/// that condition is a trigonometric equation in h which, squared, becomes a
/// quartic in cos(h) with one double root. The double root is taken from the
/// general quartic solver, polished, and its sign of sin(h) fixed by
/// substituting back.
SpecialAnglesSolution solve_special_angles();

/// Cached result of solve_special_angles().
const SpecialAngles &special_angles();

/// Lower end arccos(1/sqrt3) of the double-cone polar range.
double double_cone_min_theta();

/// A state unbiased to every CAC state: v1 at polar angle theta, v2 at
/// pi - theta, with internal azimuth phi = arccos(-2 cot^2 theta) in (pi/2, pi].
/// `psi` rotates the whole state about z. With `mirror` set, v2 sits at
/// azimuth psi - phi instead of psi + phi (the other sheet of solutions).
struct DoubleConeParams {
    double theta = kPi / 2;
    double psi = 0;
    bool mirror = false;
};

/// Internal azimuth arccos(-2 cot^2 theta). Throws std::domain_error outside
/// the double-cone range.
double double_cone_phi(double theta);

MajoranaState double_cone_state(const DoubleConeParams &p);

/// The double-cone state and its rotations by 2pi/3 and 4pi/3 about z.
Basis double_cone_basis(const DoubleConeParams &p);

/// Conditions for a double-cone state to be identical, orthogonal or unbiased
/// to a transformed copy of itself, as polynomials in cos^2(theta).
struct RelationPolynomials {
    double identical = 0;
    double orthogonal = 0;
    double unbiased = 0;
};

/// Against its reflection in the x-y plane:
/// c^2 (1 + c^2), c^4 - 26 c^2 + 9, c^4 + 10 c^2 - 3 with c = cos(theta).
RelationPolynomials reflected_relation_polynomials(double theta);

/// Against its time reversal:
/// c^2 - 1/3, 9 c^4 + 6 c^2 + 1, 3 c^4 + 6 c^2 - 1.
RelationPolynomials inverted_relation_polynomials(double theta);

struct PolynomialRootScan {
    int steps = 0;
    double reflected_min_abs = 0;
    double inverted_min_abs = 0;
    /// Sign changes seen along the sweep (zero means no crossing root).
    int reflected_sign_changes = 0;
    int inverted_sign_changes = 0;
};

/// Samples both orthogonality polynomials over the closed double-cone range.
PolynomialRootScan scan_orthogonality_polynomials(int steps);

struct RotationSweepReport {
    int steps = 0;
    int orthogonal_hits = 0;
    int unbiased_hits = 0;
    /// Smallest |overlap - 0| and |overlap - 1/3| over the sweep.
    double min_orthogonal_gap = 0;
    double min_unbiased_gap = 0;
};

/// Sweeps theta over the open double-cone range and compares each
/// double-cone state with its rotation by pi about z. Requires
/// theta_steps >= 1000; throws std::invalid_argument otherwise.
RotationSweepReport rotated_pi_ruled_out(int theta_steps);

/// The complete set of four bases: CAC, the theta_d double-cone basis, its
/// x-y reflection, and the pi/2-cone basis at azimuth phi_h.
MubSet build_maximal_mub();

/// CAC, the theta_i double-cone basis and its time reversal.
MubSet build_unextendible_triple();

/// Rays of build_unextendible_triple() after a clockwise rotation about z by
/// phi_i / 2 - pi / 6.
std::vector<RayBasis> unextendible_triple_rays();

/// Generators of the qutrit Pauli group on |0>, |1>, |2>.
Eigen::Matrix3cd pauli_z();
Eigen::Matrix3cd pauli_x();

/// Eigenbases of Z, W = X Z^2, Y = X Z, X, in that order. Each basis is
/// computed by diagonalizing the operator; states are sorted by the argument
/// of their eigenvalue in [0, 2pi).
std::vector<RayBasis> build_pauli_mub();

struct RayMatch {
    int source_basis = 0;
    int source_state = 0;
    int target_basis = 0;
    int target_state = 0;
    double distance = 0;
};

struct EquivalenceReport {
    /// Diagonal of U = diag(e^{i phi_r}, 1, e^{-i phi_r}).
    std::array<std::complex<double>, 3> diagonal{};
    double unitarity_error = 0;
    std::vector<RayMatch> matches;
    double max_distance = 0;
    /// Every maximal-MUB basis maps onto one Pauli basis and all 12 rays match.
    bool matched = false;
};

Ray apply_diagonal(const std::array<std::complex<double>, 3> &diagonal, const Ray &r);

/// Applies U to the rays of build_maximal_mub() and matches each one to a ray
/// of build_pauli_mub() within `tol`.
EquivalenceReport equivalence_unitary(double tol = kStateTolerance);

struct MubReport {
    int bases = 0;
    double max_orthogonality = 0;
    double max_normalization = 0;
    double max_cross = 0;
    bool passed = false;
};

MubReport verify_mub(const MubSet &m, double tol);

struct ExtensionSearchOptions {
    /// Grid points along theta; psi gets twice as many.
    int grid = 720;
    double refine_tol = 1e-10;
    double near_miss_tol = 1e-6;
    /// Grid minima above this cost are not polished.
    double seed_cost = 0.05;
    int max_candidates = 4096;
};

struct ExtensionHit {
    DoubleConeParams params;
    MajoranaState state;
    double residual = 0;
};

struct ExtensionSearchResult {
    std::vector<ExtensionHit> hits;
    std::vector<ExtensionHit> near_misses;
    double min_grid_cost = 0;
    int candidates = 0;
};

/// Looks for single states unbiased to every state of `m`.
///
/// `m` must contain the CAC basis plus at least one other basis. Anything
/// unbiased to CAC is a double-cone state, so the search runs over (theta, psi)
/// on both sheets. Cost is max |overlap - 1/3| over the non-CAC states. Grid
/// local minima are polished by Gauss-Newton; hits need a polished cost below
/// refine_tol. Hits come back deduplicated and sorted by (theta, psi).
ExtensionSearchResult search_unbiased_extension(const MubSet &m, const ExtensionSearchOptions &options = {});

}  // namespace majorana

#endif
