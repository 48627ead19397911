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

#include "majorana/analysis.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace majorana {

namespace {

using cdouble = std::complex<double>;

double checked_arg(cdouble b) {
    if (!(std::abs(b) > 1e-12)) {
        throw std::domain_error("degenerate triad: Bargmann invariant vanishes");
    }
    return std::arg(b);
}

double signed_phase(cdouble b) {
    double a = checked_arg(b);
    // Fold -pi onto pi so the signed range is (-pi, pi].
    return a <= -kPi + kPhaseMergeTolerance ? kPi : a;
}

}  // namespace

cdouble bargmann_invariant(const Ray &r1, const Ray &r2, const Ray &r3) {
    return inner(r1, r2) * inner(r2, r3) * inner(r3, r1);
}

double bargmann_phase(const Ray &r1, const Ray &r2, const Ray &r3) {
    return std::abs(checked_arg(bargmann_invariant(r1, r2, r3)));
}

double bargmann_phase(const MajoranaState &s1, const MajoranaState &s2, const MajoranaState &s3) {
    return bargmann_phase(to_ray(s1), to_ray(s2), to_ray(s3));
}

int PhaseCensus::count_at(double phase, double tol) const {
    for (const auto &b : bins) {
        if (std::abs(b.phase - phase) < tol) {
            return b.count;
        }
    }
    return 0;
}

PhaseCensus phase_census(const std::vector<Ray> &rays, PhaseConvention convention, double merge_tol) {
    std::vector<double> phases;
    const size_t n = rays.size();
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            for (size_t k = j + 1; k < n; k++) {
                cdouble b = bargmann_invariant(rays[i], rays[j], rays[k]);
                phases.push_back(convention == PhaseConvention::Absolute ? std::abs(checked_arg(b)) : signed_phase(b));
            }
        }
    }
    std::sort(phases.begin(), phases.end());
    PhaseCensus out;
    out.total = static_cast<int>(phases.size());
    size_t start = 0;
    while (start < phases.size()) {
        size_t end = start + 1;
        double sum = phases[start];
        while (end < phases.size() && phases[end] - phases[end - 1] < merge_tol) {
            sum += phases[end];
            end++;
        }
        out.bins.push_back({sum / static_cast<double>(end - start), static_cast<int>(end - start)});
        start = end;
    }
    return out;
}

PhaseCensus phase_census(const Sic &s, PhaseConvention convention, double merge_tol) {
    return phase_census(to_rays(s), convention, merge_tol);
}

InequivalenceResult inequivalence_test(const Sic &a, const Sic &b) {
    InequivalenceResult out;
    out.census_a = phase_census(a);
    out.census_b = phase_census(b);
    std::vector<double> keys;
    for (const auto *c : {&out.census_a, &out.census_b}) {
        for (const auto &bin : c->bins) {
            bool seen = std::any_of(keys.begin(), keys.end(),
                                    [&](double k) { return std::abs(k - bin.phase) < kPhaseMergeTolerance; });
            if (!seen) {
                keys.push_back(bin.phase);
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    for (double k : keys) {
        int ca = out.census_a.count_at(k);
        int cb = out.census_b.count_at(k);
        if (ca != cb) {
            out.differences.push_back({k, ca, cb});
        }
    }
    out.inequivalent = !out.differences.empty();
    return out;
}

HesseConfiguration hesse_configuration(double threshold) {
    HesseConfiguration out;
    EquivalenceReport eq = equivalence_unitary();
    MubSet m = build_maximal_mub();
    for (const auto &b : m.bases) {
        RayBasis rb;
        for (int k = 0; k < 3; k++) {
            rb[k] = apply_diagonal(eq.diagonal, to_ray(b[k]));
        }
        out.mub.push_back(rb);
    }
    out.sic = to_rays(build_sic1(kPi, kPi));
    const int n_mub = static_cast<int>(out.mub.size()) * 3;
    out.mub_partners.assign(n_mub, {});
    out.sic_partners.assign(out.sic.size(), {});
    for (int f = 0; f < n_mub; f++) {
        const Ray &r = out.mub[f / 3][f % 3];
        for (int s = 0; s < static_cast<int>(out.sic.size()); s++) {
            if (ray_overlap(r, out.sic[s]) < threshold) {
                out.mub_partners[f].push_back(s);
                out.sic_partners[s].push_back(f);
                out.total_pairs++;
            }
        }
    }
    out.one_per_basis = true;
    for (const auto &partners : out.sic_partners) {
        std::vector<int> per_basis(out.mub.size(), 0);
        for (int f : partners) {
            per_basis[f / 3]++;
        }
        out.one_per_basis =
            out.one_per_basis && std::all_of(per_basis.begin(), per_basis.end(), [](int c) { return c == 1; });
    }
    return out;
}

SpinHalfReport spin_half_structures() {
    SpinHalfReport out;
    const UnitVector axes[3] = {UnitVector(0, 0, 1), UnitVector(1, 0, 0), UnitVector(0, 1, 0)};
    for (int a = 0; a < 3; a++) {
        out.octahedron_orthogonality = std::max(out.octahedron_orthogonality, spin_half_overlap(axes[a], -axes[a]));
        for (int b = a + 1; b < 3; b++) {
            for (const auto &u : {axes[a], -axes[a]}) {
                for (const auto &v : {axes[b], -axes[b]}) {
                    out.octahedron_cross_error = std::max(out.octahedron_cross_error, std::abs(spin_half_overlap(u, v) - 0.5));
                }
            }
        }
    }
    Eigen::Matrix3d gram = Eigen::Matrix3d::Zero();
    for (const auto &a : axes) {
        Eigen::Vector3d v(a.x(), a.y(), a.z());
        gram += v * v.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(gram);
    out.fourth_basis_gap = std::sqrt(std::max(0.0, eig.eigenvalues().minCoeff()));

    const UnitVector tet[4] = {UnitVector(1, 1, 1), UnitVector(1, -1, -1), UnitVector(-1, 1, -1), UnitVector(-1, -1, 1)};
    Eigen::Matrix<double, 4, 3> t;
    for (int i = 0; i < 4; i++) {
        t.row(i) << tet[i].x(), tet[i].y(), tet[i].z();
        for (int j = i + 1; j < 4; j++) {
            out.tetrahedron_error = std::max(out.tetrahedron_error, std::abs(spin_half_overlap(tet[i], tet[j]) - 1.0 / 3.0));
        }
    }
    Eigen::Vector4d rhs = Eigen::Vector4d::Constant(-1.0 / 3.0);
    Eigen::Vector3d v = t.colPivHouseholderQr().solve(rhs);
    out.fifth_vertex_gap = (t * v - rhs).norm();
    return out;
}

}  // namespace majorana
