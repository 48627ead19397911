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

#include "majorana/sic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Core>

#include "majorana/mub.h"

namespace majorana {

double etriad_residual(const EtriadSeed &seed) {
    double c1 = std::cos(seed.theta1);
    double c2 = std::cos(seed.theta2);
    double s1 = std::sin(seed.theta1);
    double s2 = std::sin(seed.theta2);
    double cd = std::cos(seed.phi2 - seed.phi1);
    return s1 * s1 * s2 * s2 * cd * cd - 2 * s1 * s2 * (1 + 3 * c1 * c2) * cd - 3 + 4 * c1 * c1 + 4 * c2 * c2 +
           6 * c1 * c2 + 5 * c1 * c1 * c2 * c2;
}

Etriad etriad_states(const EtriadSeed &seed) {
    Etriad t;
    for (int k = 0; k < 3; k++) {
        double shift = k * kTwoPi / 3;
        t[k] = MajoranaState::from_angles(seed.theta1, seed.phi1 + shift, seed.theta2, seed.phi2 + shift);
    }
    return t;
}

double etriad_overlap_gap(const EtriadSeed &seed) {
    Etriad t = etriad_states(seed);
    double gap = 0;
    for (int i = 0; i < 3; i++) {
        for (int j = i + 1; j < 3; j++) {
            gap = std::max(gap, std::abs(overlap_terms(t[i], t[j]).raw - 0.25));
        }
    }
    return gap;
}

Etriad etriad_from_seed(const EtriadSeed &seed) {
    double r = etriad_residual(seed);
    if (!(std::abs(r) < kEtriadTolerance)) {
        throw std::invalid_argument("seed does not generate an etriad: residual " + std::to_string(r));
    }
    return etriad_states(seed);
}

std::vector<CatalogEntry> catalog_etriads() {
    const double third = std::acos(1.0 / 3.0);
    const double cube = std::acos(1 / std::sqrt(3.0));
    const double f = std::acos(std::sqrt(2.0 / 3.0));
    const double q = std::acos(1 / std::sqrt(2.0));

    struct Row {
        const char *label;
        const char *geometry;
        EtriadSeed table;
        bool has_alternative;
        EtriadSeed alternative;
    };
    const Row rows[] = {
        {"C", "C-states along the edges of a cube", {third, 0, third, 0}, true, {cube, 0, cube, 0}},
        {"A1", "A-states in a plane", {kPi / 2, 0, kPi / 2, kPi}, false, {}},
        {"A2", "A-states on a double-cone", {f, 0, kPi - f, kPi}, false, {}},
        {"D1", "Tetrahedral configuration", {0, 0, std::acos(-1.0 / 3.0), 0}, false, {}},
        {"D2", "Three vectors equally spaced around a cone", {third, 0, third, kTwoPi / 3}, false, {}},
        {"D3", "Right-angled D-states in vertical planes", {q, 0, kPi - q, 0}, true, {q, 0, kPi - q, kPi / 2}},
    };

    std::vector<CatalogEntry> out;
    for (const auto &row : rows) {
        CatalogEntry e;
        e.label = row.label;
        e.geometry = row.geometry;
        e.table_seed = row.table;
        e.table_residual = etriad_residual(row.table);
        e.has_alternative = row.has_alternative;
        if (row.has_alternative) {
            e.alternative_seed = row.alternative;
            e.alternative_residual = etriad_residual(row.alternative);
        }
        if (std::abs(e.table_residual) < kEtriadTolerance) {
            e.seed = e.table_seed;
            e.residual = e.table_residual;
        } else if (e.has_alternative && std::abs(e.alternative_residual) < kEtriadTolerance) {
            e.seed = e.alternative_seed;
            e.residual = e.alternative_residual;
        } else {
            throw std::logic_error("no candidate seed for etriad " + e.label + " satisfies the condition");
        }
        out.push_back(e);
    }
    return out;
}

Sic build_sic1(double phi_a, double phi_b) {
    const double ts = std::acos(1.0 / 3.0);
    Sic s;
    for (int k = 0; k < 3; k++) {
        s.push_back(MajoranaState::from_angles(kPi / 2, k * kPi / 3, kPi / 2, kPi + k * kPi / 3));
    }
    for (int k = 0; k < 3; k++) {
        s.push_back(MajoranaState::from_angles(0, 0, kPi - ts, phi_a + k * kTwoPi / 3));
    }
    for (int k = 0; k < 3; k++) {
        s.push_back(MajoranaState::from_angles(kPi, 0, ts, phi_b + k * kTwoPi / 3));
    }
    return s;
}

Sic build_sic2() {
    const double tf = std::acos(std::sqrt(2.0 / 3.0));
    const double tg = std::acos(1.0 / 3.0);
    Sic s;
    for (int k = 0; k < 3; k++) {
        double r = k * kTwoPi / 3;
        s.push_back(MajoranaState::from_angles(tf, r, kPi - tf, kPi + r));
    }
    for (int k = 0; k < 3; k++) {
        double r = k * kTwoPi / 3;
        s.push_back(MajoranaState::from_angles(tg, r, tg, kTwoPi / 3 + r));
    }
    for (int k = 0; k < 3; k++) {
        double r = k * kTwoPi / 3;
        s.push_back(MajoranaState::from_angles(kPi - tg, kPi + r, kPi - tg, 5 * kPi / 3 + r));
    }
    return s;
}

std::vector<Ray> to_rays(const std::vector<MajoranaState> &states) {
    std::vector<Ray> out;
    out.reserve(states.size());
    for (const auto &s : states) {
        out.push_back(to_ray(s));
    }
    return out;
}

std::vector<Ray> weyl_heisenberg_orbit(const Ray &fiducial) {
    Eigen::Matrix3cd x = pauli_x();
    Eigen::Matrix3cd z = pauli_z();
    Eigen::Vector3cd v(fiducial[0], fiducial[1], fiducial[2]);
    std::vector<Ray> out;
    Eigen::Matrix3cd xa = Eigen::Matrix3cd::Identity();
    for (int a = 0; a < 3; a++) {
        Eigen::Matrix3cd zb = Eigen::Matrix3cd::Identity();
        for (int b = 0; b < 3; b++) {
            Eigen::Vector3cd w = xa * zb * v;
            out.emplace_back(w(0), w(1), w(2));
            zb = zb * z;
        }
        xa = xa * x;
    }
    return out;
}

int count_distinct_rays(const std::vector<Ray> &rays, double tol) {
    std::vector<Ray> seen;
    for (const auto &r : rays) {
        bool dup = std::any_of(seen.begin(), seen.end(), [&](const Ray &s) { return ray_distance(r, s) < tol; });
        if (!dup) {
            seen.push_back(r);
        }
    }
    return static_cast<int>(seen.size());
}

SicMatch match_sic(const std::vector<Ray> &a, const std::vector<Ray> &b, double tol) {
    SicMatch out;
    out.assignment.assign(a.size(), -1);
    if (a.size() != b.size()) {
        return out;
    }
    std::vector<bool> used(b.size(), false);
    bool ok = true;
    for (size_t i = 0; i < a.size(); i++) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < b.size(); j++) {
            if (used[j]) {
                continue;
            }
            double d = ray_distance(a[i], b[j]);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(j);
            }
        }
        if (best < 0 || best_d >= tol) {
            ok = false;
            continue;
        }
        used[best] = true;
        out.assignment[i] = best;
        out.max_distance = std::max(out.max_distance, best_d);
    }
    out.matched = ok;
    return out;
}

SicMatch match_sic(const Sic &a, const std::vector<Ray> &b, double tol) {
    return match_sic(to_rays(a), b, tol);
}

namespace {

double projector_sum_error(const std::vector<Ray> &rays) {
    Eigen::Matrix3cd sum = Eigen::Matrix3cd::Zero();
    for (const auto &r : rays) {
        Eigen::Vector3cd v(r[0], r[1], r[2]);
        sum += v * v.adjoint();
    }
    return (sum - 3.0 * Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace

SicReport verify_sic(const Sic &s, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("verification tolerance must be positive");
    }
    SicReport out;
    out.size = s.size();
    out.cardinality_ok = s.size() == 9;
    for (size_t i = 0; i < s.size(); i++) {
        for (size_t j = i + 1; j < s.size(); j++) {
            out.max_overlap_error = std::max(out.max_overlap_error, std::abs(overlap_terms(s[i], s[j]).raw - 0.25));
        }
    }
    out.projector_sum_error = projector_sum_error(to_rays(s));
    out.passed = out.cardinality_ok && out.max_overlap_error < tol && out.projector_sum_error < tol;
    return out;
}

SicReport verify_sic(const std::vector<Ray> &rays, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("verification tolerance must be positive");
    }
    SicReport out;
    out.size = rays.size();
    out.cardinality_ok = rays.size() == 9;
    for (size_t i = 0; i < rays.size(); i++) {
        for (size_t j = i + 1; j < rays.size(); j++) {
            out.max_overlap_error = std::max(out.max_overlap_error, std::abs(ray_overlap(rays[i], rays[j]) - 0.25));
        }
    }
    out.projector_sum_error = projector_sum_error(rays);
    out.passed = out.cardinality_ok && out.max_overlap_error < tol && out.projector_sum_error < tol;
    return out;
}

}  // namespace majorana
