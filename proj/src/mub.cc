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

#include "majorana/mub.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "majorana/kernels.h"

namespace majorana {

namespace {

using cdouble = std::complex<double>;

const cdouble kOmega = std::polar(1.0, kTwoPi / 3);

double positive_root(double a, double b, double c) {
    for (double r : real_quadratic_roots(a, b, c)) {
        if (r > 0 && r < 1) {
            return r;
        }
    }
    throw std::logic_error("no root of the angle polynomial in (0, 1)");
}

// arccos(-2 cot^2 theta) written with t = cos^2 theta.
double phi_from_t(double t) {
    return std::acos(std::clamp(-2 * t / (1 - t), -1.0, 1.0));
}

}  // namespace

std::vector<MajoranaState> MubSet::states() const {
    std::vector<MajoranaState> out;
    for (const auto &b : bases) {
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

Basis cac_basis() {
    return {
        MajoranaState::from_angles(0, 0, 0, 0),
        MajoranaState::from_angles(0, 0, kPi, 0),
        MajoranaState::from_angles(kPi, 0, kPi, 0),
    };
}

SpecialAnglesSolution solve_special_angles() {
    SpecialAnglesSolution out;
    SpecialAngles &a = out.angles;
    SpecialAngleResiduals &res = out.residuals;

    double td = positive_root(1, 10, -3);
    a.theta_d = std::acos(std::sqrt(td));
    a.phi_d = phi_from_t(td);
    double ti = positive_root(3, 6, -1);
    a.theta_i = std::acos(std::sqrt(ti));
    a.phi_i = phi_from_t(ti);
    a.phi_r = a.phi_d / 2 - kPi / 3;

    // Unbiasedness of (pi/2, h | pi/2, h + pi/2) against (theta_d, 0 | pi - theta_d, phi_d):
    //   P cos h + Q sin h - s cos(phi_d) sin 2h + s sin(phi_d) cos 2h = 0
    // With x = cos h, y = sin h this is y (Q - 2 s cphi x) = -(P x + s sphi (2x^2 - 1)).
    double s = std::sin(a.theta_d);
    double cphi = std::cos(a.phi_d);
    double sphi = std::sin(a.phi_d);
    double P = 1 + cphi + sphi;
    double Q = -1 + sphi - cphi;
    auto f = [&](double h) {
        return P * std::cos(h) + Q * std::sin(h) - s * cphi * std::sin(2 * h) + s * sphi * std::cos(2 * h);
    };
    // (1 - x^2)(Q - 2 s cphi x)^2 - (P x + s sphi (2x^2 - 1))^2
    Quartic q = {
        Q * Q - s * s * sphi * sphi,
        -4 * Q * s * cphi + 2 * s * sphi * P,
        4 * s * s - Q * Q - P * P,
        4 * Q * s * cphi - 4 * P * s * sphi,
        -4 * s * s,
    };
    out.phi_h_quartic = q;
    out.phi_h_quartic_roots = quartic_roots(q);
    const auto &roots = out.phi_h_quartic_roots;

    // The double root is the closest pair.
    int bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            double d = std::abs(roots[i] - roots[j]);
            if (d < best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    double x = polish_double_root(q, 0.5 * (roots[bi] + roots[bj]).real());
    x = std::clamp(x, -1.0, 1.0);
    double h1 = std::acos(x);
    double h2 = kTwoPi - h1;
    a.phi_h = std::abs(f(h1)) <= std::abs(f(h2)) ? h1 : h2;

    res.theta_d_poly = std::abs(td * td + 10 * td - 3);
    res.theta_i_poly = std::abs(3 * ti * ti + 6 * ti - 1);
    auto cot2 = [](double theta) {
        double t = std::tan(theta);
        return 1 / (t * t);
    };
    res.phi_d_def = std::abs(std::cos(a.phi_d) + 2 * cot2(a.theta_d));
    res.phi_i_def = std::abs(std::cos(a.phi_i) + 2 * cot2(a.theta_i));
    res.phi_h_quartic = std::abs(evaluate(q, std::cos(a.phi_h)));
    res.phi_h_equation = std::abs(f(a.phi_h));
    res.phi_h_identity = std::abs(a.phi_h - (a.phi_d / 2 + 3 * kPi / 4));
    double closed = kTwoPi - std::acos(-std::sqrt(0.5 * (1 + std::sqrt(std::sqrt(7.0) / 2 - 1))));
    res.phi_h_closed_form = std::abs(a.phi_h - closed);
    res.phi_r_identity = std::abs(a.phi_r - (a.phi_d / 2 - kPi / 3));
    return out;
}

const SpecialAngles &special_angles() {
    static const SpecialAngles angles = solve_special_angles().angles;
    return angles;
}

double double_cone_min_theta() {
    return std::acos(1 / std::sqrt(3.0));
}

double double_cone_phi(double theta) {
    double lo = double_cone_min_theta();
    if (!(theta >= lo - kUnitTolerance && theta <= kPi / 2 + kUnitTolerance)) {
        throw std::domain_error("double-cone polar angle " + std::to_string(theta) +
                                " outside [arccos(1/sqrt3), pi/2]");
    }
    double c = std::cos(theta);
    double s = std::sin(theta);
    return std::acos(std::clamp(-2 * c * c / (s * s), -1.0, 1.0));
}

MajoranaState double_cone_state(const DoubleConeParams &p) {
    double phi = double_cone_phi(p.theta);
    double theta = std::clamp(p.theta, 0.0, kPi / 2);
    double phi2 = p.mirror ? p.psi - phi : p.psi + phi;
    return MajoranaState::from_angles(theta, p.psi, kPi - theta, phi2);
}

Basis double_cone_basis(const DoubleConeParams &p) {
    Basis b;
    for (int k = 0; k < 3; k++) {
        DoubleConeParams q = p;
        q.psi = p.psi + k * kTwoPi / 3;
        b[k] = double_cone_state(q);
    }
    return b;
}

RelationPolynomials reflected_relation_polynomials(double theta) {
    double c = std::cos(theta);
    double t = c * c;
    return {t * (1 + t), t * t - 26 * t + 9, t * t + 10 * t - 3};
}

RelationPolynomials inverted_relation_polynomials(double theta) {
    double c = std::cos(theta);
    double t = c * c;
    return {t - 1.0 / 3.0, 9 * t * t + 6 * t + 1, 3 * t * t + 6 * t - 1};
}

PolynomialRootScan scan_orthogonality_polynomials(int steps) {
    if (steps < 2) {
        throw std::invalid_argument("need at least two sample points");
    }
    PolynomialRootScan out;
    out.steps = steps;
    out.reflected_min_abs = std::numeric_limits<double>::infinity();
    out.inverted_min_abs = std::numeric_limits<double>::infinity();
    double lo = double_cone_min_theta();
    double prev_r = 0, prev_i = 0;
    for (int k = 0; k < steps; k++) {
        double theta = lo + (kPi / 2 - lo) * k / (steps - 1);
        double r = reflected_relation_polynomials(theta).orthogonal;
        double i = inverted_relation_polynomials(theta).orthogonal;
        out.reflected_min_abs = std::min(out.reflected_min_abs, std::abs(r));
        out.inverted_min_abs = std::min(out.inverted_min_abs, std::abs(i));
        if (k > 0) {
            out.reflected_sign_changes += (r > 0) != (prev_r > 0);
            out.inverted_sign_changes += (i > 0) != (prev_i > 0);
        }
        prev_r = r;
        prev_i = i;
    }
    return out;
}

RotationSweepReport rotated_pi_ruled_out(int theta_steps) {
    if (theta_steps < 1000) {
        throw std::invalid_argument("rotation sweep needs at least 1000 steps");
    }
    RotationSweepReport out;
    out.steps = theta_steps;
    out.min_orthogonal_gap = std::numeric_limits<double>::infinity();
    out.min_unbiased_gap = std::numeric_limits<double>::infinity();
    double lo = double_cone_min_theta();
    for (int k = 0; k < theta_steps; k++) {
        double theta = lo + (kPi / 2 - lo) * (k + 1) / (theta_steps + 1);
        MajoranaState s = double_cone_state({theta, 0, false});
        double ov = overlap(s, rotate_about_z(s, kPi));
        double orth = ov;
        double unb = std::abs(ov - 1.0 / 3.0);
        out.min_orthogonal_gap = std::min(out.min_orthogonal_gap, orth);
        out.min_unbiased_gap = std::min(out.min_unbiased_gap, unb);
        out.orthogonal_hits += orth < kRelationTolerance;
        out.unbiased_hits += unb < kRelationTolerance;
    }
    return out;
}

MubSet build_maximal_mub() {
    const SpecialAngles &a = special_angles();
    MubSet m;
    m.bases.push_back(cac_basis());
    Basis d = double_cone_basis({a.theta_d, 0, false});
    m.bases.push_back(d);
    Basis r;
    for (int k = 0; k < 3; k++) {
        r[k] = transform(d[k], ReflectXY{});
    }
    m.bases.push_back(r);
    m.bases.push_back(double_cone_basis({kPi / 2, a.phi_h, false}));
    return m;
}

MubSet build_unextendible_triple() {
    const SpecialAngles &a = special_angles();
    MubSet m;
    m.bases.push_back(cac_basis());
    Basis d = double_cone_basis({a.theta_i, 0, false});
    m.bases.push_back(d);
    Basis inv;
    for (int k = 0; k < 3; k++) {
        inv[k] = transform(d[k], TimeReversal{});
    }
    m.bases.push_back(inv);
    return m;
}

std::vector<RayBasis> unextendible_triple_rays() {
    double angle = -(special_angles().phi_i / 2 - kPi / 6);
    std::vector<RayBasis> out;
    for (const auto &b : build_unextendible_triple().bases) {
        RayBasis rb;
        for (int k = 0; k < 3; k++) {
            rb[k] = to_ray(rotate_about_z(b[k], angle));
        }
        out.push_back(rb);
    }
    return out;
}

Eigen::Matrix3cd pauli_z() {
    Eigen::Matrix3cd z = Eigen::Matrix3cd::Zero();
    for (int j = 0; j < 3; j++) {
        z(j, j) = std::pow(kOmega, j);
    }
    return z;
}

Eigen::Matrix3cd pauli_x() {
    Eigen::Matrix3cd x = Eigen::Matrix3cd::Zero();
    for (int j = 0; j < 3; j++) {
        x((j + 1) % 3, j) = 1.0;
    }
    return x;
}

std::vector<RayBasis> build_pauli_mub() {
    Eigen::Matrix3cd z = pauli_z();
    Eigen::Matrix3cd x = pauli_x();
    const Eigen::Matrix3cd ops[4] = {z, x * z * z, x * z, x};
    std::vector<RayBasis> out;
    for (const auto &op : ops) {
        Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(op);
        if (solver.info() != Eigen::Success) {
            throw std::logic_error("eigen-decomposition of a Pauli operator failed");
        }
        Eigen::Matrix3cd square = op * op;
        std::array<std::pair<double, Ray>, 3> states;
        for (int k = 0; k < 3; k++) {
            Eigen::Vector3cd v = solver.eigenvectors().col(k);
            cdouble lambda = solver.eigenvalues()(k);
            if ((square * v - lambda * lambda * v).norm() > 1e-10) {
                throw std::logic_error("eigenvector of an operator is not one of its square");
            }
            double arg = wrap_two_pi(std::arg(lambda));
            if (arg > kTwoPi - 1e-9) {
                arg = 0;
            }
            states[k] = {arg, Ray(v(0), v(1), v(2))};
        }
        std::sort(states.begin(), states.end(), [](const auto &l, const auto &r) { return l.first < r.first; });
        out.push_back({states[0].second, states[1].second, states[2].second});
    }
    return out;
}

Ray apply_diagonal(const std::array<cdouble, 3> &diagonal, const Ray &r) {
    return Ray(diagonal[0] * r[0], diagonal[1] * r[1], diagonal[2] * r[2]);
}

EquivalenceReport equivalence_unitary(double tol) {
    double phi_r = special_angles().phi_r;
    EquivalenceReport out;
    out.diagonal = {std::polar(1.0, phi_r), 1.0, std::polar(1.0, -phi_r)};
    for (const auto &d : out.diagonal) {
        out.unitarity_error = std::max(out.unitarity_error, std::abs(std::norm(d) - 1));
    }
    MubSet m = build_maximal_mub();
    std::vector<RayBasis> pauli = build_pauli_mub();
    std::vector<std::array<bool, 3>> used(pauli.size(), {false, false, false});
    std::vector<int> basis_map(m.size(), -1);
    std::vector<bool> basis_used(pauli.size(), false);
    bool ok = true;
    for (int b = 0; b < static_cast<int>(m.size()); b++) {
        for (int s = 0; s < 3; s++) {
            Ray mapped = apply_diagonal(out.diagonal, to_ray(m.bases[b][s]));
            RayMatch best{b, s, -1, -1, std::numeric_limits<double>::infinity()};
            for (int pb = 0; pb < static_cast<int>(pauli.size()); pb++) {
                for (int ps = 0; ps < 3; ps++) {
                    double d = ray_distance(mapped, pauli[pb][ps]);
                    if (d < best.distance) {
                        best.target_basis = pb;
                        best.target_state = ps;
                        best.distance = d;
                    }
                }
            }
            out.matches.push_back(best);
            out.max_distance = std::max(out.max_distance, best.distance);
            if (best.distance >= tol || used[best.target_basis][best.target_state]) {
                ok = false;
                continue;
            }
            used[best.target_basis][best.target_state] = true;
            if (basis_map[b] < 0) {
                if (basis_used[best.target_basis]) {
                    ok = false;
                }
                basis_map[b] = best.target_basis;
                basis_used[best.target_basis] = true;
            } else if (basis_map[b] != best.target_basis) {
                ok = false;
            }
        }
    }
    out.matched = ok;
    return out;
}

MubReport verify_mub(const MubSet &m, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("verification tolerance must be positive");
    }
    MubReport out;
    out.bases = static_cast<int>(m.size());
    for (size_t b = 0; b < m.size(); b++) {
        const Basis &basis = m.bases[b];
        for (int i = 0; i < 3; i++) {
            out.max_normalization = std::max(out.max_normalization, std::abs(overlap_terms(basis[i], basis[i]).raw - 1));
            for (int j = i + 1; j < 3; j++) {
                out.max_orthogonality = std::max(out.max_orthogonality, std::abs(overlap_terms(basis[i], basis[j]).raw));
            }
        }
        for (size_t c = b + 1; c < m.size(); c++) {
            for (const auto &s : basis) {
                for (const auto &t : m.bases[c]) {
                    out.max_cross = std::max(out.max_cross, std::abs(overlap_terms(s, t).raw - 1.0 / 3.0));
                }
            }
        }
    }
    out.passed = out.max_orthogonality < tol && out.max_normalization < tol && out.max_cross < tol;
    return out;
}

namespace {

bool is_cac(const Basis &b) {
    Basis ref = cac_basis();
    for (const auto &r : ref) {
        bool found = false;
        for (const auto &s : b) {
            found = found || approx_equal(r, s);
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

struct Polished {
    double theta;
    double psi;
    double cost;
};

// Gauss-Newton with Levenberg damping on the residuals overlap - 1/3. The
// Jacobian is a central difference; theta is kept inside the cone range.
Polished polish(const std::vector<MajoranaState> &targets, double theta, double psi, bool mirror) {
    const double lo = double_cone_min_theta();
    const double hi = kPi / 2;
    const size_t k = targets.size();
    auto residuals = [&](double t, double p, std::vector<double> &r) {
        MajoranaState s = double_cone_state({std::clamp(t, lo, hi), p, mirror});
        for (size_t i = 0; i < k; i++) {
            r[i] = overlap_terms(s, targets[i]).raw - 1.0 / 3.0;
        }
    };
    auto max_abs = [](const std::vector<double> &r) {
        double m = 0;
        for (double v : r) {
            m = std::max(m, std::abs(v));
        }
        return m;
    };
    auto sum_sq = [](const std::vector<double> &r) {
        double m = 0;
        for (double v : r) {
            m += v * v;
        }
        return m;
    };
    std::vector<double> r(k), rp(k), rm(k), trial(k);
    residuals(theta, psi, r);
    double lambda = 1e-3;
    const double h = 1e-7;
    for (int it = 0; it < 200 && max_abs(r) > 1e-15; it++) {
        std::vector<double> jt(k), jp(k);
        double tp = std::min(theta + h, hi), tm = std::max(theta - h, lo);
        residuals(tp, psi, rp);
        residuals(tm, psi, rm);
        for (size_t i = 0; i < k; i++) {
            jt[i] = (rp[i] - rm[i]) / (tp - tm);
        }
        residuals(theta, psi + h, rp);
        residuals(theta, psi - h, rm);
        for (size_t i = 0; i < k; i++) {
            jp[i] = (rp[i] - rm[i]) / (2 * h);
        }
        double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
        for (size_t i = 0; i < k; i++) {
            a11 += jt[i] * jt[i];
            a12 += jt[i] * jp[i];
            a22 += jp[i] * jp[i];
            g1 += jt[i] * r[i];
            g2 += jp[i] * r[i];
        }
        bool improved = false;
        for (int tries = 0; tries < 20 && !improved; tries++) {
            double d11 = a11 * (1 + lambda), d22 = a22 * (1 + lambda);
            double det = d11 * d22 - a12 * a12;
            if (!(std::abs(det) > 0)) {
                lambda *= 10;
                continue;
            }
            double dt = -(d22 * g1 - a12 * g2) / det;
            double dp = -(d11 * g2 - a12 * g1) / det;
            double nt = std::clamp(theta + dt, lo, hi);
            double np = psi + dp;
            residuals(nt, np, trial);
            if (sum_sq(trial) < sum_sq(r)) {
                theta = nt;
                psi = np;
                r = trial;
                lambda = std::max(lambda / 10, 1e-12);
                improved = true;
            } else {
                lambda *= 10;
            }
        }
        if (!improved) {
            break;
        }
    }
    return {theta, wrap_two_pi(psi), max_abs(r)};
}

}  // namespace

ExtensionSearchResult search_unbiased_extension(const MubSet &m, const ExtensionSearchOptions &options) {
    if (options.grid < 100) {
        throw std::invalid_argument("extension search grid must be at least 100 per axis");
    }
    if (!(options.refine_tol > 0)) {
        throw std::invalid_argument("refine tolerance must be positive");
    }
    bool has_cac = false;
    std::vector<MajoranaState> targets;
    for (const auto &b : m.bases) {
        if (!has_cac && is_cac(b)) {
            has_cac = true;
            continue;
        }
        targets.insert(targets.end(), b.begin(), b.end());
    }
    if (!has_cac) {
        throw std::invalid_argument("extension search needs the CAC basis in the set");
    }
    if (targets.empty()) {
        throw std::invalid_argument("extension search needs a basis besides CAC; every double-cone state extends CAC alone");
    }

    const int n = options.grid;
    const int cols = 2 * options.grid;
    struct Candidate {
        double cost;
        bool mirror;
        int i;
        int j;
    };
    std::vector<Candidate> candidates;
    ExtensionSearchResult out;
    out.min_grid_cost = std::numeric_limits<double>::infinity();
    for (bool mirror : {false, true}) {
        std::vector<double> cost = parallel::extension_cost_grid(targets, n, cols, mirror);
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < cols; j++) {
                double c = cost[i * cols + j];
                out.min_grid_cost = std::min(out.min_grid_cost, c);
                if (c >= options.seed_cost) {
                    continue;
                }
                bool is_min = true;
                for (int di = -1; di <= 1 && is_min; di++) {
                    int ii = i + di;
                    if (ii < 0 || ii >= n) {
                        continue;
                    }
                    for (int dj = -1; dj <= 1; dj++) {
                        if (di == 0 && dj == 0) {
                            continue;
                        }
                        int jj = (j + dj + cols) % cols;
                        if (cost[ii * cols + jj] < c) {
                            is_min = false;
                            break;
                        }
                    }
                }
                if (is_min) {
                    candidates.push_back({c, mirror, i, j});
                }
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
        if (a.cost != b.cost) {
            return a.cost < b.cost;
        }
        if (a.mirror != b.mirror) {
            return !a.mirror;
        }
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    if (static_cast<int>(candidates.size()) > options.max_candidates) {
        candidates.resize(options.max_candidates);
    }
    out.candidates = static_cast<int>(candidates.size());

    auto add_unique = [](std::vector<ExtensionHit> &list, const ExtensionHit &hit) {
        for (auto &h : list) {
            if (state_distance(h.state, hit.state) < 1e-6) {
                if (hit.residual < h.residual) {
                    h = hit;
                }
                return;
            }
        }
        list.push_back(hit);
    };
    for (const auto &c : candidates) {
        Polished p = polish(targets, extension_grid_theta(c.i, n), extension_grid_psi(c.j, cols), c.mirror);
        ExtensionHit hit;
        hit.params = {p.theta, p.psi, c.mirror};
        hit.state = double_cone_state(hit.params);
        hit.residual = p.cost;
        if (p.cost < options.refine_tol) {
            add_unique(out.hits, hit);
        } else if (p.cost < options.near_miss_tol) {
            add_unique(out.near_misses, hit);
        }
    }
    // A near miss that polished into a hit elsewhere is not a near miss.
    std::erase_if(out.near_misses, [&](const ExtensionHit &nm) {
        return std::any_of(out.hits.begin(), out.hits.end(),
                           [&](const ExtensionHit &h) { return state_distance(h.state, nm.state) < 1e-6; });
    });
    auto by_params = [](const ExtensionHit &a, const ExtensionHit &b) {
        if (std::abs(a.params.theta - b.params.theta) > 1e-9) {
            return a.params.theta < b.params.theta;
        }
        return a.params.psi < b.params.psi;
    };
    std::sort(out.hits.begin(), out.hits.end(), by_params);
    std::sort(out.near_misses.begin(), out.near_misses.end(), by_params);
    return out;
}

}  // namespace majorana
