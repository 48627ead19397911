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

#include "majorana/kernels.h"

#include <algorithm>
#include <cmath>

#include <omp.h>

#include "majorana/mub.h"
#include "majorana/overlap.h"
#include "majorana/sic.h"

namespace majorana {

double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

UnitVector random_unit_vector(std::mt19937_64 &rng) {
    double z = 2 * uniform01(rng) - 1;
    double phi = kTwoPi * uniform01(rng);
    double rho = std::sqrt(std::max(0.0, 1 - z * z));
    return UnitVector(rho * std::cos(phi), rho * std::sin(phi), z);
}

MajoranaState random_state(std::mt19937_64 &rng) {
    UnitVector a = random_unit_vector(rng);
    UnitVector b = random_unit_vector(rng);
    return MajoranaState(a, b);
}

std::vector<StatePair> random_state_pairs(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<StatePair> out;
    out.reserve(n);
    for (size_t i = 0; i < n; i++) {
        MajoranaState a = random_state(rng);
        MajoranaState b = random_state(rng);
        out.push_back({a, b});
    }
    return out;
}

double extension_grid_theta(int i, int n) {
    double lo = double_cone_min_theta();
    return lo + (kPi / 2 - lo) * i / (n - 1);
}

double extension_grid_psi(int j, int m) {
    return kTwoPi * j / m;
}

namespace {

void oracle_errors(const StatePair &p, double &oracle_err, double &ray_err) {
    double eq = overlap_terms(p.a, p.b).raw;
    oracle_err = std::abs(eq - overlap_oracle(p.a, p.b));
    ray_err = std::abs(eq - ray_overlap(to_ray(p.a), to_ray(p.b)));
}

double extension_cost(const std::vector<MajoranaState> &targets, double theta, double psi, bool mirror) {
    MajoranaState s = double_cone_state({theta, psi, mirror});
    double c = 0;
    for (const auto &t : targets) {
        c = std::max(c, std::abs(overlap_terms(s, t).raw - 1.0 / 3.0));
    }
    return c;
}

struct EtriadSample {
    double identity_error;
    double pair_spread;
    bool mismatch;
};

EtriadSample etriad_sample(int i, int j, int k, int n) {
    EtriadSeed seed{kPi * i / (n - 1), 0, kPi * j / (n - 1), kTwoPi * k / n};
    double r = etriad_residual(seed);
    Etriad t = etriad_states(seed);
    double o01 = overlap_terms(t[0], t[1]).raw;
    double o12 = overlap_terms(t[1], t[2]).raw;
    double o02 = overlap_terms(t[0], t[2]).raw;
    double a12 = dot(t[0].v1(), t[0].v2());
    double scaled = (4.0 / 3.0) * (3 + a12) * (3 + a12) * (o01 - 0.25);
    double spread = std::max({o01, o12, o02}) - std::min({o01, o12, o02});
    return {std::abs(r - scaled), spread, (std::abs(r) < 1e-8) != (std::abs(scaled) < 1e-8)};
}

void sic1_point(int a, int b, int n, double tol, double &ov, double &proj, bool &fail) {
    SicReport r = verify_sic(build_sic1(kTwoPi * a / n, kTwoPi * b / n), tol);
    ov = r.max_overlap_error;
    proj = r.projector_sum_error;
    fail = !r.passed;
}

}  // namespace

namespace serial {

OracleSweep oracle_sweep(const std::vector<StatePair> &pairs) {
    OracleSweep out;
    out.samples = pairs.size();
    for (const auto &p : pairs) {
        double o, r;
        oracle_errors(p, o, r);
        out.max_oracle_error = std::max(out.max_oracle_error, o);
        out.max_ray_error = std::max(out.max_ray_error, r);
    }
    return out;
}

std::vector<double> extension_cost_grid(const std::vector<MajoranaState> &targets, int n, int m, bool mirror) {
    std::vector<double> cost(static_cast<size_t>(n) * m);
    for (int i = 0; i < n; i++) {
        double theta = extension_grid_theta(i, n);
        for (int j = 0; j < m; j++) {
            cost[static_cast<size_t>(i) * m + j] = extension_cost(targets, theta, extension_grid_psi(j, m), mirror);
        }
    }
    return cost;
}

EtriadAgreement etriad_agreement(int n) {
    EtriadAgreement out;
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            for (int k = 0; k < n; k++) {
                EtriadSample s = etriad_sample(i, j, k, n);
                out.max_identity_error = std::max(out.max_identity_error, s.identity_error);
                out.max_pair_spread = std::max(out.max_pair_spread, s.pair_spread);
                out.zero_set_mismatches += s.mismatch;
            }
        }
    }
    out.seeds = static_cast<long>(n) * n * n;
    return out;
}

SicGridReport sic1_grid(int n, double tol) {
    SicGridReport out;
    out.points = n * n;
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            double ov, proj;
            bool fail;
            sic1_point(a, b, n, tol, ov, proj, fail);
            out.max_overlap_error = std::max(out.max_overlap_error, ov);
            out.max_projector_error = std::max(out.max_projector_error, proj);
            out.failures += fail;
        }
    }
    return out;
}

}  // namespace serial

namespace parallel {

int max_threads() {
    return omp_get_max_threads();
}

OracleSweep oracle_sweep(const std::vector<StatePair> &pairs) {
    OracleSweep out;
    out.samples = pairs.size();
    double max_o = 0, max_r = 0;
    const long n = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(static) reduction(max : max_o, max_r)
    for (long i = 0; i < n; i++) {
        double o, r;
        oracle_errors(pairs[i], o, r);
        max_o = std::max(max_o, o);
        max_r = std::max(max_r, r);
    }
    out.max_oracle_error = max_o;
    out.max_ray_error = max_r;
    return out;
}

std::vector<double> extension_cost_grid(const std::vector<MajoranaState> &targets, int n, int m, bool mirror) {
    std::vector<double> cost(static_cast<size_t>(n) * m);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; i++) {
        double theta = extension_grid_theta(i, n);
        for (int j = 0; j < m; j++) {
            cost[static_cast<size_t>(i) * m + j] = extension_cost(targets, theta, extension_grid_psi(j, m), mirror);
        }
    }
    return cost;
}

EtriadAgreement etriad_agreement(int n) {
    EtriadAgreement out;
    double max_id = 0, max_spread = 0;
    long mismatches = 0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : max_id, max_spread) reduction(+ : mismatches)
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            for (int k = 0; k < n; k++) {
                EtriadSample s = etriad_sample(i, j, k, n);
                max_id = std::max(max_id, s.identity_error);
                max_spread = std::max(max_spread, s.pair_spread);
                mismatches += s.mismatch;
            }
        }
    }
    out.seeds = static_cast<long>(n) * n * n;
    out.max_identity_error = max_id;
    out.max_pair_spread = max_spread;
    out.zero_set_mismatches = mismatches;
    return out;
}

SicGridReport sic1_grid(int n, double tol) {
    SicGridReport out;
    out.points = n * n;
    double max_ov = 0, max_proj = 0;
    int failures = 0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : max_ov, max_proj) reduction(+ : failures)
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            double ov, proj;
            bool fail;
            sic1_point(a, b, n, tol, ov, proj, fail);
            max_ov = std::max(max_ov, ov);
            max_proj = std::max(max_proj, proj);
            failures += fail;
        }
    }
    out.max_overlap_error = max_ov;
    out.max_projector_error = max_proj;
    out.failures = failures;
    return out;
}

}  // namespace parallel

}  // namespace majorana
