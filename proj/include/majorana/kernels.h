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

#ifndef MAJORANA_KERNELS_H
#define MAJORANA_KERNELS_H

#include <cstdint>
#include <random>
#include <vector>

#include "majorana/states.h"

namespace majorana {

// Sweeps used by verification and search. Each kernel exists twice: a plain
// loop in `serial` and an OpenMP loop in `parallel`. Inputs are generated up
// front and every reduction is a max or a sum of integers, so both versions
// return identical results for any thread count.

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
double uniform01(std::mt19937_64 &rng);

/// Uniform on the sphere: z uniform in [-1, 1), azimuth uniform in [0, 2pi).
UnitVector random_unit_vector(std::mt19937_64 &rng);

MajoranaState random_state(std::mt19937_64 &rng);

struct StatePair {
    MajoranaState a;
    MajoranaState b;
};

std::vector<StatePair> random_state_pairs(size_t n, uint64_t seed);

struct OracleSweep {
    size_t samples = 0;
    /// Max |closed-form overlap (unclamped) - tensor-product oracle|.
    double max_oracle_error = 0;
    /// Max |closed-form overlap - |<ray|ray>|^2|.
    double max_ray_error = 0;
};

/// Node (i, j) of the (theta, psi) search grid: theta spans the closed
/// double-cone range with n points, psi spans [0, 2pi) with m points.
double extension_grid_theta(int i, int n);
double extension_grid_psi(int j, int m);

struct EtriadAgreement {
    long seeds = 0;
    /// Max |residual - (4/3)(3 + v1.v2)^2 (overlap - 1/4)|.
    double max_identity_error = 0;
    /// Max spread of the three member-pair overlaps.
    double max_pair_spread = 0;
    /// Seeds where |residual| < 1e-8 and the overlap test disagree.
    long zero_set_mismatches = 0;
};

struct SicGridReport {
    int points = 0;
    double max_overlap_error = 0;
    double max_projector_error = 0;
    int failures = 0;
};

namespace serial {

OracleSweep oracle_sweep(const std::vector<StatePair> &pairs);

/// Row-major n x m grid of max |overlap - 1/3| against `targets`.
std::vector<double> extension_cost_grid(const std::vector<MajoranaState> &targets, int n, int m, bool mirror);

/// theta1, theta2 on n points over [0, pi], phi2 - phi1 on n points over [0, 2pi).
EtriadAgreement etriad_agreement(int n);

/// verify_sic on build_sic1 over an n x n grid of (phi_a, phi_b) in [0, 2pi)^2.
SicGridReport sic1_grid(int n, double tol);

}  // namespace serial

namespace parallel {

OracleSweep oracle_sweep(const std::vector<StatePair> &pairs);
std::vector<double> extension_cost_grid(const std::vector<MajoranaState> &targets, int n, int m, bool mirror);
EtriadAgreement etriad_agreement(int n);
SicGridReport sic1_grid(int n, double tol);

/// Worker count OpenMP will use.
int max_threads();

}  // namespace parallel

}  // namespace majorana

#endif
