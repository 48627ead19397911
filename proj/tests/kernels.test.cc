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

#include <cmath>

#include "gtest/gtest.h"

#include "majorana/mub.h"
#include "oracles.test.h"

using namespace majorana;

TEST(kernels, uniform01_range) {
    std::mt19937_64 rng(1);
    double lo = 1, hi = 0, sum = 0;
    for (int i = 0; i < 100000; i++) {
        double u = uniform01(rng);
        ASSERT_GE(u, 0);
        ASSERT_LT(u, 1);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    EXPECT_LT(lo, 1e-3);
    EXPECT_GT(hi, 1 - 1e-3);
    EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(kernels, random_states_are_reproducible_and_uniform) {
    auto a = random_state_pairs(1000, 42);
    auto b = random_state_pairs(1000, 42);
    auto c = random_state_pairs(1000, 43);
    double mean_z = 0;
    for (size_t i = 0; i < a.size(); i++) {
        ASSERT_EQ(state_distance(a[i].a, b[i].a), 0);
        ASSERT_EQ(state_distance(a[i].b, b[i].b), 0);
        mean_z += a[i].a.v1().z() + a[i].a.v2().z();
    }
    EXPECT_GT(state_distance(a[0].a, c[0].a), 0);
    EXPECT_NEAR(mean_z / 2000, 0, 0.05);
    // mt19937_64 is pinned by the standard: the 10000th output of the
    // default-seeded engine is fixed.
    std::mt19937_64 ref;
    ref.discard(9999);
    EXPECT_EQ(ref(), 9981545732273789042ull);
}

TEST(kernels, oracle_sweep) {
    auto pairs = random_state_pairs(20000, 42);
    OracleSweep s = serial::oracle_sweep(pairs);
    OracleSweep p = parallel::oracle_sweep(pairs);
    EXPECT_EQ(s.samples, 20000u);
    EXPECT_LT(s.max_oracle_error, 1e-12);
    EXPECT_LT(s.max_ray_error, 1e-12);
    EXPECT_EQ(s.max_oracle_error, p.max_oracle_error);
    EXPECT_EQ(s.max_ray_error, p.max_ray_error);
}

TEST(kernels, extension_grid_parity) {
    auto targets = build_unextendible_triple().states();
    for (bool mirror : {false, true}) {
        auto s = serial::extension_cost_grid(targets, 60, 120, mirror);
        auto p = parallel::extension_cost_grid(targets, 60, 120, mirror);
        ASSERT_EQ(s.size(), 7200u);
        ASSERT_EQ(s, p);
        for (double c : s) {
            ASSERT_GE(c, 0);
            ASSERT_LE(c, 1);
        }
    }
    EXPECT_NEAR(extension_grid_theta(0, 60), double_cone_min_theta(), 1e-15);
    EXPECT_NEAR(extension_grid_theta(59, 60), oracle::kPi / 2, 1e-15);
    EXPECT_EQ(extension_grid_psi(0, 120), 0);
    EXPECT_NEAR(extension_grid_psi(60, 120), oracle::kPi, 1e-15);
}

TEST(kernels, extension_grid_values) {
    // Spot-check grid cells against a direct cost computation.
    auto targets = build_maximal_mub().states();
    auto g = parallel::extension_cost_grid(targets, 20, 40, true);
    for (int i : {0, 7, 19}) {
        for (int j : {0, 13, 39}) {
            MajoranaState s = double_cone_state({extension_grid_theta(i, 20), extension_grid_psi(j, 40), true});
            double c = 0;
            for (const auto &t : targets) {
                c = std::max(c, std::abs(oracle::transition(oracle::star_state(s), oracle::star_state(t)) - 1.0 / 3.0));
            }
            EXPECT_NEAR(g[i * 40 + j], c, 1e-12);
        }
    }
}

TEST(kernels, etriad_agreement_parity) {
    EtriadAgreement s = serial::etriad_agreement(24);
    EtriadAgreement p = parallel::etriad_agreement(24);
    EXPECT_EQ(s.seeds, 24 * 24 * 24);
    EXPECT_EQ(s.seeds, p.seeds);
    EXPECT_EQ(s.max_identity_error, p.max_identity_error);
    EXPECT_EQ(s.max_pair_spread, p.max_pair_spread);
    EXPECT_EQ(s.zero_set_mismatches, p.zero_set_mismatches);
    EXPECT_LT(s.max_identity_error, 1e-12);
    EXPECT_LT(s.max_pair_spread, 1e-12);
    EXPECT_EQ(s.zero_set_mismatches, 0);
}

TEST(kernels, sic1_grid_parity) {
    SicGridReport s = serial::sic1_grid(8, 1e-10);
    SicGridReport p = parallel::sic1_grid(8, 1e-10);
    EXPECT_EQ(s.points, 64);
    EXPECT_EQ(s.failures, 0);
    EXPECT_EQ(s.max_overlap_error, p.max_overlap_error);
    EXPECT_EQ(s.max_projector_error, p.max_projector_error);
    EXPECT_EQ(s.failures, p.failures);
    EXPECT_GE(parallel::max_threads(), 1);
}
