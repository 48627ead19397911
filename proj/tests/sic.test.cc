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
#include <stdexcept>

#include "gtest/gtest.h"

#include "majorana/analysis.h"
#include "oracles.test.h"

using namespace majorana;
using oracle::cd;
using oracle::kOmega;
using oracle::omega_half;
using oracle::Vec3c;

namespace {

const double kPiO = oracle::kPi;

// Pairwise transitions and projector sum from coherent-state vectors.
double oracle_sic_error(const Sic &s) {
    std::vector<Vec3c> v;
    Eigen::Matrix3cd sum = Eigen::Matrix3cd::Zero();
    for (const auto &st : s) {
        v.push_back(oracle::star_state(st));
        sum += oracle::projector(v.back());
    }
    double worst = (sum - 3.0 * Eigen::Matrix3cd::Identity()).norm();
    for (size_t i = 0; i < v.size(); i++) {
        for (size_t j = i + 1; j < v.size(); j++) {
            worst = std::max(worst, std::abs(oracle::transition(v[i], v[j]) - 0.25));
        }
    }
    return worst;
}

}  // namespace

TEST(sic, sic1_matches_state_table) {
    oracle::Gen gen(401);
    const double ts = std::acos(1.0 / 3.0);
    for (int trial = 0; trial < 20; trial++) {
        double pa = gen.uniform(0, 2 * kPiO), pb = gen.uniform(0, 2 * kPiO);
        Sic s = build_sic1(pa, pb);
        ASSERT_EQ(s.size(), 9u);
        for (int k = 0; k < 3; k++) {
            double r = 2 * k * kPiO / 3;
            MajoranaState aaa = MajoranaState::from_angles(kPiO / 2, k * kPiO / 3, kPiO / 2, wrap_two_pi(kPiO + k * kPiO / 3));
            MajoranaState da = MajoranaState::from_angles(0, 0, kPiO - ts, wrap_two_pi(pa + r));
            MajoranaState db = MajoranaState::from_angles(kPiO, 0, ts, wrap_two_pi(pb + r));
            EXPECT_LT(state_distance(s[k], aaa), 1e-12);
            EXPECT_LT(state_distance(s[3 + k], da), 1e-12);
            EXPECT_LT(state_distance(s[6 + k], db), 1e-12);
        }
    }
}

TEST(sic, sic1_matches_ray_table) {
    oracle::Gen gen(409);
    for (int trial = 0; trial < 20; trial++) {
        double pa = gen.uniform(0, 2 * kPiO), pb = gen.uniform(0, 2 * kPiO);
        cd ea = std::polar(1.0, pa), eb = std::polar(1.0, pb);
        const cd w[3] = {1.0, kOmega, kOmega * kOmega};
        Sic s = build_sic1(pa, pb);
        for (int k = 0; k < 3; k++) {
            Vec3c aaa(1, 0, -w[k]);
            Vec3c da(1, w[k] * ea, 0);
            Vec3c db(0, 1, w[k] * eb);
            EXPECT_LT(oracle::projective_gap(oracle::from_ray(to_ray(s[k])), aaa), 1e-12);
            EXPECT_LT(oracle::projective_gap(oracle::from_ray(to_ray(s[3 + k])), da), 1e-12);
            EXPECT_LT(oracle::projective_gap(oracle::from_ray(to_ray(s[6 + k])), db), 1e-12);
        }
    }
}

TEST(sic, sic2_matches_ray_table) {
    const Vec3c table[9] = {
        Vec3c(1, -2, -1),
        Vec3c(1, 2.0 * omega_half(-1), omega_half(1)),
        Vec3c(1, 2.0 * omega_half(1), omega_half(-1)),
        Vec3c(1, 0.5 * omega_half(1), -0.5 * omega_half(-1)),
        Vec3c(1, -0.5, 0.5),
        Vec3c(1, 0.5 * omega_half(-1), -0.5 * omega_half(1)),
        Vec3c(1, -omega_half(1), -2.0 * omega_half(-1)),
        Vec3c(1, 1, 2),
        Vec3c(1, -omega_half(-1), -2.0 * omega_half(1)),
    };
    Sic s = build_sic2();
    ASSERT_EQ(s.size(), 9u);
    for (int i = 0; i < 9; i++) {
        EXPECT_LT(oracle::projective_gap(oracle::from_ray(to_ray(s[i])), table[i]), 1e-12) << i;
    }
}

TEST(sic, sic2_is_inversion_symmetric) {
    Sic s = build_sic2();
    for (const auto &st : s) {
        MajoranaState t = transform(st, TimeReversal{});
        EXPECT_TRUE(std::any_of(s.begin(), s.end(), [&](const MajoranaState &u) { return approx_equal(t, u); }));
    }
}

TEST(sic, verify_sic_property) {
    oracle::Gen gen(419);
    for (int trial = 0; trial < 100; trial++) {
        double pa = gen.uniform(-7, 7), pb = gen.uniform(-7, 7);
        Sic s = build_sic1(pa, pb);
        SicReport r = verify_sic(s, 1e-10);
        ASSERT_TRUE(r.passed);
        ASSERT_TRUE(verify_sic(to_rays(s), 1e-10).passed);
        ASSERT_LT(oracle_sic_error(s), 1e-12);
    }
    EXPECT_TRUE(verify_sic(build_sic2(), 1e-10).passed);
    EXPECT_LT(oracle_sic_error(build_sic2()), 1e-12);
}

TEST(sic, verify_sic_rejects) {
    Sic s = build_sic2();
    s[4] = rotate_about_z(s[4], 1e-4);
    EXPECT_FALSE(verify_sic(s, 1e-10).passed);
    Sic short_set = build_sic2();
    short_set.pop_back();
    SicReport r = verify_sic(short_set, 1e-10);
    EXPECT_FALSE(r.cardinality_ok);
    EXPECT_FALSE(r.passed);
    EXPECT_THROW(verify_sic(build_sic2(), 0), std::invalid_argument);
}

TEST(sic, hesse_fiducial_orbit) {
    auto orbit = weyl_heisenberg_orbit(Ray(0, 1, -1));
    ASSERT_EQ(orbit.size(), 9u);
    EXPECT_EQ(count_distinct_rays(orbit), 9);
    EXPECT_TRUE(verify_sic(orbit, 1e-12).passed);
    SicMatch m = match_sic(build_sic1(kPiO, kPiO), orbit, 1e-9);
    EXPECT_TRUE(m.matched);
    EXPECT_LT(m.max_distance, 1e-12);
    std::vector<int> sorted = m.assignment;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 9; i++) {
        EXPECT_EQ(sorted[i], i);
    }
}

TEST(sic, appleby_family_orbit) {
    // Fiducial (0, e^{i phi}, e^{-i phi}) generates a SIC whose triple-product
    // census is that of SIC-1 with phi_a + phi_b = pi - 6 phi. Only at
    // phi = pi/6 does the orbit coincide with a SIC-1 member in this frame.
    for (double phi : {0.0, 0.05, 0.1, 0.3, 0.45, kPiO / 6}) {
        auto orbit = weyl_heisenberg_orbit(Ray(0, std::polar(1.0, phi), std::polar(1.0, -phi)));
        EXPECT_TRUE(verify_sic(orbit, 1e-12).passed) << phi;
        double t = kPiO / 2 - 3 * phi;
        PhaseCensus a = phase_census(orbit);
        PhaseCensus b = phase_census(build_sic1(t, t));
        ASSERT_EQ(a.bins.size(), b.bins.size()) << phi;
        for (size_t k = 0; k < a.bins.size(); k++) {
            EXPECT_NEAR(a.bins[k].phase, b.bins[k].phase, 1e-9) << phi;
            EXPECT_EQ(a.bins[k].count, b.bins[k].count) << phi;
        }
    }
    auto hesse = weyl_heisenberg_orbit(Ray(0, std::polar(1.0, kPiO / 6), std::polar(1.0, -kPiO / 6)));
    EXPECT_TRUE(match_sic(build_sic1(kPiO, kPiO), hesse, 1e-9).matched);
    EXPECT_TRUE(match_sic(build_sic1(kPiO / 3, kPiO / 3), hesse, 1e-9).matched);
    // phi_a = phi_b = 2 phi gives a different census away from pi/6.
    auto orbit = weyl_heisenberg_orbit(Ray(0, std::polar(1.0, 0.1), std::polar(1.0, -0.1)));
    EXPECT_FALSE(match_sic(build_sic1(0.2, 0.2), orbit, 1e-6).matched);
    Sic states;
    for (const auto &r : orbit) {
        states.push_back(from_ray(r));
    }
    EXPECT_TRUE(inequivalence_test(build_sic1(0.2, 0.2), states).inequivalent);
}

TEST(sic, weyl_heisenberg_orbit_uses_explicit_operators) {
    Vec3c f(0.3, cd(0.1, 0.7), -0.2);
    auto orbit = weyl_heisenberg_orbit(Ray(f[0], f[1], f[2]));
    // X shifts |j> to |j+1>, Z multiplies |j> by omega^j; order is X^a Z^b with a major.
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < 3; b++) {
            Vec3c v;
            for (int j = 0; j < 3; j++) {
                v[(j + a) % 3] = std::pow(kOmega, b * j) * f[j];
            }
            EXPECT_LT(oracle::projective_gap(oracle::from_ray(orbit[3 * a + b]), v), 1e-14);
        }
    }
}

TEST(sic, match_sic_edges) {
    auto a = to_rays(build_sic2());
    auto b = a;
    b.pop_back();
    EXPECT_FALSE(match_sic(a, b).matched);
    std::reverse(b.begin(), b.end());
    b.push_back(a.back());
    SicMatch m = match_sic(a, b);
    EXPECT_TRUE(m.matched);
    EXPECT_FALSE(match_sic(to_rays(build_sic1(0.2, 0.4)), a).matched);
}

TEST(sic, etriad_catalog) {
    auto cat = catalog_etriads();
    ASSERT_EQ(cat.size(), 6u);
    const char *labels[6] = {"C", "A1", "A2", "D1", "D2", "D3"};
    for (int i = 0; i < 6; i++) {
        EXPECT_EQ(cat[i].label, labels[i]);
        EXPECT_LT(std::abs(cat[i].residual), 1e-10);
        EXPECT_LT(etriad_overlap_gap(cat[i].seed), 1e-12) << labels[i];
        Etriad t = etriad_from_seed(cat[i].seed);
        for (int j = 0; j < 3; j++) {
            for (int k = j + 1; k < 3; k++) {
                EXPECT_NEAR(oracle::transition(oracle::star_state(t[j]), oracle::star_state(t[k])), 0.25, 1e-12);
            }
        }
    }
    // Row C: the cube angle satisfies the condition, arccos(1/3) leaves -80/27.
    EXPECT_NEAR(cat[0].seed.theta1, std::acos(1 / std::sqrt(3.0)), 1e-15);
    EXPECT_NEAR(cat[0].table_residual, -80.0 / 27.0, 1e-12);
    // Row D3: the tabulated zero azimuth is right; a quarter turn leaves -3/4.
    EXPECT_EQ(cat[5].seed.phi2, 0);
    EXPECT_TRUE(cat[5].has_alternative);
    EXPECT_NEAR(cat[5].alternative_residual, -0.75, 1e-12);
    // The geometry column labels the member classes.
    EXPECT_EQ(classify(etriad_states(cat[0].seed)[0]), StateClass::Coherent);
    EXPECT_EQ(classify(etriad_states(cat[1].seed)[0]), StateClass::Anticoherent);
    EXPECT_EQ(classify(etriad_states(cat[3].seed)[0]), StateClass::Devious);
}

TEST(sic, etriad_residual_identity_property) {
    oracle::Gen gen(431);
    for (int i = 0; i < 5000; i++) {
        EtriadSeed seed{gen.uniform(0, kPiO), gen.uniform(0, 2 * kPiO), gen.uniform(0, kPiO), gen.uniform(0, 2 * kPiO)};
        Etriad t = etriad_states(seed);
        double a12 = dot(t[0].v1(), t[0].v2());
        double ov = oracle::transition(oracle::star_state(t[0]), oracle::star_state(t[1]));
        ASSERT_NEAR(etriad_residual(seed), 4.0 / 3.0 * (3 + a12) * (3 + a12) * (ov - 0.25), 1e-10) << i;
        // Rotation by a third of a turn makes the three pair overlaps equal.
        double ov02 = oracle::transition(oracle::star_state(t[0]), oracle::star_state(t[2]));
        ASSERT_NEAR(ov, ov02, 1e-12);
    }
}

TEST(sic, etriad_from_seed_rejects) {
    EXPECT_THROW(etriad_from_seed({0.3, 0, 0.3, 0}), std::invalid_argument);
}
