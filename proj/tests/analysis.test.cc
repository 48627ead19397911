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

#include <cmath>
#include <map>
#include <stdexcept>

#include "gtest/gtest.h"

#include "oracles.test.h"

using namespace majorana;
using oracle::Vec3c;

namespace {

const double kPiO = oracle::kPi;

// Census rebuilt from density matrices, binned on multiples of pi/12.
std::map<int, int> oracle_census(const Sic &s) {
    std::vector<Vec3c> v;
    for (const auto &st : s) {
        v.push_back(oracle::star_state(st));
    }
    std::map<int, int> out;
    for (size_t i = 0; i < v.size(); i++) {
        for (size_t j = i + 1; j < v.size(); j++) {
            for (size_t k = j + 1; k < v.size(); k++) {
                double a = std::abs(std::arg(oracle::bargmann(v[i], v[j], v[k])));
                out[static_cast<int>(std::lround(a / (kPiO / 12)))]++;
            }
        }
    }
    return out;
}

std::map<int, int> binned(const PhaseCensus &c) {
    std::map<int, int> out;
    for (const auto &b : c.bins) {
        out[static_cast<int>(std::lround(b.phase / (kPiO / 12)))] += b.count;
    }
    return out;
}

Eigen::Matrix3cd random_unitary(oracle::Gen &gen) {
    Eigen::Matrix3cd m;
    for (int c = 0; c < 3; c++) {
        m.col(c) = gen.vector();
    }
    return Eigen::HouseholderQR<Eigen::Matrix3cd>(m).householderQ();
}

}  // namespace

TEST(analysis, bargmann_matches_density_matrices) {
    oracle::Gen gen(501);
    for (int i = 0; i < 2000; i++) {
        Vec3c a = gen.vector(), b = gen.vector(), c = gen.vector();
        Ray ra(a[0], a[1], a[2]), rb(b[0], b[1], b[2]), rc(c[0], c[1], c[2]);
        auto got = bargmann_invariant(ra, rb, rc);
        auto want = oracle::bargmann(a, b, c);
        ASSERT_LT(std::abs(got - want), 1e-14);
        ASSERT_NEAR(bargmann_phase(ra, rb, rc), std::abs(std::arg(want)), 1e-12);
    }
}

TEST(analysis, bargmann_phase_is_unitarily_invariant) {
    oracle::Gen gen(503);
    for (int i = 0; i < 500; i++) {
        Eigen::Matrix3cd u = random_unitary(gen);
        Vec3c v[3] = {gen.vector(), gen.vector(), gen.vector()};
        Ray r[3], s[3];
        for (int k = 0; k < 3; k++) {
            Vec3c w = u * v[k];
            r[k] = Ray(v[k][0], v[k][1], v[k][2]);
            s[k] = Ray(w[0], w[1], w[2]);
        }
        ASSERT_NEAR(bargmann_phase(r[0], r[1], r[2]), bargmann_phase(s[0], s[1], s[2]), 1e-10);
    }
}

TEST(analysis, bargmann_phase_degenerate_triad) {
    Ray a(1, 0, 0), b(0, 1, 0), c(1, 1, 1);
    EXPECT_THROW(bargmann_phase(a, b, c), std::domain_error);
}

TEST(analysis, hesse_aaa_triad_phase_is_pi) {
    // The three AAA rays (1, 0, -omega^k) span a plane; their product is -1/8.
    Sic s = build_sic1(kPiO, kPiO);
    auto b = bargmann_invariant(to_ray(s[0]), to_ray(s[1]), to_ray(s[2]));
    EXPECT_NEAR(b.real(), -0.125, 1e-15);
    EXPECT_NEAR(b.imag(), 0, 1e-15);
    EXPECT_NEAR(bargmann_phase(s[0], s[1], s[2]), kPiO, 1e-12);
}

TEST(analysis, sic2_census) {
    PhaseCensus c = phase_census(build_sic2());
    EXPECT_EQ(c.total, 84);
    ASSERT_EQ(c.bins.size(), 4u);
    EXPECT_EQ(c.count_at(0), 9);
    EXPECT_EQ(c.count_at(kPiO / 3), 54);
    EXPECT_EQ(c.count_at(2 * kPiO / 3), 18);
    EXPECT_EQ(c.count_at(kPiO), 3);
    EXPECT_EQ(binned(c), oracle_census(build_sic2()));
}

TEST(analysis, sic2_signed_census) {
    PhaseCensus c = phase_census(build_sic2(), PhaseConvention::Signed);
    EXPECT_EQ(c.total, 84);
    EXPECT_EQ(c.count_at(0), 9);
    EXPECT_EQ(c.count_at(kPiO / 3), 27);
    EXPECT_EQ(c.count_at(-kPiO / 3), 27);
    EXPECT_EQ(c.count_at(2 * kPiO / 3), 9);
    EXPECT_EQ(c.count_at(-2 * kPiO / 3), 9);
    EXPECT_EQ(c.count_at(kPiO), 3);
    EXPECT_EQ(c.count_at(-kPiO), 0);
}

TEST(analysis, sic1_census_depends_on_angle_sum) {
    oracle::Gen gen(509);
    for (int i = 0; i < 30; i++) {
        double pa = gen.uniform(0, 2 * kPiO), pb = gen.uniform(0, 2 * kPiO);
        double shift = gen.uniform(-2, 2);
        PhaseCensus c = phase_census(build_sic1(pa, pb));
        PhaseCensus d = phase_census(build_sic1(pa + shift, pb - shift));
        ASSERT_EQ(c.bins.size(), d.bins.size());
        for (size_t k = 0; k < c.bins.size(); k++) {
            ASSERT_NEAR(c.bins[k].phase, d.bins[k].phase, 1e-7);
            ASSERT_EQ(c.bins[k].count, d.bins[k].count);
        }
    }
}

TEST(analysis, sic1_generic_census) {
    PhaseCensus c = phase_census(build_sic1(0.3, 1.1));
    EXPECT_EQ(c.total, 84);
    ASSERT_EQ(c.bins.size(), 5u);
    const int counts[5] = {9, 54, 9, 9, 3};
    for (int k = 0; k < 5; k++) {
        EXPECT_EQ(c.bins[k].count, counts[k]) << k;
    }
    EXPECT_NEAR(c.bins[1].phase, kPiO / 3, 1e-9);
    EXPECT_NEAR(c.bins[4].phase, kPiO, 1e-9);
}

TEST(analysis, hesse_census_and_inequivalence) {
    PhaseCensus h = phase_census(build_sic1(kPiO, kPiO));
    ASSERT_EQ(h.bins.size(), 2u);
    EXPECT_EQ(h.count_at(kPiO / 3), 72);
    EXPECT_EQ(h.count_at(kPiO), 12);
    EXPECT_EQ(h.count_at(0), 0);
    EXPECT_EQ(binned(h), oracle_census(build_sic1(kPiO, kPiO)));

    InequivalenceResult r = inequivalence_test(build_sic1(kPiO, kPiO), build_sic2());
    EXPECT_TRUE(r.inequivalent);
    bool zero_bin = false;
    for (const auto &d : r.differences) {
        if (std::abs(d.phase) < 1e-7) {
            zero_bin = true;
            EXPECT_EQ(d.count_a, 0);
            EXPECT_EQ(d.count_b, 9);
        }
    }
    EXPECT_TRUE(zero_bin);
}

TEST(analysis, census_cannot_separate_equal_censuses) {
    // A SIC-1 member with phi_a + phi_b = pi has SIC-2's census.
    InequivalenceResult r = inequivalence_test(build_sic1(0.4, kPiO - 0.4), build_sic2());
    EXPECT_FALSE(r.inequivalent);
    EXPECT_TRUE(r.differences.empty());
    EXPECT_FALSE(inequivalence_test(build_sic2(), build_sic2()).inequivalent);
}

TEST(analysis, hesse_configuration) {
    HesseConfiguration h = hesse_configuration();
    EXPECT_EQ(h.total_pairs, 36);
    EXPECT_TRUE(h.one_per_basis);
    ASSERT_EQ(h.mub_partners.size(), 12u);
    ASSERT_EQ(h.sic_partners.size(), 9u);
    for (const auto &p : h.mub_partners) {
        EXPECT_EQ(p.size(), 3u);
    }
    for (const auto &p : h.sic_partners) {
        EXPECT_EQ(p.size(), 4u);
    }
    // Recount with explicit vectors.
    int pairs = 0;
    for (const auto &b : h.mub) {
        for (const auto &r : b) {
            for (const auto &s : h.sic) {
                pairs += oracle::transition(oracle::from_ray(r), oracle::from_ray(s)) < 1e-10;
            }
        }
    }
    EXPECT_EQ(pairs, 36);
}

TEST(analysis, spin_half_structures) {
    SpinHalfReport r = spin_half_structures();
    EXPECT_LT(r.octahedron_cross_error, 1e-12);
    EXPECT_LT(r.octahedron_orthogonality, 1e-12);
    EXPECT_LT(r.tetrahedron_error, 1e-12);
    // Three orthogonal axes leave no room for a fourth, nor four tetrahedron
    // vertices for a fifth equiangular direction.
    EXPECT_NEAR(r.fourth_basis_gap, 1, 1e-12);
    EXPECT_GT(r.fifth_vertex_gap, 0.5);
}
