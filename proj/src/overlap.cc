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

#include "majorana/overlap.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace majorana {

namespace {

struct Dots {
    double a12, b12;
    double a1b1, a1b2, a2b1, a2b2;
};

Dots dots_of(const MajoranaState &a, const MajoranaState &b) {
    return {
        dot(a.v1(), a.v2()),
        dot(b.v1(), b.v2()),
        dot(a.v1(), b.v1()),
        dot(a.v1(), b.v2()),
        dot(a.v2(), b.v1()),
        dot(a.v2(), b.v2()),
    };
}

// Grouped so that swapping the states, or the vectors inside either state,
// only permutes commutative operands: the result is bitwise symmetric.
double f1_of(const Dots &d) {
    double linear = (d.a1b1 + d.a2b2) + (d.a1b2 + d.a2b1);
    double quadratic = d.a1b1 * d.a2b2 + d.a1b2 * d.a2b1;
    return linear + quadratic;
}

std::array<double, 5> ansatz_basis(const Dots &d) {
    double l1 = d.a12 + d.b12;
    double l2 = (d.a1b1 + d.a2b2) + (d.a1b2 + d.a2b1);
    double q1 = d.a1b1 * d.a2b2 + d.a1b2 * d.a2b1;
    double q2 = d.a12 * d.b12;
    return {1.0, l1, l2, q1, q2};
}

}  // namespace

OverlapTerms overlap_terms(const MajoranaState &a, const MajoranaState &b) {
    Dots d = dots_of(a, b);
    OverlapTerms t;
    t.f1 = f1_of(d);
    t.f2 = (1 - d.a12) * (1 - d.b12);
    t.denom = (3 + d.a12) * (3 + d.b12);
    t.raw = (4 + 2 * t.f1 - t.f2) / t.denom;
    t.value = std::clamp(t.raw, 0.0, 1.0);
    return t;
}

double overlap(const MajoranaState &a, const MajoranaState &b) {
    return overlap_terms(a, b).value;
}

std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::Identical:
            return "identical";
        case Relation::Orthogonal:
            return "orthogonal";
        case Relation::Unbiased:
            return "unbiased";
        case Relation::Equiangular:
            return "equiangular";
        case Relation::Other:
            return "other";
    }
    return "?";
}

double relation_target(Relation r) {
    switch (r) {
        case Relation::Identical:
            return 1.0;
        case Relation::Orthogonal:
            return 0.0;
        case Relation::Unbiased:
            return 1.0 / 3.0;
        case Relation::Equiangular:
            return 0.25;
        case Relation::Other:
            break;
    }
    throw std::invalid_argument("Relation::Other has no target overlap");
}

ConditionResiduals condition_residuals(const MajoranaState &a, const MajoranaState &b) {
    Dots d = dots_of(a, b);
    double f1 = f1_of(d);
    ConditionResiduals r;
    r.identical = 2 * f1 - (2 * (1 + d.a12) * (1 + d.b12) + 4);
    r.orthogonal = 2 * f1 - ((1 - d.a12) * (1 - d.b12) - 4);
    r.unbiased = 3 * f1 - 2 * d.a12 * d.b12;
    r.equiangular = 8 * f1 - (5 * d.a12 * d.b12 - d.a12 - d.b12 - 3);
    return r;
}

Relation relation(const MajoranaState &a, const MajoranaState &b, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("relation tolerance must be positive");
    }
    OverlapTerms t = overlap_terms(a, b);
    ConditionResiduals c = condition_residuals(a, b);
    struct Candidate {
        Relation relation;
        double condition;
        double scale;
    };
    const Candidate candidates[] = {
        {Relation::Identical, c.identical, 1.0},
        {Relation::Orthogonal, c.orthogonal, 1.0},
        {Relation::Unbiased, c.unbiased, 1.5},
        {Relation::Equiangular, c.equiangular, 4.0},
    };
    for (const auto &cand : candidates) {
        double by_value = std::abs(t.value - relation_target(cand.relation));
        double by_condition = std::abs(cand.condition) / (cand.scale * t.denom);
        bool hit_value = by_value < tol;
        bool hit_condition = by_condition < tol;
        if (hit_value != hit_condition && std::abs(by_value - tol) > 1e-12) {
            throw std::logic_error("overlap value and dot-product condition disagree for relation " +
                                   std::string(to_string(cand.relation)));
        }
        if (hit_value) {
            return cand.relation;
        }
    }
    return Relation::Other;
}

double spin_half_overlap(const UnitVector &a, const UnitVector &b) {
    return std::clamp(0.5 * (1 + dot(a, b)), 0.0, 1.0);
}

double overlap_oracle(const MajoranaState &a, const MajoranaState &b) {
    auto spinor = [](const UnitVector &v) {
        SphericalAngles s = v.spherical();
        return std::array<cdouble, 2>{std::cos(0.5 * s.theta()), std::polar(std::sin(0.5 * s.theta()), s.phi())};
    };
    auto symmetrized = [&](const MajoranaState &s) {
        auto p = spinor(s.v1());
        auto q = spinor(s.v2());
        double norm = 1.0 / std::sqrt(3 + dot(s.v1(), s.v2()));
        std::array<cdouble, 4> out;
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                out[2 * i + j] = (p[i] * q[j] + q[i] * p[j]) * norm;
            }
        }
        return out;
    };
    auto psi_a = symmetrized(a);
    auto psi_b = symmetrized(b);
    cdouble amp = 0;
    for (int k = 0; k < 4; k++) {
        amp += std::conj(psi_b[k]) * psi_a[k];
    }
    return std::norm(amp);
}

double ray_overlap(const Ray &r, const Ray &s) {
    return std::norm(inner(r, s));
}

InvariantBasisFit fit_invariant_basis() {
    // Basis values are quadratic in p = a1.a2 for both configurations, so three
    // sample points recover the polynomial coefficients exactly.
    const double samples[3] = {-0.5, 0.0, 0.5};
    Eigen::Matrix3d vandermonde;
    for (int i = 0; i < 3; i++) {
        vandermonde.row(i) << 1.0, samples[i], samples[i] * samples[i];
    }
    auto vandermonde_lu = vandermonde.fullPivLu();

    std::vector<Eigen::Matrix<double, 1, 5>> rows;
    std::vector<double> rhs;
    // self: overlap of a state with itself must be 1, i.e. numerator == denom.
    // antipodal: overlap with |-a1,-a1> must vanish, i.e. numerator == 0.
    for (int config = 0; config < 2; config++) {
        Eigen::Matrix<double, 3, 5> basis_values;
        Eigen::Vector3d target_values;
        for (int i = 0; i < 3; i++) {
            double p = samples[i];
            UnitVector a1(0, 0, 1);
            UnitVector a2(std::sqrt(1 - p * p), 0, p);
            MajoranaState a(a1, a2);
            MajoranaState b = config == 0 ? a : MajoranaState(-a1, -a1);
            Dots d = dots_of(a, b);
            auto basis = ansatz_basis(d);
            for (int k = 0; k < 5; k++) {
                basis_values(i, k) = basis[k];
            }
            target_values(i) = config == 0 ? (3 + d.a12) * (3 + d.b12) : 0.0;
        }
        Eigen::Matrix<double, 3, 5> coeff_rows = vandermonde_lu.solve(basis_values);
        Eigen::Vector3d coeff_rhs = vandermonde_lu.solve(target_values);
        for (int power = 0; power < 3; power++) {
            if (coeff_rows.row(power).cwiseAbs().maxCoeff() < 1e-12 && std::abs(coeff_rhs(power)) < 1e-12) {
                continue;  // identically satisfied
            }
            rows.push_back(coeff_rows.row(power));
            rhs.push_back(coeff_rhs(power));
        }
    }
    if (rows.size() != 5) {
        throw std::logic_error("expected five independent coefficient conditions, got " +
                               std::to_string(rows.size()));
    }
    Eigen::Matrix<double, 5, 5> system;
    Eigen::Matrix<double, 5, 1> b;
    for (int i = 0; i < 5; i++) {
        system.row(i) = rows[i];
        b(i) = rhs[i];
    }
    auto lu = system.fullPivLu();
    if (lu.rank() < 5) {
        throw std::logic_error("coefficient system is singular");
    }
    Eigen::Matrix<double, 5, 1> x = lu.solve(b);
    InvariantBasisFit out;
    for (int k = 0; k < 5; k++) {
        // The exact solution is integral; clean the 1e-16 solve noise.
        out.x[k] = std::abs(x(k) - std::round(x(k))) < 1e-12 ? std::round(x(k)) : x(k);
    }
    Eigen::Map<const Eigen::Matrix<double, 5, 1>> xm(out.x.data());
    out.residual = (system * xm - b).cwiseAbs().maxCoeff();
    return out;
}

double invariant_basis_overlap(const InvariantBasisFit &c, const MajoranaState &a, const MajoranaState &b) {
    Dots d = dots_of(a, b);
    auto basis = ansatz_basis(d);
    double num = 0;
    for (int k = 0; k < 5; k++) {
        num += c.x[k] * basis[k];
    }
    return num / ((3 + d.a12) * (3 + d.b12));
}

}  // namespace majorana
