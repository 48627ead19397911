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

#ifndef MAJORANA_OVERLAP_H
#define MAJORANA_OVERLAP_H

#include <array>
#include <string_view>

#include "majorana/states.h"

namespace majorana {

inline constexpr double kRelationTolerance = 1e-9;

/// Pieces of the Majorana overlap |<b1,b2|a1,a2>|^2 = (4 + 2 F1 - F2) / denom.
///
///   F1    = (a1 + a2).(b1 + b2) + (a1.b1)(a2.b2) + (a1.b2)(a2.b1)
///   F2    = (1 - a1.a2)(1 - b1.b2)
///   denom = (3 + a1.a2)(3 + b1.b2), always in [4, 16]
///
/// `raw` is the unclamped quotient; `value` is raw clamped to [0, 1].
struct OverlapTerms {
    double f1 = 0;
    double f2 = 0;
    double denom = 0;
    double raw = 0;
    double value = 0;
};

OverlapTerms overlap_terms(const MajoranaState &a, const MajoranaState &b);

/// Clamped overlap value.
double overlap(const MajoranaState &a, const MajoranaState &b);

enum class Relation { Identical, Orthogonal, Unbiased, Equiangular, Other };

std::string_view to_string(Relation r);

/// Target overlap of a relation (1, 0, 1/3, 1/4); Other has none and throws.
double relation_target(Relation r);

/// Residuals of the four relation conditions written directly on dot
/// products (identity, orthogonality, unbiasedness, equiangularity). Each one
/// equals k * denom * (overlap - target) with k = 1, 1, 3/2, 4.
struct ConditionResiduals {
    double identical = 0;
    double orthogonal = 0;
    double unbiased = 0;
    double equiangular = 0;
};

ConditionResiduals condition_residuals(const MajoranaState &a, const MajoranaState &b);

/// Classifies by |overlap - target| < tol in the order Identical, Orthogonal,
/// Unbiased, Equiangular. The dot-product conditions are evaluated as well and
/// must agree; a disagreement away from the tolerance boundary throws
/// std::logic_error.
Relation relation(const MajoranaState &a, const MajoranaState &b, double tol = kRelationTolerance);

/// Spin-1/2 overlap (1 + a.b) / 2.
double spin_half_overlap(const UnitVector &a, const UnitVector &b);

/// Independent overlap: builds each state as the normalized symmetrized
/// product of two spin-1/2 spinors (cos(theta/2), e^{i phi} sin(theta/2)) in
/// C^2 (x) C^2 and returns the squared modulus of their inner product.
double overlap_oracle(const MajoranaState &a, const MajoranaState &b);

/// |<r|s>|^2 for normalized rays.
double ray_overlap(const Ray &r, const Ray &s);

/// Coefficients x1..x5 of the symmetric ansatz
///   (x1 + x2 L1 + x3 L2 + x4 Q1 + x5 Q2) / ((3 + a1.a2)(3 + b1.b2))
/// with L1 = a1.a2 + b1.b2, L2 = sum of the four cross dots,
/// Q1 = (a1.b1)(a2.b2) + (a1.b2)(a2.b1), Q2 = (a1.a2)(b1.b2).
struct InvariantBasisFit {
    std::array<double, 5> x{};
    /// Max |row residual| of the assembled 5x5 system.
    double residual = 0;
};

/// Assembles the five linear conditions on x (overlap of a state with itself
/// is 1 for every a1.a2; overlap with |-a1,-a1> vanishes for every a1.a2) by
/// evaluating the ansatz on concrete vector configurations and matching
/// polynomial coefficients in a1.a2, then solves the system.
/// Throws std::logic_error if the system is singular.
InvariantBasisFit fit_invariant_basis();

/// Ansatz evaluated with the given coefficients.
double invariant_basis_overlap(const InvariantBasisFit &c, const MajoranaState &a, const MajoranaState &b);

}  // namespace majorana

#endif
