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

#ifndef MAJORANA_POLY_H
#define MAJORANA_POLY_H

#include <array>
#include <complex>
#include <vector>

namespace majorana {

/// Coefficients in ascending order: p(x) = c[0] + c[1] x + ... + c[4] x^4.
using Quartic = std::array<double, 5>;

/// Real roots of a x^2 + b x + c, ascending. Uses q = -(b + sgn(b) sqrt(D)) / 2
/// so neither root loses digits to cancellation. Degenerates to the linear
/// case when a == 0. Empty when there are no real roots.
std::vector<double> real_quadratic_roots(double a, double b, double c);

double evaluate(const Quartic &p, double x);
std::complex<double> evaluate(const Quartic &p, std::complex<double> x);
double evaluate_derivative(const Quartic &p, double x);

/// All four complex roots of a quartic with c[4] != 0 (Ferrari). The largest
/// real root of the resolvent cubic is found by bracketing, and every root
/// gets a few Newton steps on p. Throws std::invalid_argument if c[4] == 0.
std::array<std::complex<double>, 4> quartic_roots(const Quartic &p);

/// Newton iteration on p' starting from x0. Used to pin a double root of p
/// to full precision, where Newton on p itself only converges linearly.
double polish_double_root(const Quartic &p, double x0);

}  // namespace majorana

#endif
