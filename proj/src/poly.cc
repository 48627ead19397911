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

#include "majorana/poly.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace majorana {

using cdouble = std::complex<double>;

std::vector<double> real_quadratic_roots(double a, double b, double c) {
    if (a == 0) {
        if (b == 0) {
            return {};
        }
        return {-c / b};
    }
    double disc = b * b - 4 * a * c;
    if (disc < 0) {
        return {};
    }
    double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (q == 0) {
        return {0.0, 0.0};
    }
    double r1 = q / a;
    double r2 = c / q;
    if (r1 > r2) {
        std::swap(r1, r2);
    }
    return {r1, r2};
}

double evaluate(const Quartic &p, double x) {
    return (((p[4] * x + p[3]) * x + p[2]) * x + p[1]) * x + p[0];
}

cdouble evaluate(const Quartic &p, cdouble x) {
    return (((p[4] * x + p[3]) * x + p[2]) * x + p[1]) * x + p[0];
}

double evaluate_derivative(const Quartic &p, double x) {
    return ((4 * p[4] * x + 3 * p[3]) * x + 2 * p[2]) * x + p[1];
}

namespace {

cdouble evaluate_derivative(const Quartic &p, cdouble x) {
    return ((4 * p[4] * x + 3 * p[3]) * x + 2 * p[2]) * x + p[1];
}

// Largest real root of the resolvent 8m^3 + 8p m^2 + (2p^2 - 8r) m - q^2,
// which is negative at m = 0 and therefore has a root in (0, bound].
double resolvent_root(double p, double q, double r) {
    auto g = [&](double m) { return ((8 * m + 8 * p) * m + (2 * p * p - 8 * r)) * m - q * q; };
    double hi = 1.0 + std::max({std::abs(p), std::abs(0.25 * p * p - r), 0.125 * q * q});
    double lo = 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-17 * hi; i++) {
        double mid = 0.5 * (lo + hi);
        (g(mid) > 0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::array<cdouble, 4> quartic_roots(const Quartic &p) {
    if (p[4] == 0) {
        throw std::invalid_argument("leading quartic coefficient is zero");
    }
    double a = p[3] / p[4];
    double b = p[2] / p[4];
    double c = p[1] / p[4];
    double d = p[0] / p[4];
    // y^4 + P y^2 + Q y + R with x = y - a/4.
    double shift = -0.25 * a;
    double P = b - 0.375 * a * a;
    double Q = c - 0.5 * a * b + 0.125 * a * a * a;
    double R = d - 0.25 * a * c + 0.0625 * a * a * b - 3.0 * a * a * a * a / 256.0;

    std::array<cdouble, 4> y;
    double scale = 1.0 + std::abs(P) + std::abs(R);
    if (std::abs(Q) < 1e-14 * scale) {
        // Biquadratic.
        cdouble disc = std::sqrt(cdouble(P * P - 4 * R));
        cdouble z1 = 0.5 * (-P + disc);
        cdouble z2 = 0.5 * (-P - disc);
        y = {std::sqrt(z1), -std::sqrt(z1), std::sqrt(z2), -std::sqrt(z2)};
    } else {
        double m = resolvent_root(P, Q, R);
        double s = std::sqrt(2 * m);
        cdouble c1 = 0.5 * P + m + Q / (2 * s);
        cdouble c2 = 0.5 * P + m - Q / (2 * s);
        cdouble d1 = std::sqrt(cdouble(s * s) - 4.0 * c1);
        cdouble d2 = std::sqrt(cdouble(s * s) - 4.0 * c2);
        y = {0.5 * (s + d1), 0.5 * (s - d1), 0.5 * (-s + d2), 0.5 * (-s - d2)};
    }

    std::array<cdouble, 4> roots;
    for (int k = 0; k < 4; k++) {
        cdouble x = y[k] + shift;
        for (int it = 0; it < 4; it++) {
            cdouble fx = evaluate(p, x);
            cdouble dfx = evaluate_derivative(p, x);
            if (dfx == 0.0) {
                break;
            }
            cdouble next = x - fx / dfx;
            if (std::abs(evaluate(p, next)) >= std::abs(fx)) {
                break;
            }
            x = next;
        }
        roots[k] = x;
    }
    return roots;
}

double polish_double_root(const Quartic &p, double x0) {
    double x = x0;
    for (int it = 0; it < 50; it++) {
        double d1 = evaluate_derivative(p, x);
        double d2 = (12 * p[4] * x + 6 * p[3]) * x + 2 * p[2];
        if (d2 == 0) {
            break;
        }
        double step = d1 / d2;
        x -= step;
        if (std::abs(step) <= 1e-16 * (1 + std::abs(x))) {
            break;
        }
    }
    return x;
}

}  // namespace majorana
