// Copyright 2026 The rispace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>

#include "rispace/gridfn.hpp"
#include "rispace/powlog.hpp"

namespace rispace {

/// Adaptive Simpson with Richardson correction, relative tolerance on the
/// running total.  The integrand must be finite on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-11, int max_depth = 60);

/// Integral of t^a * (log(2/t))^b over (lo, hi), 0 <= lo < hi <= 1.
///
/// Exact antiderivatives are used for b = 0 and for a = -1; the general case
/// substitutes u = log(2/t), where the integrand 2^{a+1} e^{-(a+1)u} u^b is
/// smooth and non-oscillatory, and integrates adaptively to 1e-10 relative.
///
/// lo = 0 is accepted exactly when the integral converges there
/// (a > -1, or a = -1 with b < -1); otherwise a precondition error.
double quad_powlog(double a, double b, double lo, double hi);

/// Weighted-cell integral dispatcher.
/// PowLogFn: additive over atoms via quad_powlog (lo = 0 allowed when each
/// atom converges).  GridFn: piecewise-linear-in-u trapezoid over the node
/// samples; [lo, hi] must sit inside the grid span (lo may be 0, meaning the
/// left edge of the grid); cells touching a +inf sample integrate to +inf.
double integrate(const PowLogFn& f, double lo, double hi);
double integrate(const GridFn& f, double lo, double hi);

/// Supremum over [lo, hi].  GridFn: max over nodes inside the interval
/// (range error when no node is inside).  PowLogFn: endpoints, per-atom
/// interior critical points, and a log-spaced scan.
double sup_on(const GridFn& f, double lo, double hi);
double sup_on(const PowLogFn& f, double lo, double hi);

/// Exact integral of the linear-in-u interpolant through (u_a, f_a) and
/// (u_b, f_b) against dt = -t du, for u_a >= u_b (t_a <= t_b).
double linear_cell_integral(double u_a, double f_a, double u_b, double f_b);

}  // namespace rispace
