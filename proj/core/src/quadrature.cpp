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

#include "rispace/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rispace/errors.hpp"

namespace rispace {
namespace {

struct SimpsonState {
  const std::function<double(double)>* f;
  double rel_tol;
  double scale;  // running magnitude estimate for the relative test
};

double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm,
                   double fb, double whole, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = (*st.f)(lm);
  const double frm = (*st.f)(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double refined = left + right;
  const double err = (refined - whole) / 15.0;
  st.scale = std::max(st.scale, std::abs(refined));
  if (depth <= 0 || std::abs(err) <= st.rel_tol * std::max(st.scale, 1e-300)) {
    return refined + err;
  }
  return simpson_rec(st, a, m, fa, flm, fm, left, depth - 1) +
         simpson_rec(st, m, b, fm, frm, fb, right, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  SimpsonState st{&f, rel_tol, 0.0};
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  st.scale = std::abs(whole);
  return simpson_rec(st, a, b, fa, fm, fb, whole, max_depth);
}

double quad_powlog(double a, double b, double lo, double hi) {
  if (!(lo >= 0.0) || !(lo < hi) || !(hi <= 1.0)) {
    fail(ErrorKind::parameter,
         "quad_powlog: need 0 <= lo < hi <= 1, got [" + std::to_string(lo) +
             ", " + std::to_string(hi) + "]");
  }
  if (lo == 0.0) {
    const bool converges = (a > -1.0) || (a == -1.0 && b < -1.0);
    if (!converges) {
      fail(ErrorKind::precondition,
           "quad_powlog: integral from 0 diverges for a = " + std::to_string(a) +
               ", b = " + std::to_string(b));
    }
  }

  // a = -1: exact antiderivative in u = log(2/t).
  if (a == -1.0) {
    const double u_lo = u_of_t(hi);                  // smaller u
    const double u_hi = lo == 0.0 ? kInf : u_of_t(lo);  // larger u
    if (b == -1.0) {
      return std::log(u_hi) - std::log(u_lo);
    }
    const double p = b + 1.0;
    const double upper = lo == 0.0 ? 0.0 : std::pow(u_hi, p);  // p < 0 here
    return (upper - std::pow(u_lo, p)) / p;
  }

  // b = 0: plain power.
  if (b == 0.0) {
    const double p = a + 1.0;
    const double lo_term = lo == 0.0 ? 0.0 : std::pow(lo, p);
    return (std::pow(hi, p) - lo_term) / p;
  }

  // General case in u-coordinates: 2^{a+1} * Integral e^{-(a+1)u} u^b du.
  // The exponential peak is factored out so intermediate values stay scaled.
  const double k = a + 1.0;
  const double u_left = u_of_t(hi);
  double u_right = lo == 0.0 ? kInf : u_of_t(lo);
  if (lo == 0.0) {
    // Convergent tail (k > 0): truncate where e^{-k(u - u_left)} is below
    // 1e-18 relative to the peak at u_left.
    u_right = u_left + (42.0 + std::abs(b) * 8.0) / k;
  }
  const double u_peak = k >= 0.0 ? u_left : u_right;
  const auto g = [k, b, u_peak](double u) {
    return std::exp(-k * (u - u_peak)) * std::pow(u, b);
  };
  const double scaled = adaptive_simpson(g, u_left, u_right, 1e-11, 60);
  return std::pow(2.0, k) * std::exp(-k * u_peak) * scaled;
}

double integrate(const PowLogFn& f, double lo, double hi) {
  double sum = 0.0;
  for (const auto& atom : f.atoms()) {
    sum += atom.coef * quad_powlog(atom.t_exp, atom.log_exp, lo, hi);
  }
  return sum;
}

double integrate(const GridFn& f, double lo, double hi) {
  const Grid& g = *f.grid();
  if (lo < 0.0 || lo >= hi) {
    fail(ErrorKind::range, "integrate(GridFn): need 0 <= lo < hi");
  }
  if (hi > g.nodes().back() * (1.0 + 1e-12)) {
    fail(ErrorKind::range, "integrate(GridFn): hi above grid span");
  }
  if (lo > 0.0 && lo < g.t_min() * (1.0 - 1e-12)) {
    fail(ErrorKind::range,
         "integrate(GridFn): lo inside (0, t_min) is outside the grid span "
         "(lo = 0 integrates from the grid edge)");
  }
  const double eff_lo = std::max(lo, g.t_min());
  const double eff_hi = std::min(hi, g.nodes().back());
  if (eff_lo >= eff_hi) {
    fail(ErrorKind::range, "integrate(GridFn): empty range after clamping");
  }

  // Trapezoid of y(u) = f(u) * t(u) in u; f piecewise linear in u.  Samples:
  // the interpolated endpoints plus every node strictly inside.
  const auto& nodes = g.nodes();
  const auto& us = g.us();
  const auto& vals = f.values();

  std::vector<std::pair<double, double>> samples;  // (u, f), u decreasing
  samples.reserve(g.size() + 2);
  samples.emplace_back(u_of_t(eff_lo), f.eval(eff_lo));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] > eff_lo && nodes[i] < eff_hi) samples.emplace_back(us[i], vals[i]);
  }
  samples.emplace_back(u_of_t(eff_hi), f.eval(eff_hi));

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const auto [u_a, f_a] = samples[i];      // larger u, smaller t
    const auto [u_b, f_b] = samples[i + 1];  // smaller u, larger t
    if (std::isinf(f_a) || std::isinf(f_b)) return kInf;
    total += linear_cell_integral(u_a, f_a, u_b, f_b);
  }
  return total;
}

double linear_cell_integral(double u_a, double f_a, double u_b, double f_b) {
  // integral (f_b + m (u - u_b)) t(u) du over [u_b, u_a] with t = 2 e^-u:
  // f_b (t_b - t_a) + m (t_b - t_a - L t_a); constants integrate exactly.
  const double t_a = t_of_u(u_a);
  const double t_b = t_of_u(u_b);
  const double len = u_a - u_b;
  if (len <= 0.0) return 0.0;
  const double m = (f_a - f_b) / len;
  return f_b * (t_b - t_a) + m * (t_b - t_a - len * t_a);
}

double sup_on(const GridFn& f, double lo, double hi) {
  if (!(lo > 0.0) || !(lo <= hi) || !(hi > f.grid()->t_min() * (1 - 1e-12))) {
    fail(ErrorKind::range, "sup_on(GridFn): bad interval");
  }
  const auto& nodes = f.grid()->nodes();
  double best = -kInf;
  bool any = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= lo * (1 - 1e-12) && nodes[i] <= hi * (1 + 1e-12)) {
      best = std::max(best, f[i]);
      any = true;
    }
  }
  if (!any) {
    fail(ErrorKind::range, "sup_on(GridFn): no grid node inside the interval");
  }
  return best;
}

double sup_on(const PowLogFn& f, double lo, double hi) {
  if (!(lo > 0.0) || !(lo <= hi) || !(hi <= 1.0)) {
    fail(ErrorKind::range, "sup_on(PowLogFn): need 0 < lo <= hi <= 1");
  }
  double best = std::max(f(lo), f(hi));
  for (double t : f.atom_critical_points(lo, hi)) {
    best = std::max(best, f(t));
  }
  // Log-spaced scan guards multi-atom sums whose maxima sit away from any
  // single atom's critical point.
  const double u_hi = u_of_t(lo);
  const double u_lo = u_of_t(hi);
  const int n = 512;
  for (int i = 1; i < n; ++i) {
    const double u = u_lo + (u_hi - u_lo) * i / n;
    best = std::max(best, f(t_of_u(u)));
  }
  return best;
}

}  // namespace rispace
