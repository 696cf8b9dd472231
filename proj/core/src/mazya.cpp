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

#include "rispace/mazya.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rispace/errors.hpp"
#include "rispace/quadrature.hpp"

namespace rispace {
namespace {

double unit_ball_volume(int dim) {
  // pi^{d/2} / Gamma(d/2 + 1).
  return std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0 + 1.0);
}

/// integral_{s/2}^{s} 1/I(tau) dtau.
double inv_profile_mass(const IsoProfile& iso, double s) {
  if (iso.pure_power) {
    const double e = 1.0 - iso.power_exp;
    return (std::pow(s, e) - std::pow(0.5 * s, e)) / e;
  }
  return adaptive_simpson([&iso](double tau) { return 1.0 / iso(tau); }, 0.5 * s,
                          s, 1e-10);
}

}  // namespace

MazyaParams::MazyaParams(int n, double alpha, int m) : n_(n), alpha_(alpha), m_(m) {
  if (n < 2) fail(ErrorKind::parameter, "MazyaParams: need n >= 2");
  if (m < 1) fail(ErrorKind::parameter, "MazyaParams: need m >= 1");
  const double lo = 1.0 - 1.0 / n;  // 1/n'
  if (!(alpha >= lo - 1e-12) || !(alpha < 1.0)) {
    fail(ErrorKind::parameter,
         "MazyaParams: alpha must lie in [1 - 1/n, 1), got " +
             std::to_string(alpha) + " for n = " + std::to_string(n));
  }
  omega_ = unit_ball_volume(n - 1);
}

double eta(const MazyaParams& p, double t) {
  if (t < 0.0 || t > p.axis_length() * (1.0 + 1e-12)) {
    fail(ErrorKind::domain, "eta: t outside [0, 1/(1-alpha)]");
  }
  const int n = p.n();
  const double a = p.alpha();
  const double expo = a / ((1.0 - a) * (n - 1));
  const double base = std::max(0.0, 1.0 - (1.0 - a) * t);
  return std::pow(p.omega(), -1.0 / (n - 1)) * std::pow(base, expo);
}

double omega_volume(const MazyaParams& p) {
  const int n = p.n();
  const auto cross_section = [&](double t) {
    const double r = eta(p, t);
    return p.omega() * std::pow(r, n - 1);
  };
  return adaptive_simpson(cross_section, 0.0, p.axis_length(), 1e-9);
}

IsoProfile model_profile(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    fail(ErrorKind::parameter,
         "model_profile: alpha must lie in (0, 1); the boundary case 1 is out "
         "of scope");
  }
  IsoProfile iso;
  iso.profile = PowLogFn::atom(1.0, alpha, 0.0);
  iso.pure_power = true;
  iso.power_exp = alpha;
  return iso;
}

FundamentalFn induced_domain_phi(const FundamentalFn& phi_y, const IsoProfile& iso) {
  if (phi_y.zero_limit() > 1e-12) {
    fail(ErrorKind::precondition,
         "induced_domain_phi: requires phi_Y(0+) = 0 (target fundamental function must "
         "vanish at zero)");
  }
  if (!iso.pure_power) {
    const BalanceReport chk = balance_check(phi_y, iso, {phi_y.grid()->t_min()},
                                          phi_y.grid()->points_per_decade());
    if (!chk.holds) {
      fail(ErrorKind::precondition,
           "induced_domain_phi: balance condition fails for this profile");
    }
  }

  const GridPtr grid = phi_y.grid();
  const Grid& g = *grid;
  std::vector<double> out(g.size());
  double running = 0.0;  // sup over s >= t of phi_Y(s/2)/s * mass(s)
  for (std::size_t i = g.size(); i-- > 0;) {
    const double s = g.node(i);
    const double cand = phi_y(0.5 * s) / s * inv_profile_mass(iso, s);
    running = std::max(running, cand);
    out[i] = g.node(i) * running;
  }
  return FundamentalFn::from(GridFn(grid, std::move(out)));
}

BalanceReport balance_check(const FundamentalFn& phi_y, const IsoProfile& iso,
                          const std::vector<double>& t_min_ladder,
                          int points_per_decade) {
  BalanceReport rep;
  rep.phi_zero_limit_ok = phi_y.zero_limit() <= 1e-12;

  for (double t_min : t_min_ladder) {
    const GridPtr grid = make_log_grid(t_min, points_per_decade);
    const Grid& g = *grid;

    // H(s) = sup_{tau >= s} phi_Y(tau)/I(tau) over nodes (suffix max).
    std::vector<double> H(g.size());
    double running = 0.0;
    for (std::size_t i = g.size(); i-- > 0;) {
      running = std::max(running, phi_y(g.node(i)) / iso(g.node(i)));
      H[i] = running;
    }

    // LHS(t) = integral_0^t H, as the right-endpoint cell sum (H is
    // non-increasing, so this underestimates and never inflates the ratio's
    // numerator spuriously); RHS is the fundamental-function formula.
    double lhs_acc = 0.0;
    double max_ratio = 0.0;
    std::vector<double> rhs(g.size());
    {
      double sup_run = 0.0;
      for (std::size_t i = g.size(); i-- > 0;) {
        const double s = g.node(i);
        sup_run = std::max(sup_run, phi_y(0.5 * s) / s * inv_profile_mass(iso, s));
        rhs[i] = s * sup_run;
      }
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      lhs_acc += H[i] * g.cell_weight(i);
      max_ratio = std::max(max_ratio, lhs_acc / rhs[i]);
    }
    rep.refinement.emplace_back(t_min, max_ratio);
    rep.max_ratio = max_ratio;
  }

  double lo = kInf, hi = 0.0;
  for (const auto& [t, r] : rep.refinement) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  rep.holds = std::isfinite(hi) && (rep.refinement.size() < 2 || hi <= lo * 1.10);
  return rep;
}

PsiResult psi(double alpha, const FundamentalFn& phi_y, const GridPtr& grid) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    fail(ErrorKind::parameter, "psi: alpha must lie in (0, 1)");
  }
  const Grid& g = *grid;
  const std::size_t n = g.size();

  std::vector<double> weight(n);  // phi_Y(s/2) s^-alpha at nodes
  for (std::size_t j = 0; j < n; ++j) {
    weight[j] = phi_y(0.5 * g.node(j)) * std::pow(g.node(j), -alpha);
  }

  // Form 1: t * suffix sup.
  std::vector<double> sup_vals(n);
  {
    double running = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      running = std::max(running, weight[i]);
      sup_vals[i] = g.node(i) * running;
    }
  }

  // Form 2: global sup of phi_Y(s/2) min(t^{1-a}, t s^-a).  Split at s = t:
  // below it the minimum is t^{1-a} and phi_Y(s/2) is largest at s = t, so a
  // prefix max of phi_Y covers that branch.
  std::vector<double> min_vals(n);
  {
    std::vector<double> prefix_phi(n);
    double run = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      run = std::max(run, phi_y(0.5 * g.node(j)));
      prefix_phi[j] = run;
    }
    double suffix_weight = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      suffix_weight = std::max(suffix_weight, weight[i]);
      const double t = g.node(i);
      const double below = prefix_phi[i] * std::pow(t, 1.0 - alpha);
      const double above = t * suffix_weight;
      min_vals[i] = std::max(below, above);
    }
  }

  PsiResult res{GridFn(grid, sup_vals), GridFn(grid, min_vals), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double a = sup_vals[i];
    const double b = min_vals[i];
    if (a > 0.0 || b > 0.0) {
      res.max_mismatch =
          std::max(res.max_mismatch, std::abs(a - b) / std::max(a, b));
    }
  }
  return res;
}

}  // namespace rispace
