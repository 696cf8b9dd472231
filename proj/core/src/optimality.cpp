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

#include "rispace/optimality.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "rispace/errors.hpp"
#include "rispace/quadrature.hpp"
#include "rispace/rearrange.hpp"

namespace rispace {
namespace {

double kernel_exponent(const EmbeddingProblem& p) {
  return static_cast<double>(p.m) * (1.0 - p.alpha) - 1.0;
}

/// ||t^k F(t)||_1 where F is the exact prefix integral of the sorted star
/// step function: F is piecewise linear between the sorted breakpoints, so
/// each piece integrates in closed form via power antiderivatives.
double l1_weighted_prefix(const Rearranged& r, double k) {
  double total = 0.0;
  double prefix = 0.0;  // F at the left edge of the piece
  double prev = 0.0;
  for (std::size_t j = 0; j < r.sorted_values.size(); ++j) {
    const double hi = std::min(r.sorted_cum[j], 1.0);
    if (hi <= prev) continue;
    const double slope = r.sorted_values[j];
    // F(t) = prefix + slope (t - prev) on (prev, hi].
    const double c0 = prefix - slope * prev;
    double piece = 0.0;
    if (c0 != 0.0) piece += c0 * quad_powlog(k, 0.0, prev, hi);
    if (slope != 0.0) piece += slope * quad_powlog(k + 1.0, 0.0, prev, hi);
    total += piece;
    prefix += slope * (hi - prev);
    prev = hi;
    if (std::isinf(total)) return kInf;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Analytic norms for the characteristic-function lemma
// ---------------------------------------------------------------------------

/// Adaptive integral over (lo, hi) of fn(t) in u-coordinates.
double integral_in_u(const std::function<double(double)>& fn, double lo,
                     double hi) {
  return adaptive_simpson(
      [&fn](double u) {
        const double t = t_of_u(u);
        return fn(t) * t;
      },
      u_of_t(hi), u_of_t(lo), 1e-11);
}

double sup_scan(const std::function<double(double)>& fn, double lo, double hi) {
  const double u_hi = u_of_t(lo), u_lo = u_of_t(hi);
  double best = std::max(fn(lo), fn(hi));
  const int n = 2048;
  for (int i = 1; i < n; ++i) {
    best = std::max(best, fn(t_of_u(u_lo + (u_hi - u_lo) * i / n)));
  }
  return best;
}

struct CutPower {
  double a;     // support (0, a)
  double zeta;  // exponent
  double operator()(double t) const {
    return t >= a ? 0.0 : std::pow(a, zeta) - std::pow(t, zeta);
  }
  double at_zero() const { return std::pow(a, zeta); }
};

double lorentz_norm_analytic(double p, double q, double zeta_idx,
                             const CutPower& h) {
  const double inv_p = 1.0 / p;
  if (std::isinf(q)) {
    const auto weighted = [&](double t) {
      return std::pow(t, inv_p) * std::pow(u_of_t(t), zeta_idx) * h(t);
    };
    return sup_scan(weighted, h.a * 1e-12, h.a);
  }
  const double a_exp = q * inv_p - 1.0;
  const double b_exp = q * zeta_idx;
  const double t_cut = h.a * 1e-10;
  const auto integrand = [&](double t) {
    return std::pow(t, a_exp) * std::pow(u_of_t(t), b_exp) * std::pow(h(t), q);
  };
  double total = integral_in_u(integrand, t_cut, h.a);
  total += std::pow(h.at_zero(), q) * quad_powlog(a_exp, b_exp, 0.0, t_cut);
  return std::pow(total, 1.0 / q);
}

double luxemburg_analytic(const YoungFn& A, const CutPower& h) {
  const double t_cut = h.a * 1e-12;
  const auto level = [&](double lam) {
    double total =
        integral_in_u([&](double t) { return A(h(t) / lam); }, t_cut, h.a);
    total += t_cut * A(h.at_zero() / lam);
    return total;
  };
  double hi = 1.0;
  int guard = 0;
  while (level(hi) > 1.0) {
    hi *= 2.0;
    if (++guard > 1100) return kInf;
  }
  double lo = 0.5 * hi;
  guard = 0;
  while (level(lo) <= 1.0) {
    hi = lo;
    lo *= 0.5;
    if (++guard > 1100) return 0.0;
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (level(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double indicator_norm_analytic(const SpaceSpec& s, double a) {
  if (const auto* leb = std::get_if<Lebesgue>(&s)) {
    if (std::isinf(leb->p)) return 1.0;
    return std::pow(a, 1.0 / leb->p);
  }
  if (const auto* lor = std::get_if<Lorentz>(&s)) {
    if (std::isinf(lor->q)) {
      return sup_scan([&](double t) { return std::pow(t, 1.0 / lor->p); },
                      a * 1e-12, a);
    }
    const double w = quad_powlog(lor->q / lor->p - 1.0, 0.0, 0.0, a);
    return std::pow(w, 1.0 / lor->q);
  }
  if (const auto* lz = std::get_if<LorentzZygmund>(&s)) {
    const double inv_p = 1.0 / lz->p;
    if (std::isinf(lz->q)) {
      return sup_scan(
          [&](double t) {
            return std::pow(t, inv_p) * std::pow(u_of_t(t), lz->zeta);
          },
          a * 1e-12, a);
    }
    const double w = quad_powlog(lz->q * inv_p - 1.0, lz->q * lz->zeta, 0.0, a);
    return std::pow(w, 1.0 / lz->q);
  }
  if (const auto* orl = std::get_if<OrliczSpace>(&s)) {
    return 1.0 / orl->young.inverse(1.0 / a);
  }
  return -1.0;  // caller falls back to the grid path
}

}  // namespace

// ---------------------------------------------------------------------------

OpNormReport reduction_check(const EmbeddingProblem& p,
                             const std::vector<TestFn>& family,
                             const std::vector<double>& t_min_ladder,
                             int points_per_decade) {
  const CopsonOp op(p.m, p.alpha);
  const OpApply apply = [op](const GridFn& f) { return copson(op, f); };
  return op_norm_estimate(apply, p.domain, p.target, family, t_min_ladder,
                          points_per_decade);
}

double optimal_target_norm(const EmbeddingProblem& p, const GridFn& f) {
  const auto assoc = associate_space(p.domain);
  if (!assoc) {
    fail(ErrorKind::unsupported_duality,
         "optimal_target_norm: associate space of " + space_to_string(p.domain) +
             " is not in the closed-form table");
  }
  const Rearranged r = rearrangement(f);
  const Grid& g = *f.grid();
  const double k = kernel_exponent(p);

  if (const auto* leb = std::get_if<Lebesgue>(&*assoc); leb && leb->p == 1.0) {
    return l1_weighted_prefix(r, k);
  }

  // Generic route: build t^k F(t) at the nodes (exact prefix integrals of
  // the sorted step) and take the associate norm.
  std::vector<double> vals(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    vals[i] = std::pow(g.node(i), k) * r.prefix_integral(g.node(i));
  }
  return norm(*assoc, GridFn(f.grid(), std::move(vals)));
}

double optimal_target_norm(const EmbeddingProblem& p, const PowLogFn& f,
                           const GridPtr& grid) {
  return optimal_target_norm(p, f.sample(grid));
}

double optimal_domain_norm(const EmbeddingProblem& p, const GridFn& f) {
  const CopsonOp op(p.m, p.alpha);
  const Rearranged r = rearrangement(f);
  return norm(p.target, copson(op, r.star));
}

double optimal_domain_norm(const EmbeddingProblem& p, const PowLogFn& f,
                           const GridPtr& grid) {
  return optimal_domain_norm(p, f.sample(grid));
}

IndicatorComparisonReport indicator_comparison(double zeta, double a, const SpaceSpec& s,
                            const GridPtr& grid) {
  if (!(zeta > 0.0) || !(a > 0.0) || !(a < 1.0)) {
    fail(ErrorKind::parameter, "indicator_comparison: need zeta > 0 and a in (0, 1)");
  }
  if (!validate_spec(s)) {
    fail(ErrorKind::spec, "indicator_comparison: inadmissible space");
  }
  const CutPower h{a, zeta};
  const double a_z = std::pow(a, zeta);

  double numer = -1.0, denom = -1.0;
  if (const auto* leb = std::get_if<Lebesgue>(&s)) {
    if (std::isinf(leb->p)) {
      numer = sup_scan([&](double t) { return h(t); }, a * 1e-12, a);
    } else {
      numer = lorentz_norm_analytic(leb->p, leb->p, 0.0, h);
    }
  } else if (const auto* lor = std::get_if<Lorentz>(&s)) {
    numer = lorentz_norm_analytic(lor->p, lor->q, 0.0, h);
  } else if (const auto* lz = std::get_if<LorentzZygmund>(&s)) {
    numer = lorentz_norm_analytic(lz->p, lz->q, lz->zeta, h);
  } else if (const auto* orl = std::get_if<OrliczSpace>(&s)) {
    numer = luxemburg_analytic(orl->young, h);
  }
  denom = indicator_norm_analytic(s, a);

  if (numer < 0.0 || denom < 0.0) {
    // Lambda/Marcinkiewicz (or untabulated) route: grid samples.
    const GridFn hg = GridFn::sample(grid, [&h](double t) { return h(t); });
    const GridFn chi = GridFn::indicator(grid, a);
    numer = norm(s, hg);
    denom = norm(s, chi);
  }

  IndicatorComparisonReport rep;
  rep.lower_bound = (1.0 - std::pow(2.0, -zeta)) / 2.0;
  rep.ratio = numer / (a_z * denom);
  rep.holds = rep.ratio >= rep.lower_bound - 1e-6 && rep.ratio <= 1.0 + 1e-6;
  return rep;
}

const char* to_string(AltDecision d) {
  switch (d) {
    case AltDecision::largest_orlicz_exists: return "largest_orlicz_exists";
    case AltDecision::no_largest_orlicz: return "no_largest_orlicz";
    case AltDecision::undecided: return "undecided";
  }
  return "unknown";
}

AltEvidence principal_alternative(const FundamentalFn& phi_x,
                                  const XNormEvaluator& x_norm,
                                  const std::vector<TestFn>& family,
                                  const std::vector<double>& t_min_ladder,
                                  int points_per_decade) {
  if (family.empty()) {
    fail(ErrorKind::parameter, "principal_alternative: empty test family");
  }
  const YoungFn A = fundamental_orlicz(phi_x);
  const bool a_is_delta2 = A.asymptote() && delta2(A);

  std::vector<GridPtr> grids;
  grids.reserve(t_min_ladder.size());
  for (double t_min : t_min_ladder) {
    grids.push_back(make_log_grid(t_min, points_per_decade));
  }
  const GridPtr& deepest = grids.back();

  AltEvidence ev;
  std::vector<double> max_ratio_per_grid(grids.size(), 0.0);
  double best_witness_slope = 0.0;

  for (const TestFn& tf : family) {
    std::vector<double> lux(grids.size()), xn(grids.size());
    bool usable = true;
    for (std::size_t k = 0; k < grids.size(); ++k) {
      const GridFn f = tf.sample(grids[k]);
      lux[k] = luxemburg_norm(A, f);
      xn[k] = x_norm(tf, grids[k]);
      if (!(lux[k] > 0.0) || !std::isfinite(lux[k]) || !std::isfinite(xn[k])) {
        usable = false;
        break;
      }
    }
    if (!usable) continue;

    // Membership gate for f in L(X).
    bool member;
    if (const auto* pl = std::get_if<PowLogFn>(&tf.fn); pl && a_is_delta2) {
      const MembershipReport mr = orlicz_membership(A, *pl, deepest);
      if (mr.conclusive) {
        member = mr.member;
      } else {
        member = lux.back() <= lux.front() * 1.25;
      }
    } else if (std::holds_alternative<StepFn>(tf.fn)) {
      member = true;  // bounded functions belong to every Orlicz space
    } else {
      member = lux.back() <= lux.front() * 1.25;
    }
    if (!member) continue;

    for (std::size_t k = 0; k < grids.size(); ++k) {
      max_ratio_per_grid[k] = std::max(max_ratio_per_grid[k], xn[k] / lux[k]);
    }

    // Witness test: the member's X-norm must grow like a power of the depth
    // on EVERY refinement step -- transients that merely saturate (finite
    // norms still converging on shallow grids) flatten at the last step.
    bool growing = grids.size() >= 2;
    for (std::size_t k = 1; k < grids.size() && growing; ++k) {
      if (!(xn[k] > 0.0) || !(xn[k - 1] > 0.0)) {
        growing = false;
        break;
      }
      const double du = std::log(u_of_t(t_min_ladder[k])) -
                        std::log(u_of_t(t_min_ladder[k - 1]));
      growing = std::log(xn[k] / xn[k - 1]) / du >= 0.05;
    }
    if (growing) {
      std::vector<double> xs, ys;
      for (std::size_t k = 0; k < grids.size(); ++k) {
        xs.push_back(std::log(u_of_t(t_min_ladder[k])));
        ys.push_back(std::log(xn[k]));
      }
      const double slope = ols_slope(xs, ys);
      if (slope > best_witness_slope) {
        best_witness_slope = slope;
        ev.decision = AltDecision::no_largest_orlicz;
        ev.witness_label = tf.label;
        ev.witness_slope = slope;
      }
    }
  }

  for (std::size_t k = 0; k < grids.size(); ++k) {
    ev.ratio_trend.emplace_back(t_min_ladder[k], max_ratio_per_grid[k]);
  }
  ev.max_ratio = max_ratio_per_grid.back();

  if (ev.decision == AltDecision::no_largest_orlicz) return ev;

  double lo = kInf, hi = 0.0;
  for (double r : max_ratio_per_grid) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  if (hi > 0.0 && std::isfinite(hi) && hi <= lo * 1.25) {
    ev.decision = AltDecision::largest_orlicz_exists;
  } else {
    ev.decision = AltDecision::undecided;
    ev.inconclusive = true;
  }
  return ev;
}

AltDecision level_transfer(AltDecision marcinkiewicz_result) {
  if (marcinkiewicz_result == AltDecision::no_largest_orlicz) {
    return AltDecision::no_largest_orlicz;
  }
  return AltDecision::undecided;  // the transfer is one-directional
}

const char* to_string(PipelineVerdict v) {
  switch (v) {
    case PipelineVerdict::nonexistence_certified: return "nonexistence_certified";
    case PipelineVerdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

NonexistenceReport witness_pipeline(int m, double alpha, double q,
                                  std::optional<double> beta,
                                  const GridPtr& grid) {
  const CopsonOp op(m, alpha);  // validates the limiting regime
  const double gamma = op.gamma();

  NonexistenceReport rep;
  rep.m = m;
  rep.alpha = alpha;
  rep.q = q;
  rep.gamma = gamma;
  rep.beta_interval = {-gamma, 1.0 - 2.0 * gamma};

  const double b = beta.value_or(0.5 * (rep.beta_interval.first +
                                        rep.beta_interval.second));
  if (!(b > rep.beta_interval.first) || !(b < rep.beta_interval.second)) {
    fail(ErrorKind::parameter,
         "witness_pipeline: beta must lie strictly inside (" +
             std::to_string(rep.beta_interval.first) + ", " +
             std::to_string(rep.beta_interval.second) + ")");
  }
  rep.beta = b;

  // (1) Fundamental level of the target scale.
  rep.target_level_phi = PowLogFn::atom(1.0, 0.0, -(1.0 - gamma));
  rep.q_stated_range_ok = q >= 1.0 / gamma - 1e-9;
  rep.q_proof_range_ok = q >= 1.0 / (1.0 - gamma) - 1e-9;
  const double zeta = std::isinf(q) ? gamma - 1.0 : -1.0 + gamma - 1.0 / q;
  rep.target_admissible = validate_spec(
      std::isinf(q) ? SpaceSpec{LorentzZygmund{kInf, kInf, zeta}}
                    : SpaceSpec{LorentzZygmund{kInf, q, zeta}});

  // (2) Optimal-domain fundamental function and its closed form.
  rep.phi_x_closed = PowLogFn::atom(1.0, gamma, gamma - 1.0);
  const SpaceSpec exp_target{
      OrliczSpace{YoungFn::exponential(1.0 / (1.0 - gamma))}};
  EmbeddingProblem prob;
  prob.m = m;
  prob.alpha = alpha;
  prob.target = exp_target;
  {
    std::vector<std::tuple<double, double, double>> samples;
    for (double a = 1e-10; a < 0.6; a *= 10.0) {
      const double aa = std::min(a, 0.5);
      const GridFn chi = GridFn::indicator(grid, aa);
      const double computed = optimal_domain_norm(prob, chi);
      const double closed = rep.phi_x_closed(aa);
      samples.emplace_back(aa, computed, closed);
    }
    rep.phi_x_crosscheck = compare_on_scales(samples);
    rep.phi_x_ratio_spread =
        rep.phi_x_crosscheck.ratio_max / rep.phi_x_crosscheck.ratio_min;
  }

  // (3) The fundamental Orlicz space of the level.
  const FundamentalFn phi_x = FundamentalFn::from(rep.phi_x_closed, grid);
  const YoungFn A = fundamental_orlicz(phi_x);
  rep.fundamental_orlicz_id = A.asymptote();

  // (4)-(5) Witness membership.
  const PowLogFn witness = PowLogFn::atom(1.0, -gamma, b);
  rep.membership = orlicz_membership(A, witness, grid);

  // (6) Divergence of the reduced inequality: S(t) against (log 2/t).
  const CopsonResult cop = copson(op, witness, grid);
  const Grid& g = *grid;
  rep.s_curve.reserve(g.size());
  std::vector<double> xs, ys;
  const double t_lo = g.t_min();
  const double t_hi = std::min(1e-3, t_lo * 1e10);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.node(i);
    const double numer =
        cop.symbolic ? (*cop.symbolic)(t) : cop.grid_fn[i];
    const double s_val = numer * std::pow(g.u(i), gamma - 1.0);
    rep.s_curve.emplace_back(t, s_val);
    if (t >= t_lo && t <= t_hi && s_val > 0.0) {
      xs.push_back(std::log(g.u(i)));
      ys.push_back(std::log(s_val));
    }
  }
  rep.divergence_slope = ols_slope(xs, ys);
  rep.expected_slope = b + gamma;
  rep.slope_ok = std::abs(rep.divergence_slope - rep.expected_slope) <= 0.10;

  rep.verdict = (rep.membership.conclusive && rep.membership.member &&
                 rep.slope_ok)
                    ? PipelineVerdict::nonexistence_certified
                    : PipelineVerdict::inconclusive;
  return rep;
}

}  // namespace rispace
