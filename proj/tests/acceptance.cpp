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

// Acceptance suite: each criterion below pins its tolerances in code and
// prints exactly one PASS/FAIL line.  Run a single criterion by name, or no
// argument for the whole battery.
//
// Note on 8c: the claimed dilation bound pairs the stretching operator
// f(t/lambda) with the contraction constant max{1, 1/lambda}; for lambda = 2
// that bound is refuted by chi_(0,1/2) in L^1 (the consistent constant is
// max{1, lambda}).  The check is implemented literally and is expected RED;
// see the repository README for the analysis.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "rispace/family.hpp"
#include "rispace/mazya.hpp"
#include "rispace/operators.hpp"
#include "rispace/optimality.hpp"
#include "rispace/quadrature.hpp"
#include "rispace/rearrange.hpp"
#include "rispace/spaces.hpp"
#include "support.hpp"

using namespace rispace;

namespace {

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> run;
};

bool check(bool ok, int& failures) {
  if (!ok) ++failures;
  return ok;
}

// ---------------------------------------------------------------------------
// 1. Rearrangement against the sort-by-measure oracle; Hardy-Littlewood.
// ---------------------------------------------------------------------------
bool accept_rearrangement(std::string& detail) {
  const GridPtr g = default_grid();
  int failures = 0;

  const auto steps = random_step_functions(1001, 1000, 12, false);
  std::vector<double> weights(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) weights[i] = g->cell_weight(i);
  for (const auto& s : steps) {
    const GridFn f = s.sample(g);
    const Rearranged r = rearrangement(f);
    const oracle::SortedStep sorted = oracle::sort_by_measure(f.values(), weights);
    for (std::size_t i = 0; i < g->size(); ++i) {
      if (r.star[i] != sorted.at(g->node(i))) {
        ++failures;
        break;
      }
    }
  }

  const auto pairs = random_step_functions(2002, 2000, 12, false);
  int hl_violations = 0;
  for (std::size_t k = 0; k + 1 < pairs.size(); k += 2) {
    const HLReport rep =
        check_hl_inequality(pairs[k].sample(g), pairs[k + 1].sample(g));
    if (!rep.holds) ++hl_violations;
  }
  check(hl_violations == 0, failures);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "1000 step functions == oracle, 1000 pairs HL violations=%d",
                hl_violations);
  detail = buf;
  return failures == 0;
}

// ---------------------------------------------------------------------------
// 2. Luxemburg vs L^p and the inverse identity for the fundamental function.
// ---------------------------------------------------------------------------
bool accept_luxemburg(std::string& detail) {
  const GridPtr g = default_grid();
  int failures = 0;
  double worst_lp = 0.0;

  const auto steps = random_step_functions(7, 100, 12, false);
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    const YoungFn A = YoungFn::power(p);
    for (const auto& s : steps) {
      const GridFn f = s.sample(g);
      const double lp = norm(Lebesgue{p}, f);
      if (!(lp > 0.0)) continue;
      const double lux = luxemburg_norm(A, f);
      worst_lp = std::max(worst_lp, oracle::rel_err(lux, lp));
      check(oracle::rel_err(lux, lp) <= 1e-8, failures);
    }
  }

  double worst_inv = 0.0;
  for (const YoungFn& A : {YoungFn::power(2.0), YoungFn::power_log(2.0, -1.0),
                           YoungFn::exponential(2.0)}) {
    for (std::size_t i = 0; i < g->size(); ++i) {
      const double t = g->node(i);
      const double numeric = luxemburg_norm(A, GridFn::indicator(g, t));
      const double defect = std::abs(numeric * A.inverse(1.0 / t) - 1.0);
      worst_inv = std::max(worst_inv, defect);
      check(defect <= 1e-6, failures);
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "worst L^p deviation=%.2e, worst inverse-identity defect=%.2e",
                worst_lp, worst_inv);
  detail = buf;
  return failures == 0;
}

// ---------------------------------------------------------------------------
// 3. Model-domain geometry.
// ---------------------------------------------------------------------------
bool accept_mazya_geometry(std::string& detail) {
  int failures = 0;
  double worst = 0.0;
  for (auto [n, alpha] : {std::pair{2, 0.5}, {2, 0.9}, {3, 2.0 / 3.0},
                          {3, 0.75}, {4, 0.75}}) {
    const double vol = omega_volume(MazyaParams(n, alpha));
    worst = std::max(worst, std::abs(vol - 1.0));
    check(std::abs(vol - 1.0) <= 1e-6, failures);
  }

  const MazyaParams tri(2, 0.5);
  double worst_eta = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double t = 2.0 * i / 1000.0;
    const double defect = std::abs(eta(tri, t) - 0.5 * (1.0 - 0.5 * t));
    worst_eta = std::max(worst_eta, defect);
  }
  check(worst_eta <= 1e-15, failures);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "worst |volume-1|=%.2e, triangle profile defect=%.2e", worst,
                worst_eta);
  detail = buf;
  return failures == 0;
}

// ---------------------------------------------------------------------------
// 4. Fundamental-function sandwich and the two forms of the reduction.
// ---------------------------------------------------------------------------
bool accept_induced_phi_sandwich(std::string& detail) {
  const GridPtr g = default_grid();
  int failures = 0;
  double worst_mismatch = 0.0;

  const std::vector<PowLogFn> levels = {
      PowLogFn::atom(1.0, 0.0, -0.5),
      PowLogFn::atom(1.0, 0.25, 0.0),
      PowLogFn::atom(1.0, 0.5, -1.0),
  };
  for (double alpha : {0.5, 2.0 / 3.0, 0.9}) {
    const IsoProfile iso = model_profile(alpha);
    for (const auto& rep : levels) {
      const FundamentalFn phi_y = FundamentalFn::from(rep, g);
      const FundamentalFn phi_x = induced_domain_phi(phi_y, iso);

      // Lower bound: the single-scale term never exceeds the supremum form.
      const double e = 1.0 - alpha;
      for (std::size_t i = 0; i < g->size(); ++i) {
        const double t = g->node(i);
        const double mass =
            (std::pow(t, e) - std::pow(0.5 * t, e)) / e;  // cell of 1/I
        const double single = phi_y(0.5 * t) * mass;
        if (!(phi_x(t) >= single * (1.0 - 1e-12))) {
          ++failures;
          break;
        }
      }

      // Upper bound: prefix sums of the suffix-sup integrand dominate.
      {
        std::vector<double> H(g->size());
        double run = 0.0;
        for (std::size_t i = g->size(); i-- > 0;) {
          run = std::max(run, phi_y(g->node(i)) / iso(g->node(i)));
          H[i] = run;
        }
        double acc = 0.0;
        for (std::size_t i = 0; i < g->size(); ++i) {
          acc += H[i] * g->cell_weight(i);
          if (!(phi_x.samples()[i] <= acc * (1.0 + 1e-9))) {
            ++failures;
            break;
          }
        }
      }

      // The supremum and min-split forms agree, and the geometric-sum bound
      // holds at every node with sigma = 1/2.
      const PsiResult ps = psi(alpha, phi_y, g);
      worst_mismatch = std::max(worst_mismatch, ps.max_mismatch);
      check(ps.max_mismatch <= 1e-9, failures);
      const double c = (1.0 - std::pow(2.0, -(1.0 - alpha))) / std::log(2.0);
      double acc = 0.0;
      for (std::size_t i = 0; i < g->size(); ++i) {
        acc += ps.sup_form[i] / g->node(i) * g->cell_weight(i);
        if (!(ps.sup_form[i] >= c * acc * (1.0 - 1e-9))) {
          ++failures;
          break;
        }
      }
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "9 (phi_Y, alpha) pairs; worst two-form mismatch=%.2e",
                worst_mismatch);
  detail = buf;
  return failures == 0;
}

// ---------------------------------------------------------------------------
// 5. Fundamental function of the optimal domain for the exponential target.
// ---------------------------------------------------------------------------
bool accept_optimal_domain_fundamental(std::string& detail) {
  const GridPtr g = default_grid();
  EmbeddingProblem p;
  p.m = 1;
  p.alpha = 0.5;
  p.target = OrliczSpace{YoungFn::exponential(2.0)};

  double lo = kInf, hi = 0.0;
  for (double a = 1e-10; a <= 0.5; a *= 10.0) {
    const double aa = std::min(a, 0.5);
    const double computed = optimal_domain_norm(p, GridFn::indicator(g, aa));
    const double closed = std::sqrt(aa) * std::pow(u_of_t(aa), -0.5);
    const double r = computed / closed;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  const double spread = hi / lo;

  char buf[160];
  std::snprintf(buf, sizeof buf, "ratio range [%.3f, %.3f], spread=%.3f (<= 20)",
                lo, hi, spread);
  detail = buf;
  return spread <= 20.0 && lo > 0.0;
}

// ---------------------------------------------------------------------------
// 6. Witness divergence slopes and membership on the lattice.
// ---------------------------------------------------------------------------
bool accept_witness_divergence(std::string& detail) {
  int failures = 0;
  double worst_dev = 0.0;
  const GridPtr g = default_grid();

  for (double alpha : {0.5, 2.0 / 3.0, 0.9}) {
    const double gamma = 1.0 - alpha;
    const double lo = -gamma;
    const double hi = 1.0 - 2.0 * gamma;
    for (double frac : {0.2, 0.4, 0.6}) {
      const double beta = lo + frac * (hi - lo);
      const NonexistenceReport rep = witness_pipeline(1, alpha, kInf, beta, g);
      const double dev = std::abs(rep.divergence_slope - (beta + gamma));
      worst_dev = std::max(worst_dev, dev);
      check(dev <= 0.10, failures);
      check(rep.membership.conclusive && rep.membership.member, failures);
    }
    // Membership flips above the threshold.
    const double beta_out = 1.0 - 2.0 * gamma + 0.05;
    const YoungFn A = fundamental_orlicz(
        FundamentalFn::from(PowLogFn::atom(1.0, gamma, gamma - 1.0), g));
    const MembershipReport mem =
        orlicz_membership(A, PowLogFn::atom(1.0, -gamma, beta_out), g);
    check(!mem.member, failures);
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "9 witnesses, worst |slope - (beta+gamma)| = %.4f (<= 0.1)",
                worst_dev);
  detail = buf;
  return failures == 0;
}

// ---------------------------------------------------------------------------
// 7. Principal alternative, stable under refinement.
// ---------------------------------------------------------------------------
bool accept_principal_alternative(std::string& detail) {
  int failures = 0;
  auto family = default_family(0, 30);
  family.push_back(TestFn{PowLogFn::atom(1.0, -0.5, -0.25), "witness"});

  const std::vector<std::vector<double>> ladders = {
      {1e-4, 1e-7, 1e-10}, {1e-8, 1e-14, 1e-20}, {1e-10, 1e-20, 1e-30}};

  for (const auto& ladder : ladders) {
    const GridPtr g = make_log_grid(ladder.back(), kDefaultPointsPerDecade);

    // Exponential-target level: no largest Orlicz space.
    {
      const FundamentalFn phi_x =
          FundamentalFn::from(PowLogFn::atom(1.0, 0.5, -0.5), g);
      EmbeddingProblem p;
      p.m = 1;
      p.alpha = 0.5;
      p.target = OrliczSpace{YoungFn::exponential(2.0)};
      const XNormEvaluator x_norm = [p](const TestFn& tf, const GridPtr& grid) {
        return optimal_domain_norm(p, tf.sample(grid));
      };
      const AltEvidence ev = principal_alternative(phi_x, x_norm, family, ladder);
      check(ev.decision == AltDecision::no_largest_orlicz, failures);
    }

    // Subcritical Lorentz level: the fundamental Orlicz space embeds.
    {
      const FundamentalFn phi_x =
          FundamentalFn::from(PowLogFn::atom(1.0, 0.75, 0.0), g);
      const XNormEvaluator x_norm = [](const TestFn& tf, const GridPtr& grid) {
        return norm(Lorentz{4.0 / 3.0, 4.0}, tf.sample(grid));
      };
      const AltEvidence ev = principal_alternative(phi_x, x_norm, family, ladder);
      check(ev.decision == AltDecision::largest_orlicz_exists, failures);
    }
  }

  detail = "both verdicts stable over ladders ending at 1e-10, 1e-20, 1e-30";
  return failures == 0;
}

// ---------------------------------------------------------------------------
// 8a. Weighted supremum-operator condition stays flat.
// ---------------------------------------------------------------------------
bool accept_weighted_sup(std::string& detail) {
  int failures = 0;
  double worst_spread = 0.0;
  for (double gamma : {0.1, 0.5, 0.9}) {
    const WeightedSupReport rep = weighted_sup_condition(gamma);
    double lo = kInf, hi = 0.0;
    for (const auto& [t, r] : rep.refinement) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    worst_spread = std::max(worst_spread, hi / lo);
    check(rep.holds && hi <= lo * 1.10, failures);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst refinement spread=%.4f (<= 1.10)",
                worst_spread);
  detail = buf;
  return failures == 0;
}

// Shared dilation sweep.
bool dilation_bound_holds(double lambda, double bound, double& worst) {
  const GridPtr g = make_log_grid(1e-10, kDefaultPointsPerDecade);
  const std::vector<SpaceSpec> specs = {
      Lebesgue{1.0},
      Lebesgue{2.0},
      Lebesgue{kInf},
      Lorentz{2.0, 1.0},
      Lorentz{3.0, kInf},
      LorentzZygmund{1.0, 1.0, 1.0},
      LorentzZygmund{kInf, kInf, -0.5},
      LorentzZygmund{kInf, 2.0, -1.0},
      OrliczSpace{YoungFn::exponential(2.0)},
      OrliczSpace{YoungFn::power_log(2.0, -1.0)},
  };
  auto steps = random_step_functions(99, 50, 10, true);
  bool ok = true;
  for (const auto& spec : specs) {
    for (const auto& s : steps) {
      const GridFn f = s.sample(g);
      const double nf = norm(spec, f);
      if (!(nf > 0.0) || !std::isfinite(nf)) continue;
      const double ratio = norm(spec, dilate(lambda, f)) / nf;
      worst = std::max(worst, ratio / bound);
      if (!(ratio <= bound * (1.0 + 1e-6))) ok = false;
    }
  }
  return ok;
}

// 8b. Dilation bound max{1, 1/lambda} for the contractive directions.
bool accept_dilation_contractive(std::string& detail) {
  double worst = 0.0;
  bool ok = true;
  for (double lambda : {0.125, 0.5}) {
    ok = dilation_bound_holds(lambda, std::max(1.0, 1.0 / lambda), worst) && ok;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst ratio/bound=%.4f (<= 1)", worst);
  detail = buf;
  return ok;
}

// 8c. The same claimed bound at lambda = 2 (expected RED: the stretching
// direction obeys max{1, lambda}, not max{1, 1/lambda}).
bool accept_dilation_expansion_claim(std::string& detail) {
  double worst = 0.0;
  const bool ok = dilation_bound_holds(2.0, std::max(1.0, 1.0 / 2.0), worst);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "worst ratio/bound=%.4f; the claimed constant 1 is refuted "
                "(consistent constant is lambda = 2)",
                worst);
  detail = buf;
  return ok;
}

// 8d. Characteristic-function norm comparison across the lattice.
bool accept_indicator_comparison(std::string& detail) {
  const GridPtr g = make_log_grid(1e-10, kDefaultPointsPerDecade);
  const std::vector<SpaceSpec> specs = {
      Lebesgue{1.0},
      Lebesgue{2.0},
      Lebesgue{kInf},
      Lorentz{2.0, 1.0},
      LorentzZygmund{kInf, 2.0, -1.0},
      OrliczSpace{YoungFn::exponential(2.0)},
  };
  int failures = 0;
  double worst_hi = 0.0, worst_lo = kInf;
  for (double zeta : {0.5, 1.0, 2.0}) {
    for (double a : {1e-8, 1e-3, 0.4}) {
      for (const auto& s : specs) {
        const IndicatorComparisonReport rep = indicator_comparison(zeta, a, s, g);
        worst_hi = std::max(worst_hi, rep.ratio);
        worst_lo = std::min(worst_lo, rep.ratio / rep.lower_bound);
        check(rep.holds, failures);
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "54 cases; max ratio=%.4f (<= 1), min ratio/lower-bound=%.3f "
                "(>= 1)",
                worst_hi, worst_lo);
  detail = buf;
  return failures == 0;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"1_rearrangement_oracle", accept_rearrangement},
      {"2_luxemburg_consistency", accept_luxemburg},
      {"3_mazya_geometry", accept_mazya_geometry},
      {"4_induced_phi_sandwich", accept_induced_phi_sandwich},
      {"5_optimal_domain_fundamental", accept_optimal_domain_fundamental},
      {"6_witness_divergence", accept_witness_divergence},
      {"7_principal_alternative", accept_principal_alternative},
      {"8a_weighted_sup_flatness", accept_weighted_sup},
      {"8b_dilation_bound_contractive", accept_dilation_contractive},
      {"8c_dilation_bound_expansion_claim", accept_dilation_expansion_claim},
      {"8d_indicator_comparison", accept_indicator_comparison},
  };

  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (argc > 1 && std::strcmp(argv[1], c.name) != 0) continue;
    ++ran;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("ACCEPT %-36s %s  [%s]\n", c.name, ok ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (ran == 0) {
    std::printf("unknown criterion '%s'\n", argv[1]);
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
