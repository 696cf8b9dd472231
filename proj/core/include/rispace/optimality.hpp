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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rispace/family.hpp"
#include "rispace/fundamental.hpp"
#include "rispace/operators.hpp"
#include "rispace/spaces.hpp"
#include "rispace/trend.hpp"

namespace rispace {

/// Embedding instance: order m, isoperimetric exponent alpha, and the pair
/// of spaces.  q tracks the secondary index of targets on the L^{inf,q;.}
/// scale where one is relevant.
struct EmbeddingProblem {
  int m = 1;
  double alpha = 0.5;
  SpaceSpec domain = Lebesgue{2.0};
  SpaceSpec target = Lebesgue{kInf};
  double q = kInf;
};

/// Reduction principle as an empirical certificate: the kernel inequality
/// ||integral_t^1 f(s) s^{-1+m(1-alpha)} ds||_target <= c ||f||_domain
/// holds over the Maz'ya class iff the embedding does, so a bounded verdict
/// certifies and a diverging verdict refutes with the attaining function.
OpNormReport reduction_check(const EmbeddingProblem& p,
                             const std::vector<TestFn>& family,
                             const std::vector<double>& t_min_ladder = {1e-10,
                                                                        1e-20,
                                                                        1e-30},
                             int points_per_decade = kDefaultPointsPerDecade);

/// Optimal-target functional || t^{-1+m(1-alpha)} integral_0^t f* ||_{X'},
/// with X' taken from the closed-form associate table of p.domain.
/// The L^1 associate integrates the piecewise-linear prefix exactly.
double optimal_target_norm(const EmbeddingProblem& p, const GridFn& f);
double optimal_target_norm(const EmbeddingProblem& p, const PowLogFn& f,
                           const GridPtr& grid);

/// Optimal-domain functional || integral_t^1 s^{-1+m(1-alpha)} f*(s) ds ||_target.
/// The supremum over equimeasurable rearrangements of f is realized by f*.
double optimal_domain_norm(const EmbeddingProblem& p, const GridFn& f);
double optimal_domain_norm(const EmbeddingProblem& p, const PowLogFn& f,
                           const GridPtr& grid);

struct IndicatorComparisonReport {
  double ratio = 0.0;        // ||chi_(0,a)(a^z - t^z)|| / (a^z ||chi_(0,a)||)
  double lower_bound = 0.0;  // (1 - 2^-z)/2
  bool holds = false;
};

/// Characteristic-function norm comparison: the ratio always lies in
/// [(1 - 2^-zeta)/2, 1] for every r.i. norm.
IndicatorComparisonReport indicator_comparison(double zeta, double a, const SpaceSpec& s,
                            const GridPtr& grid);

enum class AltDecision { largest_orlicz_exists, no_largest_orlicz, undecided };
const char* to_string(AltDecision d);

struct AltEvidence {
  AltDecision decision = AltDecision::undecided;
  bool inconclusive = false;
  std::string witness_label;      // attaining function for no_largest
  double witness_slope = 0.0;     // growth exponent of the X-norm in log u
  double max_ratio = 0.0;         // sup ||f||_X / ||f||_{L(X)} at the finest grid
  std::vector<std::pair<double, double>> ratio_trend;  // (t_min, max ratio)
};

/// Evaluates a member of the test family in the norm of X at a given grid.
using XNormEvaluator = std::function<double(const TestFn&, const GridPtr&)>;

/// The principal alternative for X with fundamental function phi_x: either
/// the fundamental Orlicz space L(X) embeds into X (largest Orlicz space
/// exists) or some f in L(X) has X-norm growing without bound under grid
/// refinement (no largest Orlicz space).
AltEvidence principal_alternative(const FundamentalFn& phi_x,
                                  const XNormEvaluator& x_norm,
                                  const std::vector<TestFn>& family,
                                  const std::vector<double>& t_min_ladder = {
                                      1e-10, 1e-20, 1e-30},
                                  int points_per_decade = kDefaultPointsPerDecade);

/// Nonexistence transfers from the Marcinkiewicz endpoint to every space on
/// the same fundamental level; the other direction is undecided.
AltDecision level_transfer(AltDecision marcinkiewicz_result);

enum class PipelineVerdict { nonexistence_certified, inconclusive };
const char* to_string(PipelineVerdict v);

struct NonexistenceReport {
  int m = 1;
  double alpha = 0.5;
  double q = kInf;
  double gamma = 0.5;  // m(1 - alpha)

  PowLogFn target_level_phi;           // (log 2/t)^{-(1-gamma)}
  PowLogFn phi_x_closed;               // t^gamma (log 2/t)^{gamma-1}
  EquivalenceReport phi_x_crosscheck;  // measured functional vs closed form
  double phi_x_ratio_spread = 0.0;     // max/min of the crosscheck ratios

  std::optional<Asymptote> fundamental_orlicz_id;

  double beta = 0.0;
  std::pair<double, double> beta_interval{0.0, 0.0};

  MembershipReport membership;

  double divergence_slope = 0.0;
  double expected_slope = 0.0;
  bool slope_ok = false;
  std::vector<std::pair<double, double>> s_curve;  // (t, S(t))

  bool q_stated_range_ok = false;  // q >= 1/gamma
  bool q_proof_range_ok = false;   // q >= 1/(1-gamma)
  bool target_admissible = false;  // Lorentz-Zygmund admissibility of the target

  PipelineVerdict verdict = PipelineVerdict::inconclusive;
};

/// Full witness pipeline: target fundamental level, optimal-domain
/// fundamental function with cross-check, fundamental Orlicz identification,
/// witness membership, and the divergence slope of
/// S(t) = integral_t^1 s^{gamma-1} f_beta(s) ds / (log 2/t)^{1-gamma},
/// which must match beta + gamma.
NonexistenceReport witness_pipeline(int m, double alpha, double q,
                                  std::optional<double> beta = std::nullopt,
                                  const GridPtr& grid = default_grid());

}  // namespace rispace
