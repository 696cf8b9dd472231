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
#include <vector>

#include "rispace/family.hpp"
#include "rispace/gridfn.hpp"
#include "rispace/powlog.hpp"
#include "rispace/spaces.hpp"

namespace rispace {

/// Kernel operator f |-> integral_t^1 f(s) s^{-1+m(1-alpha)} ds, the
/// one-dimensional reduction of order-m embeddings over domains with
/// isoperimetric exponent alpha.  The limiting regime requires
/// m(1-alpha) < 1, i.e. the kernel exponent stays in (-1, 0).
class CopsonOp {
 public:
  CopsonOp(int m, double alpha);

  int m() const { return m_; }
  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }          // m(1-alpha)
  double kernel_exp() const { return gamma_ - 1.0; }

 private:
  int m_;
  double alpha_;
  double gamma_;
};

struct CopsonResult {
  GridFn grid_fn;
  std::optional<PowLogFn> symbolic;  // set when every atom integrates in closed form
};

/// Applies the Copson kernel to a nonnegative function.  PowLogFn inputs
/// with pure-power atoms or with combined exponent -1 keep a symbolic
/// result; everything else integrates cell-exactly on the grid.
CopsonResult copson(const CopsonOp& op, const PowLogFn& f, const GridPtr& grid);
GridFn copson(const CopsonOp& op, const GridFn& f);

/// T_gamma g(t) = t^-gamma sup_{s in [t,1]} s^gamma g*(s).
GridFn sup_op(double gamma, const GridFn& g);
GridFn sup_op(double gamma, const PowLogFn& g, const GridPtr& grid);

/// Dilation (E_lambda f)(t) = f(t/lambda) on (0, lambda], 0 beyond; node
/// values by linear-in-u interpolation (clamped below the grid).
GridFn dilate(double lambda, const GridFn& f);

enum class OpVerdict { bounded, diverging, inconclusive };
const char* to_string(OpVerdict v);

struct OpNormReport {
  double best_ratio = 0.0;
  std::string attaining_function;
  std::vector<std::pair<double, double>> refinement_trend;  // (t_min, best ratio)
  OpVerdict verdict = OpVerdict::inconclusive;
};

using OpApply = std::function<GridFn(const GridFn&)>;

/// Empirical operator norm ||op f||_target / ||f||_domain maximized over the
/// family, tracked across grid refinements t_min in {1e-10, 1e-20, 1e-30}.
/// Flat trends (max/min within 10%) are "bounded"; monotone growth of at
/// least 25% across the refinement ladder is "diverging".
OpNormReport op_norm_estimate(const OpApply& op, const SpaceSpec& domain,
                              const SpaceSpec& target,
                              const std::vector<TestFn>& family,
                              const std::vector<double>& t_min_ladder = {
                                  1e-10, 1e-20, 1e-30},
                              int points_per_decade = kDefaultPointsPerDecade);

struct WeightedSupReport {
  double max_ratio = 0.0;
  bool holds = false;
  std::vector<std::pair<double, double>> refinement;  // (t_min, max ratio)
};

/// Weighted supremum-operator condition with u(t) = t^gamma and
/// v = w = (log 2/t)^{1-gamma}: the node-wise ratio of
/// integral_0^t s^-gamma sup_{s<=tau<=t} u(tau) w(s) ds over
/// integral_0^t v(s) ds must stay bounded and flat under refinement.
WeightedSupReport weighted_sup_condition(double gamma,
                                const std::vector<double>& t_min_ladder = {
                                    1e-10, 1e-20, 1e-30},
                                int points_per_decade = kDefaultPointsPerDecade);

}  // namespace rispace
