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

#include <utility>
#include <vector>

#include "rispace/fundamental.hpp"
#include "rispace/gridfn.hpp"
#include "rispace/powlog.hpp"

namespace rispace {

/// Parameters of the model domain with isoperimetric exponent alpha in
/// dimension n: a horn-shaped body of unit volume whose cross-section radius
/// is eta(x).  omega is the Lebesgue measure of the unit ball in R^{n-1}.
class MazyaParams {
 public:
  MazyaParams(int n, double alpha, int m = 1);

  int n() const { return n_; }
  double alpha() const { return alpha_; }
  int m() const { return m_; }
  double n_prime() const { return static_cast<double>(n_) / (n_ - 1); }
  double omega() const { return omega_; }
  double axis_length() const { return 1.0 / (1.0 - alpha_); }

 private:
  int n_;
  double alpha_;
  int m_;
  double omega_;
};

/// Cross-section radius eta(t) = omega^{-1/(n-1)} (1-(1-alpha)t)^{alpha/((1-alpha)(n-1))}
/// for t along the axis [0, 1/(1-alpha)].
double eta(const MazyaParams& p, double t);

/// Volume integral omega * integral eta(t)^{n-1} dt over the axis, by
/// quadrature; equals 1 for every admissible (n, alpha).
double omega_volume(const MazyaParams& p);

/// Isoperimetric profile I on (0, 1/2], non-decreasing; evaluation beyond
/// 1/2 follows the profile formula (the computations of the fundamental-
/// function engine integrate 1/I across (s/2, s) for s up to 1).
struct IsoProfile {
  PowLogFn profile;          // model profiles are symbolic
  bool pure_power = false;   // single t^alpha atom
  double power_exp = 0.0;

  double operator()(double t) const { return profile(t); }
};

/// Model profile I(t) = t^alpha of the Maz'ya class membership bound.
IsoProfile model_profile(double alpha);

/// Fundamental function of the operator-induced optimal domain space:
/// phi_X(t) = t * sup_{s in (t,1)} (phi_Y(s/2)/s) * integral_{s/2}^s 1/I.
/// Requires phi_Y(0+) = 0; the balance condition is waived for pure-power
/// profiles and checked otherwise.
FundamentalFn induced_domain_phi(const FundamentalFn& phi_y, const IsoProfile& iso);

struct BalanceReport {
  double max_ratio = 0.0;
  bool holds = false;
  bool phi_zero_limit_ok = true;  // the companion hypothesis lim phi_Y = 0
  std::vector<std::pair<double, double>> refinement;  // (t_min, max ratio)
};

/// Balance condition between the two fundamental-function bounds:
/// integral_0^t sup_{tau in (s,1)} phi_Y(tau)/I(tau) ds over
/// t sup_{s in (t,1)} (phi_Y(s/2)/s) integral_{s/2}^s 1/I must stay bounded
/// and flat under refinement.
/// The default ladder reaches t = 1e-250: for profiles t^alpha with alpha
/// near 1 the node-wise ratio approaches its bound like 1/((1-alpha) log(2/t))
/// and shallower grids have not reached the plateau yet.
BalanceReport balance_check(const FundamentalFn& phi_y, const IsoProfile& iso,
                          const std::vector<double>& t_min_ladder = {1e-40,
                                                                     1e-100,
                                                                     1e-250},
                          int points_per_decade = kDefaultPointsPerDecade);

struct PsiResult {
  GridFn sup_form;   // t * sup_{s in (t,1)} phi_Y(s/2) s^-alpha
  GridFn min_form;   // sup_{s in (0,1)} phi_Y(s/2) min(t^{1-a}, t s^-a)
  double max_mismatch = 0.0;  // worst relative gap between the two forms
};

/// The pure-power reduction of the fundamental-function formula, computed by
/// both of its algebraically equal forms.
PsiResult psi(double alpha, const FundamentalFn& phi_y, const GridPtr& grid);

}  // namespace rispace
