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
#include <variant>
#include <vector>

namespace rispace {

/// Near-infinity behaviour descriptors.  Only the behaviour near infinity
/// determines the Orlicz space over a finite measure, so symbolic
/// comparisons (domination, Delta_2) work on these.
struct PowerLogAsym {
  double p;  // t^p, p >= 1
  double a;  // log^a t factor
};
struct ExpAsym {
  double beta;  // e^{t^beta}, beta > 0
};
struct LInfAsym {};  // inf * chi_{(1, inf)}

using Asymptote = std::variant<PowerLogAsym, ExpAsym, LInfAsym>;

std::string to_string(const Asymptote& a);

/// Young function: convex, non-decreasing, left-continuous, A(0) = 0, with
/// an evaluation map, a generalized right-continuous inverse, and an
/// optional near-infinity descriptor.
///
/// Canonical constructions normalize the near-zero range to A(t) = A(1) t on
/// [0, 1] where the exact shape there is immaterial; `power` is exact
/// everywhere so that L^p identities hold to rounding.
class YoungFn {
 public:
  double operator()(double t) const { return eval_(t); }
  double inverse(double v) const { return inv_(v); }
  const std::optional<Asymptote>& asymptote() const { return asym_; }

  /// A(t) = t^p, p >= 1.
  static YoungFn power(double p);

  /// Equivalent to t^p log^a t near infinity: t^p (1 + log t)^a on [1, inf),
  /// linear below.  Requires p >= 1 and p + a >= 1 (slope condition at the
  /// seam keeps convexity).
  static YoungFn power_log(double p, double a);

  /// Equivalent to e^{t^beta} near infinity: e^{t^beta} - 1 on [1, inf),
  /// linear below.  Requires beta >= 1/2 for convexity on [1, inf).
  static YoungFn exponential(double beta);

  /// inf * chi_{(1, inf)}; the Luxemburg norm against it is the ess sup.
  static YoungFn linfinity();

  /// From an explicit inverse on [1, inf) (extended linearly below); the
  /// evaluation map inverts numerically by bisection.
  static YoungFn from_inverse(std::function<double(double)> inv,
                              std::optional<Asymptote> asym);

  /// Fully custom pair; the caller guarantees the Young axioms.
  static YoungFn custom(std::function<double(double)> eval,
                        std::function<double(double)> inv,
                        std::optional<Asymptote> asym);

  /// Convex piecewise-linear table (t, A(t)); slopes must be non-decreasing.
  /// The last slope extends to infinity.
  static YoungFn from_table(std::vector<std::pair<double, double>> table);

 private:
  YoungFn(std::function<double(double)> eval, std::function<double(double)> inv,
          std::optional<Asymptote> asym)
      : eval_(std::move(eval)), inv_(std::move(inv)), asym_(std::move(asym)) {}

  std::function<double(double)> eval_;
  std::function<double(double)> inv_;
  std::optional<Asymptote> asym_;
};

/// A dominates B near infinity (B(t) <= A(ct) for large t), decided on the
/// descriptors.  LInfinity dominates everything; Exponential beats PowerLog;
/// PowerLog compares (p, a) lexicographically, Exponential compares beta.
bool dominates_near_infinity(const YoungFn& a, const YoungFn& b);
bool equivalent_near_infinity(const YoungFn& a, const YoungFn& b);

/// Delta_2: A(2t) bounded by a constant times A(t).  True exactly for
/// PowerLog asymptotes.
bool delta2(const YoungFn& a);

}  // namespace rispace
