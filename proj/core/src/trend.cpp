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

#include "rispace/trend.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "rispace/grid.hpp"

namespace rispace {

const char* to_string(EqVerdict v) {
  switch (v) {
    case EqVerdict::equivalent: return "equivalent";
    case EqVerdict::diverging: return "diverging";
    case EqVerdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double cov = 0, var = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cov += (x[i] - mx) * (y[i] - my);
    var += (x[i] - mx) * (x[i] - mx);
  }
  if (var == 0.0) return 0.0;
  return cov / var;
}

EquivalenceReport compare_on_scales(
    const std::vector<std::tuple<double, double, double>>& t_x_y) {
  EquivalenceReport rep;
  std::vector<double> log_u, log_ratio;
  rep.ratio_min = std::numeric_limits<double>::infinity();
  rep.ratio_max = 0.0;
  for (const auto& [t, x, y] : t_x_y) {
    if (!(t > 0.0) || !(t <= 1.0)) continue;
    if (!std::isfinite(x) || !std::isfinite(y) || x <= 0.0 || y <= 0.0) continue;
    const double r = x / y;
    rep.ratio_min = std::min(rep.ratio_min, r);
    rep.ratio_max = std::max(rep.ratio_max, r);
    log_u.push_back(std::log(u_of_t(t)));
    log_ratio.push_back(std::log(r));
  }
  if (log_u.size() < 3) {
    rep.verdict = EqVerdict::inconclusive;
    return rep;
  }
  rep.loglog_slope = ols_slope(log_u, log_ratio);
  if (std::abs(rep.loglog_slope) <= kEquivalentSlopeTol) {
    rep.verdict = EqVerdict::equivalent;
  } else if (std::abs(rep.loglog_slope) >= kDivergingSlopeTol) {
    rep.verdict = EqVerdict::diverging;
  } else {
    rep.verdict = EqVerdict::inconclusive;
  }
  return rep;
}

}  // namespace rispace
