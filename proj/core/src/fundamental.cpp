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

#include "rispace/fundamental.hpp"

#include <algorithm>
#include <cmath>

#include "rispace/errors.hpp"

namespace rispace {

double powlog_zero_limit(const PowLogFn& f) {
  double limit = 0.0;
  for (const auto& a : f.atoms()) {
    if (a.t_exp > 0.0) continue;
    if (a.t_exp == 0.0) {
      if (a.log_exp < 0.0) continue;
      if (a.log_exp == 0.0) {
        limit += a.coef;
        continue;
      }
    }
    // t_exp < 0, or t_exp = 0 with a positive log power: unbounded.
    return a.coef > 0.0 ? kInf : -kInf;
  }
  return limit;
}

FundamentalFn FundamentalFn::build(std::optional<PowLogFn> pl, GridFn samples,
                                   double zero_limit) {
  const Grid& g = *samples.grid();
  const auto& v = samples.values();

  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !std::isfinite(v[i])) {
      fail(ErrorKind::domain, "FundamentalFn: phi must be positive and finite");
    }
    if (i > 0 && v[i] < v[i - 1] * (1.0 - 1e-9)) {
      fail(ErrorKind::domain, "FundamentalFn: phi must be non-decreasing");
    }
  }

  // Worst violation of t/phi(t) monotonicity, recorded as a factor >= 1.
  // Equivalence-class representatives may violate strict quasiconcavity by a
  // bounded factor; the test matrix asserts the factor-2 bound where the
  // calculus relies on it.
  double defect = 1.0;
  double max_q = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double q_here = g.node(i) / v[i];
    if (max_q > 0.0 && q_here < max_q) defect = std::max(defect, max_q / q_here);
    max_q = std::max(max_q, q_here);
  }

  // Least concave majorant of {(0, phi(0+))} + node samples: upper hull.
  std::vector<std::pair<double, double>> pts;
  pts.reserve(v.size() + 1);
  pts.emplace_back(0.0, std::isfinite(zero_limit) ? std::max(zero_limit, 0.0) : 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) pts.emplace_back(g.node(i), v[i]);

  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Drop b when it sits below the chord a--p (cross product test).
      const double cross = (b.first - a.first) * (p.second - a.second) -
                           (b.second - a.second) * (p.first - a.first);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }

  std::vector<double> maj(v.size());
  {
    std::size_t seg = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double t = g.node(i);
      while (seg + 1 < hull.size() && hull[seg + 1].first < t) ++seg;
      if (seg + 1 >= hull.size()) {
        maj[i] = hull.back().second;
      } else {
        const auto& [x0, y0] = hull[seg];
        const auto& [x1, y1] = hull[seg + 1];
        maj[i] = y0 + (y1 - y0) / (x1 - x0) * (t - x0);
      }
    }
  }

  return FundamentalFn(std::move(pl), samples, GridFn(samples.grid(), std::move(maj)),
                       std::move(hull), std::isfinite(zero_limit) ? zero_limit : 0.0,
                       defect);
}

FundamentalFn FundamentalFn::from(const PowLogFn& phi, const GridPtr& grid) {
  return build(phi, phi.sample(grid), powlog_zero_limit(phi));
}

FundamentalFn FundamentalFn::from(const GridFn& phi) {
  // Estimate phi(0+) from the deep-end trend of log phi against log u:
  // a negative slope means phi vanishes at zero.
  const auto& v = phi.values();
  const Grid& g = *phi.grid();
  double zero_limit = v.front();
  if (v.size() >= 8) {
    const double lo = std::log(v.front());
    const double hi = std::log(v[7]);
    const double du = std::log(g.u(0)) - std::log(g.u(7));
    if (du > 0.0 && (lo - hi) / du < -1e-3) zero_limit = 0.0;
  }
  return build(std::nullopt, phi, zero_limit);
}

double FundamentalFn::operator()(double t) const {
  if (powlog_) return (*powlog_)(t);
  return samples_.eval(t);
}

double FundamentalFn::majorant_at(double t) const {
  if (t <= 0.0) return hull_.front().second;
  auto it = std::upper_bound(
      hull_.begin(), hull_.end(), t,
      [](double x, const std::pair<double, double>& p) { return x < p.first; });
  if (it == hull_.end()) return hull_.back().second;
  if (it == hull_.begin()) return hull_.front().second;
  const auto& [x1, y1] = *it;
  const auto& [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) / (x1 - x0) * (t - x0);
}

}  // namespace rispace
