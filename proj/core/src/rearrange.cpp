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

#include "rispace/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rispace/errors.hpp"

namespace rispace {
namespace {

double step_eval(const std::vector<double>& values,
                 const std::vector<double>& cum, double t) {
  // Right-closed cells (cum_{j-1}, cum_j]; clamp above the last breakpoint.
  // Breakpoints are accumulated sums of reordered cell weights, so a query
  // sitting exactly on a level boundary can miss it by an ulp; the relative
  // slack keeps the left-limit convention stable.
  auto it = std::lower_bound(cum.begin(), cum.end(), t * (1.0 - 1e-12));
  if (it == cum.end()) return values.back();
  return values[static_cast<std::size_t>(it - cum.begin())];
}

}  // namespace

double Distribution::operator()(double s) const {
  // Measure of { |f| > s }: piecewise constant, right-continuous.  With j
  // the largest index such that levels[j] <= s, the set { |f| > s } equals
  // { |f| > levels[j] }, whose measure is measures[j].
  if (levels.empty()) return 0.0;
  auto it = std::upper_bound(levels.begin(), levels.end(), s);
  if (it == levels.begin()) return 1.0;  // s below every level
  return measures[static_cast<std::size_t>(it - levels.begin()) - 1];
}

double Rearranged::star_at(double t) const {
  return step_eval(sorted_values, sorted_cum, t);
}

double Rearranged::prefix_integral(double t) const {
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t j = 0; j < sorted_values.size(); ++j) {
    const double hi = sorted_cum[j];
    const double v = sorted_values[j];
    if (t <= hi) {
      const double w = t - prev;
      if (w > 0.0) total += v * w;
      return total;
    }
    total += v * (hi - prev);
    prev = hi;
  }
  return total;
}

double Rearranged::total_integral() const {
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t j = 0; j < sorted_values.size(); ++j) {
    total += sorted_values[j] * (sorted_cum[j] - prev);
    prev = sorted_cum[j];
  }
  return total;
}

Rearranged rearrangement(const GridFn& f) {
  const Grid& g = *f.grid();
  const std::size_t n = g.size();

  // Sort cell indices by |value| descending; ties keep cell order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(f[i]) > std::abs(f[j]);
  });

  std::vector<double> values(n), cum(n);
  double running = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t cell = order[k];
    values[k] = std::abs(f[cell]);
    running += g.cell_weight(cell);
    cum[k] = running;
  }

  // Grid projections.
  std::vector<double> star_vals(n), max_vals(n);
  for (std::size_t k = 0; k < n; ++k) {
    star_vals[k] = step_eval(values, cum, g.node(k));
  }

  // Exact prefix integrals of the sorted step function, then f**(t) = P(t)/t.
  {
    std::vector<double> prefix(n);
    double total = 0.0;
    double prev = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      total += values[j] * (cum[j] - prev);
      prev = cum[j];
      prefix[j] = total;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double t = g.node(k);
      auto it = std::lower_bound(cum.begin(), cum.end(), t);
      std::size_t j = static_cast<std::size_t>(it - cum.begin());
      double p;
      if (j >= n) {
        p = prefix.back();
      } else {
        const double below = j == 0 ? 0.0 : prefix[j - 1];
        const double prev_cum = j == 0 ? 0.0 : cum[j - 1];
        const double w = t - prev_cum;
        p = below + (w > 0.0 ? values[j] * w : 0.0);
      }
      max_vals[k] = p / t;
    }
  }

  // Distribution at the distinct levels (ascending).
  Distribution dist;
  {
    double prev_cum = 0.0;
    // Walk sorted cells from the largest value down; measure above level v
    // is the cumulative weight of cells with value strictly greater.
    for (std::size_t j = 0; j < n; ++j) {
      const bool last_of_level = (j + 1 == n) || (values[j + 1] != values[j]);
      if (last_of_level) {
        dist.levels.push_back(values[j]);
        dist.measures.push_back(prev_cum);
        prev_cum = cum[j];
      }
      if (j + 1 == n) break;
    }
    std::reverse(dist.levels.begin(), dist.levels.end());
    std::reverse(dist.measures.begin(), dist.measures.end());
  }

  return Rearranged(GridFn(f.grid(), std::move(star_vals)),
                    GridFn(f.grid(), std::move(max_vals)), std::move(dist),
                    std::move(values), std::move(cum));
}

Rearranged rearrangement(const PowLogFn& f, const GridPtr& grid) {
  return rearrangement(f.sample(grid).map([](double v) { return std::abs(v); }));
}

HLReport check_hl_inequality(const GridFn& f, const GridFn& g) {
  f.require_same_grid(g, "check_hl_inequality");
  const Grid& grid = *f.grid();

  double lhs = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    lhs += std::abs(f[i] * g[i]) * grid.cell_weight(i);
  }

  const Rearranged rf = rearrangement(f);
  const Rearranged rg = rearrangement(g);

  // Exact integral of f* g* over the merged breakpoints of both step fns.
  double rhs = 0.0;
  {
    std::size_t i = 0, j = 0;
    double prev = 0.0;
    while (i < rf.sorted_cum.size() && j < rg.sorted_cum.size()) {
      const double next = std::min(rf.sorted_cum[i], rg.sorted_cum[j]);
      const double w = next - prev;
      if (w > 0.0) rhs += rf.sorted_values[i] * rg.sorted_values[j] * w;
      prev = next;
      if (rf.sorted_cum[i] <= next) ++i;
      if (j < rg.sorted_cum.size() && rg.sorted_cum[j] <= next) ++j;
    }
  }

  const bool holds =
      std::isinf(rhs) || lhs <= rhs * (1.0 + 1e-9) + 1e-300;
  return HLReport{lhs, rhs, holds};
}

bool hlp_dominates(const GridFn& g1, const GridFn& g2) {
  g1.require_same_grid(g2, "hlp_dominates");
  const Rearranged r1 = rearrangement(g1);
  const Rearranged r2 = rearrangement(g2);
  for (double t : g1.grid()->nodes()) {
    const double p1 = r1.prefix_integral(t);
    const double p2 = r2.prefix_integral(t);
    if (std::isinf(p2)) continue;
    if (p1 > p2 + 1e-12) return false;
  }
  return true;
}

}  // namespace rispace
