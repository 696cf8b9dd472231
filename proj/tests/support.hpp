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

// Test-only oracles, kept independent of the library's quadrature and
// rearrangement paths: plain composite Simpson with interval doubling, dense
// scans, and a by-hand sorting rearrangement.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

inline double rel_err(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

/// Composite Simpson in the variable u = log(2/t), doubling panels until two
/// successive refinements agree.  Integrates f(t) dt over (lo, hi).
inline double integrate_in_u(const std::function<double(double)>& f, double lo,
                             double hi, double tol = 1e-12) {
  const double ua = std::log(2.0 / hi);
  const double ub = std::log(2.0 / lo);
  const auto g = [&f](double u) {
    const double t = 2.0 * std::exp(-u);
    return f(t) * t;
  };
  const auto simpson = [&](int n) {
    const double h = (ub - ua) / n;
    double acc = g(ua) + g(ub);
    for (int i = 1; i < n; ++i) acc += g(ua + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
  };
  double prev = simpson(64);
  for (int n = 128; n <= (1 << 22); n *= 2) {
    const double next = simpson(n);
    if (rel_err(prev, next) < tol) return next;
    prev = next;
  }
  return prev;
}

/// Dense supremum scan, log-spaced.
inline double dense_sup(const std::function<double(double)>& f, double lo,
                        double hi, int n = 20000) {
  const double ua = std::log(2.0 / hi);
  const double ub = std::log(2.0 / lo);
  double best = std::max(f(lo), f(hi));
  for (int i = 1; i < n; ++i) {
    const double u = ua + (ub - ua) * i / n;
    best = std::max(best, f(2.0 * std::exp(-u)));
  }
  return best;
}

/// Sort-by-measure rearrangement of a weighted step function: returns the
/// sorted (value, cumulative-measure) table, ties keeping input order.
struct SortedStep {
  std::vector<double> values;
  std::vector<double> cum;

  // Left-limit evaluation with the same 1-ulp-scale boundary slack the
  // library documents for sorted-step breakpoints.
  double at(double t) const {
    auto it = std::lower_bound(cum.begin(), cum.end(), t * (1.0 - 1e-12));
    if (it == cum.end()) return values.back();
    return values[static_cast<std::size_t>(it - cum.begin())];
  }
};

inline SortedStep sort_by_measure(const std::vector<double>& values,
                                  const std::vector<double>& weights) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(values[i]) > std::abs(values[j]);
  });
  SortedStep s;
  double acc = 0.0;
  for (std::size_t k : order) {
    s.values.push_back(std::abs(values[k]));
    acc += weights[k];
    s.cum.push_back(acc);
  }
  return s;
}

}  // namespace oracle
