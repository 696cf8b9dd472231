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

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rispace {

enum class EqVerdict { equivalent, diverging, inconclusive };

const char* to_string(EqVerdict v);

/// Ratio statistics of two positive quantities across scales t (near zero).
/// The log-log slope is of log(x/y) against log log(2/t); |slope| below
/// kEquivalentSlopeTol counts as flat.
struct EquivalenceReport {
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  double loglog_slope = 0.0;
  EqVerdict verdict = EqVerdict::inconclusive;
};

inline constexpr double kEquivalentSlopeTol = 0.05;
inline constexpr double kDivergingSlopeTol = 0.10;

/// Builds the report from (t, x, y) samples; pairs with non-finite or
/// non-positive entries are skipped.
EquivalenceReport compare_on_scales(
    const std::vector<std::tuple<double, double, double>>& t_x_y);

/// Ordinary least squares slope of y against x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace rispace
