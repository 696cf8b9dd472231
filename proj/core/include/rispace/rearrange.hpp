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

#include <vector>

#include "rispace/gridfn.hpp"
#include "rispace/powlog.hpp"

namespace rispace {

/// Distribution function f_*(s) = |{ |f| > s }| of a step function,
/// tabulated at its distinct levels (ascending).  Right-continuous:
/// measure(i) is the measure strictly above level(i).
struct Distribution {
  std::vector<double> levels;
  std::vector<double> measures;

  double operator()(double s) const;
};

/// Rearrangement bundle of one function: the non-increasing rearrangement
/// f*, the maximal function f**, the distribution function, and the exact
/// sorted step representation that the three are computed from.
///
/// A GridFn is rearranged as the step function equal to each sample on its
/// cell, so sorting cells by |value| (ties broken by cell order) gives f*
/// exactly; the grid projections `star` and `maximal` evaluate that sorted
/// step at the grid nodes (cells are right-closed, so the node at measure 1
/// carries the least value).
class Rearranged {
 public:
  GridFn star;
  GridFn maximal;
  Distribution distribution;

  /// Sorted step representation: values non-increasing, cum ascending with
  /// cum.back() == 1 up to rounding.
  std::vector<double> sorted_values;
  std::vector<double> sorted_cum;

  /// f* evaluated exactly (right-closed cells).
  double star_at(double t) const;

  /// Exact integral of f* over (0, t].
  double prefix_integral(double t) const;

  /// Exact integral of f* over (0, 1] = integral of |f|.
  double total_integral() const;

  Rearranged(GridFn s, GridFn m, Distribution d, std::vector<double> values,
             std::vector<double> cum)
      : star(std::move(s)),
        maximal(std::move(m)),
        distribution(std::move(d)),
        sorted_values(std::move(values)),
        sorted_cum(std::move(cum)) {}
};

Rearranged rearrangement(const GridFn& f);
Rearranged rearrangement(const PowLogFn& f, const GridPtr& grid);

struct HLReport {
  double lhs;  // integral of |f g|
  double rhs;  // integral of f* g* (exact over merged breakpoints)
  bool holds;
};

/// Hardy–Littlewood check on two step functions over the same grid.
HLReport check_hl_inequality(const GridFn& f, const GridFn& g);

/// Hardy–Littlewood–Pólya domination: integral_0^t g1* <= integral_0^t g2*
/// at every grid node (1e-12 absolute slack).
bool hlp_dominates(const GridFn& g1, const GridFn& g2);

}  // namespace rispace
