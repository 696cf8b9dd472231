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

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "rispace/grid.hpp"

namespace rispace {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Extended-real-valued sample table over a Grid, one value per node.
/// +inf is a legal value and propagates through quadrature: any cell that
/// touches an infinite sample integrates to +inf.
///
/// Two readings coexist and are used deliberately:
///  * point samples of a continuous function (interpolation is linear in u);
///  * a step function equal to each sample on its cell (t_{i-1}, t_i] --
///    this is the reading the rearrangement calculus works with.
class GridFn {
 public:
  GridFn(GridPtr grid, std::vector<double> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_->size()) {
      fail(ErrorKind::shape, "GridFn: value count does not match node count");
    }
  }

  static GridFn sample(const GridPtr& grid,
                       const std::function<double(double)>& f) {
    std::vector<double> v;
    v.reserve(grid->size());
    for (double t : grid->nodes()) v.push_back(f(t));
    return GridFn(grid, std::move(v));
  }

  static GridFn constant(const GridPtr& grid, double c) {
    return GridFn(grid, std::vector<double>(grid->size(), c));
  }

  /// Characteristic function of (0, a]: 1 on nodes <= a, else 0.
  static GridFn indicator(const GridPtr& grid, double a) {
    return sample(grid, [a](double t) { return t <= a ? 1.0 : 0.0; });
  }

  const GridPtr& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  bool same_grid(const GridFn& other) const {
    return grid_->same_as(*other.grid_);
  }

  /// Linear-in-u interpolation; clamps to the end values outside the span.
  double eval(double t) const;

  bool has_infinite_value() const {
    for (double v : values_) {
      if (std::isinf(v)) return true;
    }
    return false;
  }

  bool is_nonincreasing(double slack = 0.0) const {
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (values_[i] > values_[i - 1] + slack) return false;
    }
    return true;
  }

  GridFn map(const std::function<double(double)>& op) const {
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(values_[i]);
    return GridFn(grid_, std::move(v));
  }

  GridFn& operator*=(double c) {
    for (double& v : values_) v *= c;
    return *this;
  }

  GridFn& operator+=(const GridFn& other) {
    require_same_grid(other, "GridFn::operator+=");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }

  void require_same_grid(const GridFn& other, const char* who) const {
    if (!same_grid(other)) {
      fail(ErrorKind::shape, std::string(who) + ": grid mismatch");
    }
  }

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

inline GridFn operator*(double c, GridFn f) {
  f *= c;
  return f;
}

inline GridFn operator+(GridFn a, const GridFn& b) {
  a += b;
  return a;
}

}  // namespace rispace
