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
#include <cstddef>
#include <memory>
#include <vector>

#include "rispace/errors.hpp"

namespace rispace {

/// u-coordinate used throughout: u(t) = log(2/t).  All grids are uniform in
/// u, so resolution is constant per decade of t no matter how close to zero
/// the span reaches.
inline double u_of_t(double t) { return std::log(2.0 / t); }
inline double t_of_u(double u) { return 2.0 * std::exp(-u); }

/// Logarithmic grid on (0, 1]: nodes ascending in t, first node at t_min,
/// last node exactly 1, spacing uniform in u = log(2/t).
///
/// Node i represents the cell (t_{i-1}, t_i] with t_{-1} = 0, so the cells
/// tile (0, 1] and their measures sum to 1.
class Grid {
 public:
  /// Builds a grid with ceil(points_per_decade * log10(1/t_min)) + 1 nodes.
  /// Requires t_min in (0, 1e-3].
  static std::shared_ptr<const Grid> make_log(double t_min,
                                              int points_per_decade);

  double t_min() const { return t_min_; }
  int points_per_decade() const { return ppd_; }
  std::size_t size() const { return nodes_.size(); }

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& us() const { return us_; }

  double node(std::size_t i) const { return nodes_[i]; }
  double u(std::size_t i) const { return us_[i]; }

  double cell_lo(std::size_t i) const { return i == 0 ? 0.0 : nodes_[i - 1]; }
  double cell_hi(std::size_t i) const { return nodes_[i]; }
  double cell_weight(std::size_t i) const { return cell_hi(i) - cell_lo(i); }

  /// Largest index i with node(i) <= t (requires t >= t_min).
  std::size_t index_below(double t) const;

  /// Index of the node nearest to t in u-distance.
  std::size_t index_nearest(double t) const;

  bool same_as(const Grid& other) const {
    return this == &other ||
           (t_min_ == other.t_min_ && ppd_ == other.ppd_ &&
            nodes_.size() == other.nodes_.size());
  }

 private:
  Grid(double t_min, int ppd, std::vector<double> nodes, std::vector<double> us)
      : t_min_(t_min), ppd_(ppd), nodes_(std::move(nodes)), us_(std::move(us)) {}

  double t_min_;
  int ppd_;
  std::vector<double> nodes_;  // ascending in t
  std::vector<double> us_;     // descending, us_[i] = log(2/nodes_[i])
};

using GridPtr = std::shared_ptr<const Grid>;

/// Library-wide default span.  The near-zero behaviour is the whole point of
/// the computations here, so the default reaches t = 1e-30; callers can pass
/// their own grid anywhere one is accepted.
inline constexpr double kDefaultTMin = 1e-30;
inline constexpr int kDefaultPointsPerDecade = 64;

GridPtr default_grid();

inline GridPtr make_log_grid(double t_min, int points_per_decade) {
  return Grid::make_log(t_min, points_per_decade);
}

}  // namespace rispace
