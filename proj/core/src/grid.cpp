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

#include "rispace/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rispace {

std::shared_ptr<const Grid> Grid::make_log(double t_min, int points_per_decade) {
  if (!(t_min > 0.0) || !(t_min <= 1e-3)) {
    fail(ErrorKind::parameter,
         "make_log_grid: t_min must lie in (0, 1e-3], got " +
             std::to_string(t_min));
  }
  if (points_per_decade <= 0) {
    fail(ErrorKind::parameter, "make_log_grid: points_per_decade must be positive");
  }

  const double decades = std::log10(1.0 / t_min);
  const auto n_cells =
      static_cast<std::size_t>(std::ceil(points_per_decade * decades - 1e-9));
  const std::size_t n_nodes = n_cells + 1;

  const double u_hi = u_of_t(t_min);  // deep end
  const double u_lo = u_of_t(1.0);    // log 2
  const double du = (u_hi - u_lo) / static_cast<double>(n_cells);

  std::vector<double> nodes(n_nodes), us(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    const double u = u_hi - du * static_cast<double>(i);
    us[i] = u;
    nodes[i] = t_of_u(u);
  }
  // Pin the endpoints exactly; interior nodes keep the uniform-in-u values.
  nodes.front() = t_min;
  us.front() = u_hi;
  nodes.back() = 1.0;
  us.back() = u_lo;

  return std::shared_ptr<const Grid>(
      new Grid(t_min, points_per_decade, std::move(nodes), std::move(us)));
}

std::size_t Grid::index_below(double t) const {
  if (t < t_min_) {
    fail(ErrorKind::range, "Grid::index_below: t below grid span");
  }
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

std::size_t Grid::index_nearest(double t) const {
  const double u = u_of_t(std::clamp(t, t_min_, 1.0));
  const double u_hi = us_.front();
  const double du = (us_.front() - us_.back()) / static_cast<double>(size() - 1);
  const double pos = (u_hi - u) / du;
  const auto i = static_cast<long>(std::lround(pos));
  return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(size()) - 1));
}

GridPtr default_grid() {
  static GridPtr grid = Grid::make_log(kDefaultTMin, kDefaultPointsPerDecade);
  return grid;
}

}  // namespace rispace
