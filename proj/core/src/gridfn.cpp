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

#include "rispace/gridfn.hpp"

#include <algorithm>
#include <cmath>

namespace rispace {

double GridFn::eval(double t) const {
  const auto& nodes = grid_->nodes();
  if (t <= nodes.front()) return values_.front();
  if (t >= nodes.back()) return values_.back();
  auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - nodes.begin());
  const std::size_t lo = hi - 1;
  if (std::isinf(values_[lo]) || std::isinf(values_[hi])) {
    return std::max(values_[lo], values_[hi]);
  }
  const double u = u_of_t(t);
  const double u_lo = grid_->u(lo);
  const double u_hi = grid_->u(hi);
  double w = (u_lo - u) / (u_lo - u_hi);
  // Snap queries that hit a node up to rounding so sampling is exact there.
  if (w < 1e-12) w = 0.0;
  if (w > 1.0 - 1e-12) w = 1.0;
  return values_[lo] + w * (values_[hi] - values_[lo]);
}

}  // namespace rispace
