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

#include <optional>
#include <variant>
#include <vector>

#include "rispace/gridfn.hpp"
#include "rispace/powlog.hpp"

namespace rispace {

/// Fundamental function candidate phi on (0, 1]: positive, non-decreasing,
/// with t/phi(t) non-decreasing up to a recorded defect factor.  Carries the
/// least concave majorant of its node samples (computed with a convex-hull
/// pass over (t, phi(t)) pairs, anchored at (0, phi(0+))).
///
/// Strict quasiconcavity of the node samples is not enforced: equivalence
/// representatives such as t^{1/2} (log 2/t)^{-1} fail t/phi monotonicity
/// near t = 1 by a bounded factor while remaining equivalent to a concave
/// function.  The worst violation factor is recorded as the defect; a defect
/// above kQuasiconcaveDefectLimit is rejected.
class FundamentalFn {
 public:
  static FundamentalFn from(const PowLogFn& phi, const GridPtr& grid);
  static FundamentalFn from(const GridFn& phi);

  double operator()(double t) const;
  double zero_limit() const { return zero_limit_; }

  const GridPtr& grid() const { return samples_.grid(); }
  const GridFn& samples() const { return samples_; }
  const GridFn& majorant() const { return majorant_; }
  double majorant_at(double t) const;
  double quasiconcavity_defect() const { return defect_; }

  bool is_powlog() const { return powlog_.has_value(); }
  const PowLogFn* powlog() const { return powlog_ ? &*powlog_ : nullptr; }

  static constexpr double kQuasiconcaveDefectLimit = 2.0;

 private:
  FundamentalFn(std::optional<PowLogFn> pl, GridFn samples, GridFn majorant,
                std::vector<std::pair<double, double>> hull, double zero_limit,
                double defect)
      : powlog_(std::move(pl)),
        samples_(std::move(samples)),
        majorant_(std::move(majorant)),
        hull_(std::move(hull)),
        zero_limit_(zero_limit),
        defect_(defect) {}

  static FundamentalFn build(std::optional<PowLogFn> pl, GridFn samples,
                             double zero_limit);

  std::optional<PowLogFn> powlog_;
  GridFn samples_;
  GridFn majorant_;
  std::vector<std::pair<double, double>> hull_;  // vertices, ascending t
  double zero_limit_;
  double defect_;
};

/// phi(0+) of a power-log sum: finite only when every atom has t_exp > 0 or
/// (t_exp = 0 and log_exp <= 0).
double powlog_zero_limit(const PowLogFn& f);

}  // namespace rispace
