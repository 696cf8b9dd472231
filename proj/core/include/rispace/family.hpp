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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rispace/gridfn.hpp"
#include "rispace/powlog.hpp"

namespace rispace {

/// Deterministic uniform doubles from raw mt19937_64 words, so families are
/// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);   // [lo, hi)
  int uniform_int(int lo, int hi);        // inclusive ends

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

/// Step function on (0, 1]: value values[i] on (breaks[i-1], breaks[i]] with
/// breaks ascending and breaks.back() == 1.  Grid-independent descriptor, so
/// one family instantiates on every refinement grid.
struct StepFn {
  std::vector<double> breaks;
  std::vector<double> values;

  double operator()(double t) const;
  GridFn sample(const GridPtr& grid) const;

  double integral_abs() const;
  double lp_norm(double p) const;  // exact; p = inf gives the max
};

/// One member of a test family: a symbolic power-log function or a step
/// descriptor, with a printable label for reports.
struct TestFn {
  std::variant<PowLogFn, StepFn> fn;
  std::string label;

  GridFn sample(const GridPtr& grid) const;
  bool is_powlog() const { return std::holds_alternative<PowLogFn>(fn); }
};

std::vector<StepFn> random_step_functions(std::uint64_t seed, int count,
                                          int max_cells, bool nonincreasing);

/// Default operator-norm test family: indicators across grid scales,
/// power-log atoms on the lattice a in {-0.9..0} x b in {-2..2}, and seeded
/// random non-increasing step functions.
std::vector<TestFn> default_family(std::uint64_t seed, int n_random = 100);

}  // namespace rispace
