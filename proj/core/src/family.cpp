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

#include "rispace/family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rispace/errors.hpp"

namespace rispace {

std::uint64_t Rng::next() {
  // splitmix64; stable everywhere, good enough for test families.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

double StepFn::operator()(double t) const {
  if (t <= 0.0) return values.front();
  auto it = std::lower_bound(breaks.begin(), breaks.end(), t);
  if (it == breaks.end()) return 0.0;
  return values[static_cast<std::size_t>(it - breaks.begin())];
}

GridFn StepFn::sample(const GridPtr& grid) const {
  return GridFn::sample(grid, [this](double t) { return (*this)(t); });
}

double StepFn::integral_abs() const {
  double total = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    total += std::abs(values[i]) * (breaks[i] - prev);
    prev = breaks[i];
  }
  return total;
}

double StepFn::lp_norm(double p) const {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double total = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    total += std::pow(std::abs(values[i]), p) * (breaks[i] - prev);
    prev = breaks[i];
  }
  return std::pow(total, 1.0 / p);
}

GridFn TestFn::sample(const GridPtr& grid) const {
  return std::visit([&](const auto& f) { return f.sample(grid); }, fn);
}

std::vector<StepFn> random_step_functions(std::uint64_t seed, int count,
                                          int max_cells, bool nonincreasing) {
  std::vector<StepFn> out;
  Rng rng(seed);
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const int cells = rng.uniform_int(1, max_cells);
    StepFn f;
    f.breaks.resize(static_cast<std::size_t>(cells));
    f.values.resize(static_cast<std::size_t>(cells));
    for (int i = 0; i + 1 < cells; ++i) {
      // Mix linear and logarithmic break placement so both the bulk and the
      // near-zero decades are exercised.
      if (rng.uniform() < 0.5) {
        f.breaks[static_cast<std::size_t>(i)] = rng.uniform(1e-6, 1.0);
      } else {
        f.breaks[static_cast<std::size_t>(i)] =
            std::pow(10.0, rng.uniform(-8.0, 0.0));
      }
    }
    f.breaks.back() = 1.0;
    std::sort(f.breaks.begin(), f.breaks.end() - 1);
    for (auto& v : f.values) v = rng.uniform(0.0, 4.0);
    if (nonincreasing) {
      std::sort(f.values.begin(), f.values.end(), std::greater<double>());
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<TestFn> default_family(std::uint64_t seed, int n_random) {
  std::vector<TestFn> fam;

  for (double e = -9.0; e <= -1.0; e += 1.0) {
    const double a = std::pow(10.0, e);
    StepFn chi{{a, 1.0}, {1.0, 0.0}};
    std::ostringstream label;
    label << "chi(0,1e" << e << ")";
    fam.push_back(TestFn{chi, label.str()});
  }
  fam.push_back(TestFn{StepFn{{0.5, 1.0}, {1.0, 0.0}}, "chi(0,0.5)"});

  for (double a = -0.9; a < 0.05; a += 0.3) {
    for (double b = -2.0; b <= 2.0; b += 1.0) {
      std::ostringstream label;
      label << "t^" << a << "*log^" << b;
      fam.push_back(TestFn{PowLogFn::atom(1.0, a, b), label.str()});
    }
  }

  const auto steps = random_step_functions(seed, n_random, 12, true);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    fam.push_back(TestFn{steps[i], "step#" + std::to_string(i)});
  }
  return fam;
}

}  // namespace rispace
