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
#include <string_view>
#include <vector>

#include "rispace/gridfn.hpp"
#include "rispace/grid.hpp"

namespace rispace {

/// One term c * t^a * (log(2/t))^b on (0,1).
struct PowLogAtom {
  double coef;     // c, nonzero after normalization
  double t_exp;    // a
  double log_exp;  // b
};

/// Finite sum of power-log atoms.  This is the exact representation for the
/// test and witness functions of the calculus: sums stay closed under
/// addition, scalar multiples, and the kernel integrations that admit
/// closed-form antiderivatives.
///
/// Text form: atoms separated by ';', each `c*t^a*log^b`,
/// e.g. "1*t^-0.5*log^-0.25; 2*t^0*log^1".
class PowLogFn {
 public:
  PowLogFn() = default;
  explicit PowLogFn(std::vector<PowLogAtom> atoms);

  static PowLogFn atom(double c, double a, double b) {
    return PowLogFn({PowLogAtom{c, a, b}});
  }
  static PowLogFn constant(double c) { return atom(c, 0.0, 0.0); }

  static PowLogFn parse(std::string_view text);
  std::string to_string() const;

  const std::vector<PowLogAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  double operator()(double t) const;

  GridFn sample(const GridPtr& grid) const {
    return GridFn::sample(grid, [this](double t) { return (*this)(t); });
  }

  PowLogFn& operator+=(const PowLogFn& other);
  PowLogFn operator*(double c) const;

  /// t-locations of the interior critical points of each atom separately
  /// (crossings of a*u = b in u = log(2/t) coordinates), clipped to (lo, hi).
  std::vector<double> atom_critical_points(double lo, double hi) const;

  /// The atom that dominates as t -> 0+ (smallest t_exp, then largest
  /// log_exp).  Precondition: not empty.
  const PowLogAtom& leading_atom_at_zero() const;

 private:
  void normalize();
  std::vector<PowLogAtom> atoms_;  // sorted by (t_exp, log_exp), unique, c != 0
};

inline PowLogFn operator+(PowLogFn a, const PowLogFn& b) {
  a += b;
  return a;
}

}  // namespace rispace
