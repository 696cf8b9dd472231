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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rispace/fundamental.hpp"
#include "rispace/gridfn.hpp"
#include "rispace/powlog.hpp"
#include "rispace/rearrange.hpp"
#include "rispace/trend.hpp"
#include "rispace/young.hpp"

namespace rispace {

/// Space tags.  p, q use +inf for the infinite index; the Lorentz--Zygmund
/// log index is named zeta here (the ambient isoperimetric exponent keeps
/// the name alpha).
struct Lebesgue {
  double p;
};
struct Lorentz {
  double p, q;
};
struct LorentzZygmund {
  double p, q, zeta;
};
struct OrliczSpace {
  YoungFn young;
};
struct LambdaSpace {
  FundamentalFn phi;
};
struct MarcinkiewiczSpace {
  FundamentalFn phi;
};

using SpaceSpec = std::variant<Lebesgue, Lorentz, LorentzZygmund, OrliczSpace,
                               LambdaSpace, MarcinkiewiczSpace>;

/// Admissibility per the Lorentz conditions (p in (1,inf) with any q, or
/// p = q in {1, inf}) and the Lorentz--Zygmund conditions (p in (1,inf) any
/// (q, zeta); p = q = 1 with zeta >= 0; p = q = inf with zeta <= 0;
/// p = inf, q < inf with zeta + 1/q < 0).
bool validate_spec(const SpaceSpec& s);

std::string space_to_string(const SpaceSpec& s);

/// Mini-language: `L:p` | `Lor:p,q` | `LZ:p,q,zeta` | `expL:beta` |
/// `LlogL:p,a` | `Orlicz:<young-file>` | `Lambda:<powlog>` | `Marc:<powlog>`;
/// `inf` denotes infinity and plain fractions like 4/3 are accepted.
SpaceSpec parse_space(const std::string& text, const GridPtr& grid);

/// Luxemburg norm inf{ lambda > 0 : integral A(f*/lambda) <= 1 }, computed
/// on the sorted cell representation by bracket doubling plus bisection.
double luxemburg_norm(const YoungFn& A, const GridFn& f);
double luxemburg_norm(const YoungFn& A, const PowLogFn& f, const GridPtr& grid);

/// Norm of f in the space s; +inf when the defining expression diverges at
/// the grid scale.  Weighted Lorentz-type integrals are exact per cell
/// against the t^x (log 2/t)^y weight.
double norm(const SpaceSpec& s, const GridFn& f);
double norm(const SpaceSpec& s, const PowLogFn& f, const GridPtr& grid);

/// Fundamental function of the space: closed forms where known (powers of t
/// and log for the Lebesgue/Lorentz/Lorentz--Zygmund scale, 1/A^{-1}(1/t)
/// for Orlicz), otherwise the sampled norm of indicators.  Closed-form
/// representatives that lose monotonicity near t = 1 are replaced by their
/// running maximum, staying in the same equivalence class.
FundamentalFn fundamental(const SpaceSpec& s, const GridPtr& grid);

/// The unique Orlicz space on the fundamental level of phi, via
/// A^{-1}(u) = 1/phi(1/u).  Single power-log representatives map to closed
/// forms with asymptote descriptors; anything else inverts numerically.
YoungFn fundamental_orlicz(const FundamentalFn& phi);

struct MembershipReport {
  bool member = false;
  bool conclusive = false;
  double tail_exponent = 0.0;  // slope of log(decade mass) vs log u; -1 is the divergence line
  std::vector<std::pair<double, double>> integrals;  // (t_min, integral over (t_min, 1))
  EqVerdict verdict = EqVerdict::inconclusive;
};

/// Membership of f in L^A for Delta_2 Young functions, decided by the decay
/// exponent of the per-decade mass of integral A(f*): exponents below -1
/// mean the integral stabilizes, above -1 it grows without bound.
MembershipReport orlicz_membership(const YoungFn& A, const PowLogFn& f,
                                   const GridPtr& grid);

/// Smallest and largest r.i. spaces with fundamental function phi.
std::pair<SpaceSpec, SpaceSpec> endpoint_spaces(const FundamentalFn& phi);

/// Closed-form associate (Koethe dual) table; nullopt when the pair is not
/// tabulated.
std::optional<SpaceSpec> associate_space(const SpaceSpec& s);

/// Hoelder lower bound for the associate norm: max over the family g of
/// integral(f g)/||g||_s.
double associate_norm_lower_bound(const SpaceSpec& s, const GridFn& f,
                                  const std::vector<GridFn>& family);

}  // namespace rispace
