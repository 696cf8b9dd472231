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

#include "rispace/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rispace/errors.hpp"
#include "rispace/gridfn.hpp"

namespace rispace {
namespace {

/// Bisection for the generalized inverse of a non-decreasing map on [0, inf):
/// returns sup{ t : g(t) <= v }.
double invert_monotone(const std::function<double(double)>& g, double v) {
  if (v <= 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  while (g(hi) <= v && guard++ < 4100) hi *= 2.0;
  if (guard >= 4100) return kInf;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) <= v) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::string to_string(const Asymptote& a) {
  std::ostringstream out;
  if (const auto* pl = std::get_if<PowerLogAsym>(&a)) {
    out << "t^" << pl->p;
    if (pl->a != 0.0) out << " log^" << pl->a << " t";
  } else if (const auto* e = std::get_if<ExpAsym>(&a)) {
    out << "exp(t^" << e->beta << ")";
  } else {
    out << "Linf";
  }
  return out.str();
}

YoungFn YoungFn::power(double p) {
  if (!(p >= 1.0)) {
    fail(ErrorKind::parameter, "YoungFn::power: need p >= 1");
  }
  return YoungFn([p](double t) { return std::pow(t, p); },
                 [p](double v) { return std::pow(v, 1.0 / p); },
                 PowerLogAsym{p, 0.0});
}

YoungFn YoungFn::power_log(double p, double a) {
  if (a == 0.0) return power(p);
  if (!(p >= 1.0) || !(p + a >= 1.0 - 1e-12)) {
    fail(ErrorKind::parameter,
         "YoungFn::power_log: need p >= 1 and p + a >= 1");
  }
  auto eval = [p, a](double t) {
    if (t <= 1.0) return t;
    return std::pow(t, p) * std::pow(1.0 + std::log(t), a);
  };
  auto inv = [p, a, eval](double v) {
    if (v <= 1.0) return v;
    return invert_monotone(eval, v);
  };
  return YoungFn(eval, inv, PowerLogAsym{p, a});
}

YoungFn YoungFn::exponential(double beta) {
  if (!(beta >= 0.5)) {
    fail(ErrorKind::parameter, "YoungFn::exponential: need beta >= 1/2");
  }
  const double a1 = std::exp(1.0) - 1.0;  // value at the seam t = 1
  auto eval = [beta, a1](double t) {
    if (t <= 1.0) return a1 * t;
    return std::exp(std::pow(t, beta)) - 1.0;
  };
  auto inv = [beta, a1](double v) {
    if (v <= a1) return v / a1;
    return std::pow(std::log1p(v), 1.0 / beta);
  };
  return YoungFn(eval, inv, ExpAsym{beta});
}

YoungFn YoungFn::linfinity() {
  auto eval = [](double t) { return t <= 1.0 ? 0.0 : kInf; };
  auto inv = [](double v) { return v < 0.0 ? 0.0 : 1.0; };
  return YoungFn(eval, inv, LInfAsym{});
}

YoungFn YoungFn::from_inverse(std::function<double(double)> inv_hi,
                              std::optional<Asymptote> asym) {
  // inv_hi is trusted on [1, inf); extend linearly below so A stays convex
  // (A^{-1} concave) and A(0) = 0.
  const double at_one = inv_hi(1.0);
  if (!(at_one > 0.0) || !std::isfinite(at_one)) {
    fail(ErrorKind::domain, "YoungFn::from_inverse: inverse(1) must be positive");
  }
  auto inv = [inv_hi, at_one](double v) {
    if (v <= 0.0) return 0.0;
    if (v < 1.0) return at_one * v;
    return inv_hi(v);
  };
  auto eval = [inv](double t) {
    if (t <= 0.0) return 0.0;
    return invert_monotone(inv, t);
  };
  return YoungFn(eval, inv, std::move(asym));
}

YoungFn YoungFn::custom(std::function<double(double)> eval,
                        std::function<double(double)> inv,
                        std::optional<Asymptote> asym) {
  return YoungFn(std::move(eval), std::move(inv), std::move(asym));
}

YoungFn YoungFn::from_table(std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) {
    fail(ErrorKind::parse, "YoungFn::from_table: need at least two rows");
  }
  std::sort(table.begin(), table.end());
  if (table.front().first > 0.0 || table.front().second != 0.0) {
    table.insert(table.begin(), {0.0, 0.0});
  }
  double prev_slope = 0.0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const double dt = table[i].first - table[i - 1].first;
    const double dv = table[i].second - table[i - 1].second;
    if (dt <= 0.0) fail(ErrorKind::parse, "YoungFn::from_table: duplicate t");
    const double slope = dv / dt;
    if (slope < prev_slope - 1e-12 * std::max(1.0, prev_slope)) {
      fail(ErrorKind::parse, "YoungFn::from_table: slopes must be non-decreasing");
    }
    prev_slope = std::max(prev_slope, slope);
  }
  auto points = std::make_shared<std::vector<std::pair<double, double>>>(std::move(table));
  auto eval = [points](double t) {
    const auto& tab = *points;
    if (t <= 0.0) return 0.0;
    auto it = std::lower_bound(
        tab.begin(), tab.end(), t,
        [](const std::pair<double, double>& row, double x) { return row.first < x; });
    std::size_t hi = it == tab.end() ? tab.size() - 1
                                     : static_cast<std::size_t>(it - tab.begin());
    if (hi == 0) hi = 1;
    const auto& [t0, v0] = tab[hi - 1];
    const auto& [t1, v1] = tab[hi];
    return v0 + (v1 - v0) / (t1 - t0) * (t - t0);
  };
  auto inv = [eval](double v) { return invert_monotone(eval, v); };
  return YoungFn(eval, inv, std::nullopt);
}

namespace {

// Domination order on descriptors; larger dominates.
bool dominates(const Asymptote& a, const Asymptote& b) {
  if (std::holds_alternative<LInfAsym>(a)) return true;
  if (std::holds_alternative<LInfAsym>(b)) return false;
  const bool a_exp = std::holds_alternative<ExpAsym>(a);
  const bool b_exp = std::holds_alternative<ExpAsym>(b);
  if (a_exp && b_exp) {
    return std::get<ExpAsym>(a).beta >= std::get<ExpAsym>(b).beta;
  }
  if (a_exp != b_exp) return a_exp;
  const auto& pa = std::get<PowerLogAsym>(a);
  const auto& pb = std::get<PowerLogAsym>(b);
  if (pa.p != pb.p) return pa.p > pb.p;
  return pa.a >= pb.a;
}

const Asymptote& require_asym(const YoungFn& f, const char* who) {
  if (!f.asymptote()) {
    fail(ErrorKind::precondition,
         std::string(who) + ": Young function has no asymptote descriptor");
  }
  return *f.asymptote();
}

}  // namespace

bool dominates_near_infinity(const YoungFn& a, const YoungFn& b) {
  return dominates(require_asym(a, "dominates_near_infinity"),
                   require_asym(b, "dominates_near_infinity"));
}

bool equivalent_near_infinity(const YoungFn& a, const YoungFn& b) {
  return dominates_near_infinity(a, b) && dominates_near_infinity(b, a);
}

bool delta2(const YoungFn& f) {
  const Asymptote& asym = require_asym(f, "delta2");
  if (!std::holds_alternative<PowerLogAsym>(asym)) return false;
  // Spot-check the doubling ratio over [1, 1e6]; polynomial growth keeps it
  // bounded by roughly 2^p.
  const auto& pl = std::get<PowerLogAsym>(asym);
  const double cap = std::pow(2.0, pl.p + std::abs(pl.a) + 2.0);
  for (double t = 1.0; t <= 1e6; t *= 10.0) {
    const double at = f(t);
    if (at > 0.0 && std::isfinite(at) && f(2.0 * t) / at > cap) return false;
  }
  return true;
}

}  // namespace rispace
