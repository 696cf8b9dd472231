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

#include "rispace/powlog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "rispace/errors.hpp"

namespace rispace {
namespace {

double parse_number(std::string_view token, std::string_view context) {
  std::string s(token);
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    fail(ErrorKind::parse, "PowLogFn: expected a number in '" + s +
                               "' while reading " + std::string(context) +
                               " (grammar: c*t^a*log^b)");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

PowLogFn::PowLogFn(std::vector<PowLogAtom> atoms) : atoms_(std::move(atoms)) {
  normalize();
}

void PowLogFn::normalize() {
  std::sort(atoms_.begin(), atoms_.end(), [](const PowLogAtom& x, const PowLogAtom& y) {
    if (x.t_exp != y.t_exp) return x.t_exp < y.t_exp;
    return x.log_exp < y.log_exp;
  });
  std::vector<PowLogAtom> merged;
  for (const auto& a : atoms_) {
    if (!merged.empty() && merged.back().t_exp == a.t_exp &&
        merged.back().log_exp == a.log_exp) {
      merged.back().coef += a.coef;
    } else {
      merged.push_back(a);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const PowLogAtom& a) { return a.coef == 0.0; }),
               merged.end());
  atoms_ = std::move(merged);
}

double PowLogFn::operator()(double t) const {
  const double u = u_of_t(t);
  double sum = 0.0;
  for (const auto& a : atoms_) {
    sum += a.coef * std::pow(t, a.t_exp) * std::pow(u, a.log_exp);
  }
  return sum;
}

PowLogFn& PowLogFn::operator+=(const PowLogFn& other) {
  atoms_.insert(atoms_.end(), other.atoms_.begin(), other.atoms_.end());
  normalize();
  return *this;
}

PowLogFn PowLogFn::operator*(double c) const {
  std::vector<PowLogAtom> atoms = atoms_;
  for (auto& a : atoms) a.coef *= c;
  return PowLogFn(std::move(atoms));
}

std::vector<double> PowLogFn::atom_critical_points(double lo, double hi) const {
  std::vector<double> pts;
  for (const auto& a : atoms_) {
    if (a.t_exp == 0.0) continue;  // monotone in u, no interior critical point
    const double u_star = a.log_exp / a.t_exp;
    if (u_star <= 0.0) continue;
    const double t_star = t_of_u(u_star);
    if (t_star > lo && t_star < hi) pts.push_back(t_star);
  }
  return pts;
}

const PowLogAtom& PowLogFn::leading_atom_at_zero() const {
  if (atoms_.empty()) {
    fail(ErrorKind::domain, "PowLogFn::leading_atom_at_zero: empty function");
  }
  const PowLogAtom* best = &atoms_.front();
  for (const auto& a : atoms_) {
    if (a.t_exp < best->t_exp ||
        (a.t_exp == best->t_exp && a.log_exp > best->log_exp)) {
      best = &a;
    }
  }
  return *best;
}

PowLogFn PowLogFn::parse(std::string_view text) {
  std::vector<PowLogAtom> atoms;
  std::string input(text);
  std::stringstream ss(input);
  std::string piece;
  bool any = false;
  while (std::getline(ss, piece, ';')) {
    std::string_view atom_text = trim(piece);
    if (atom_text.empty()) continue;
    any = true;
    // c*t^a*log^b
    const auto star1 = atom_text.find('*');
    if (star1 == std::string_view::npos) {
      fail(ErrorKind::parse, "PowLogFn: missing '*' after coefficient in '" +
                                 std::string(atom_text) +
                                 "' (grammar: c*t^a*log^b)");
    }
    const double c = parse_number(trim(atom_text.substr(0, star1)), "coefficient");
    std::string_view rest = atom_text.substr(star1 + 1);
    const auto star2 = rest.find('*');
    if (star2 == std::string_view::npos) {
      fail(ErrorKind::parse, "PowLogFn: expected 't^a*log^b' in '" +
                                 std::string(atom_text) +
                                 "' (grammar: c*t^a*log^b)");
    }
    std::string_view t_part = trim(rest.substr(0, star2));
    std::string_view log_part = trim(rest.substr(star2 + 1));
    if (t_part.substr(0, 2) != "t^") {
      fail(ErrorKind::parse, "PowLogFn: expected 't^' in token '" +
                                 std::string(t_part) + "' (grammar: c*t^a*log^b)");
    }
    if (log_part.substr(0, 4) != "log^") {
      fail(ErrorKind::parse, "PowLogFn: expected 'log^' in token '" +
                                 std::string(log_part) +
                                 "' (grammar: c*t^a*log^b)");
    }
    const double a = parse_number(trim(t_part.substr(2)), "power exponent");
    const double b = parse_number(trim(log_part.substr(4)), "log exponent");
    atoms.push_back(PowLogAtom{c, a, b});
  }
  if (!any) {
    fail(ErrorKind::parse, "PowLogFn: empty text form");
  }
  return PowLogFn(std::move(atoms));
}

std::string PowLogFn::to_string() const {
  std::ostringstream out;
  out.precision(17);
  bool first = true;
  for (const auto& a : atoms_) {
    if (!first) out << "; ";
    first = false;
    out << a.coef << "*t^" << a.t_exp << "*log^" << a.log_exp;
  }
  if (first) out << "0*t^0*log^0";
  return out.str();
}

}  // namespace rispace
