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

#include "rispace/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rispace/errors.hpp"

namespace rispace {
namespace {

double parse_value(const std::string& tok, const std::string& where) {
  if (tok == "inf" || tok == "Inf" || tok == "INF" || tok == "+inf") return kInf;
  const char* b = tok.c_str();
  char* e = nullptr;
  const double v = std::strtod(b, &e);
  if (e == b) {
    fail(ErrorKind::parse, "CSV " + where + ": expected a number, got '" + tok + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

GridFn read_gridfn_csv(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) {
    fail(ErrorKind::parse, "CSV " + name + ": empty file");
  }
  // Tolerate extra columns (e.g. a u column) but require t first and value
  // as the named column or the second one.
  std::vector<std::string> headers;
  {
    std::stringstream hs(line);
    std::string h;
    while (std::getline(hs, h, ',')) headers.push_back(h);
  }
  if (headers.empty() || headers[0] != "t") {
    fail(ErrorKind::parse, "CSV " + name + ": first column must be 't'");
  }
  std::size_t value_col = 1;
  for (std::size_t i = 1; i < headers.size(); ++i) {
    if (headers[i] == "value") value_col = i;
  }
  if (headers.size() < 2) {
    fail(ErrorKind::parse, "CSV " + name + ": need a value column");
  }

  std::vector<double> ts, vs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string tok;
    std::vector<std::string> cells;
    while (std::getline(ls, tok, ',')) cells.push_back(tok);
    if (cells.size() <= value_col) {
      fail(ErrorKind::parse, "CSV " + name + ": short row at line " +
                                 std::to_string(line_no));
    }
    ts.push_back(parse_value(cells[0], name));
    vs.push_back(parse_value(cells[value_col], name));
  }
  if (ts.size() < 2) {
    fail(ErrorKind::parse, "CSV " + name + ": need at least two rows");
  }

  // Recover the grid parameters: log-uniform, last node 1.
  if (std::abs(ts.back() - 1.0) > 1e-9) {
    fail(ErrorKind::parse, "CSV " + name + ": last t must be 1");
  }
  const double t_min = ts.front();
  const double decades = std::log10(1.0 / t_min);
  const int ppd = static_cast<int>(
      std::lround(static_cast<double>(ts.size() - 1) / decades));
  const GridPtr grid = make_log_grid(t_min, std::max(1, ppd));
  if (grid->size() != ts.size()) {
    fail(ErrorKind::parse,
         "CSV " + name + ": node count does not match a log-uniform grid");
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (std::abs(ts[i] - grid->node(i)) > 1e-6 * grid->node(i)) {
      fail(ErrorKind::parse, "CSV " + name + ": node " + std::to_string(i) +
                                 " deviates from the log-uniform grid");
    }
  }
  return GridFn(grid, std::move(vs));
}

GridFn read_gridfn_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::parse, "CSV file not readable: " + path);
  }
  return read_gridfn_csv(in, path);
}

void write_gridfn_csv(std::ostream& out, const std::vector<std::string>& headers,
                      const std::vector<std::vector<double>>& columns) {
  for (std::size_t i = 0; i < headers.size(); ++i) {
    out << (i ? "," : "") << headers[i];
  }
  out << "\n";
  if (columns.empty()) return;
  const std::size_t rows = columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << format_double(columns[c][r]);
    }
    out << "\n";
  }
}

void write_gridfn_csv(const std::string& path,
                      const std::vector<std::string>& headers,
                      const std::vector<std::vector<double>>& columns) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorKind::parse, "cannot open output file: " + path);
  }
  write_gridfn_csv(out, headers, columns);
}

}  // namespace rispace
