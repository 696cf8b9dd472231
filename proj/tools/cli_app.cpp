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

#include "cli_app.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rispace/errors.hpp"
#include "rispace/family.hpp"
#include "rispace/io.hpp"
#include "rispace/mazya.hpp"
#include "rispace/operators.hpp"
#include "rispace/optimality.hpp"
#include "rispace/quadrature.hpp"
#include "rispace/rearrange.hpp"
#include "rispace/spaces.hpp"
#include "rispace/version.hpp"

namespace rispace::cli {
namespace {

using Json = nlohmann::ordered_json;

// JSON has no inf; reports encode non-finite values as strings.
Json num(double v) {
  if (std::isinf(v)) return Json(v > 0 ? "inf" : "-inf");
  if (std::isnan(v)) return Json("nan");
  return Json(v);
}

struct GlobalOpts {
  double t_min = kDefaultTMin;
  int ppd = kDefaultPointsPerDecade;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "csv";  // artifact format for curve commands
};

Json envelope(const std::string& command, const GlobalOpts& g) {
  Json j;
  j["tool"] = "rispace";
  j["version"] = RISPACE_VERSION;
  j["command"] = command;
  j["grid"] = Json{{"t_min", g.t_min}, {"points_per_decade", g.ppd}};
  j["seed"] = g.seed;
  return j;
}

/// Writes a plot-ready table to g.out_path: CSV by default, or the columns
/// embedded in the JSON report when --format json is selected.
void write_curve_artifact(const GlobalOpts& g, Json& report,
                          const std::vector<std::string>& headers,
                          const std::vector<std::vector<double>>& columns);

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::parse, "cannot open output file: " + path);
  f << j.dump(2) << "\n";
}

void write_curve_artifact(const GlobalOpts& g, Json& report,
                          const std::vector<std::string>& headers,
                          const std::vector<std::vector<double>>& columns) {
  if (g.out_path.empty()) return;
  if (g.format == "json") {
    Json curve;
    for (std::size_t c = 0; c < headers.size(); ++c) {
      Json col = Json::array();
      for (double v : columns[c]) col.push_back(num(v));
      curve[headers[c]] = std::move(col);
    }
    report["curve"] = std::move(curve);
    write_json_file(g.out_path, report);
  } else {
    write_gridfn_csv(g.out_path, headers, columns);
  }
}

Json trend_json(const std::vector<std::pair<double, double>>& trend) {
  Json arr = Json::array();
  for (const auto& [t, r] : trend) arr.push_back(Json{{"t_min", t}, {"value", num(r)}});
  return arr;
}

Json opnorm_json(const OpNormReport& rep) {
  Json j;
  j["best_ratio"] = num(rep.best_ratio);
  j["attaining_function"] = rep.attaining_function;
  j["refinement_trend"] = trend_json(rep.refinement_trend);
  j["verdict"] = to_string(rep.verdict);
  return j;
}

/// Three refinement depths log-spaced down to t_min (the library default
/// depth gives the ladder {1e-10, 1e-20, 1e-30}).
std::vector<double> refinement_ladder(double t_min) {
  const double d = std::log10(1.0 / t_min);
  if (d < 6.0) return {t_min};
  const double d1 = std::max(4.0, std::ceil(d / 3.0));
  const double d2 = std::max(d1 + 1.0, std::ceil(2.0 * d / 3.0));
  std::vector<double> ladder;
  if (d1 < d) ladder.push_back(std::pow(10.0, -d1));
  if (d2 < d && d2 > d1) ladder.push_back(std::pow(10.0, -d2));
  ladder.push_back(t_min);
  return ladder;
}

Json equivalence_json(const EquivalenceReport& rep) {
  Json j;
  j["ratio_min"] = num(rep.ratio_min);
  j["ratio_max"] = num(rep.ratio_max);
  j["loglog_slope"] = num(rep.loglog_slope);
  j["verdict"] = to_string(rep.verdict);
  return j;
}

int exit_for_verdict(OpVerdict v) {
  return v == OpVerdict::inconclusive ? kExitInconclusive : kExitOk;
}

// ---------------------------------------------------------------------------
// Subcommand payloads
// ---------------------------------------------------------------------------

struct NormArgs {
  std::string space;
  std::string fn_text;
  std::string csv_path;
};

int do_norm(const GlobalOpts& g, const NormArgs& a, std::ostream& out) {
  const GridPtr grid = make_log_grid(g.t_min, g.ppd);
  const SpaceSpec spec = parse_space(a.space, grid);
  double value;
  if (!a.fn_text.empty()) {
    value = norm(spec, PowLogFn::parse(a.fn_text), grid);
  } else if (!a.csv_path.empty()) {
    value = norm(spec, read_gridfn_csv(a.csv_path));
  } else {
    fail(ErrorKind::parameter, "norm: need --fn or --csv");
  }
  out << format_double(value) << "\n";
  if (!g.out_path.empty()) {
    Json j = envelope("norm", g);
    j["data"] = Json{{"space", a.space}, {"value", num(value)}};
    write_json_file(g.out_path, j);
  }
  return kExitOk;
}

struct RearrangeArgs {
  std::string csv_path;
};

int do_rearrange(const GlobalOpts& g, const RearrangeArgs& a, std::ostream& out) {
  const GridFn f = read_gridfn_csv(a.csv_path);
  const Rearranged r = rearrangement(f);
  const Grid& grid = *f.grid();
  Json j = envelope("rearrange", g);
  j["data"] = Json{{"integral_abs", num(r.total_integral())},
                   {"ess_sup", num(r.sorted_values.empty() ? 0.0 : r.sorted_values.front())},
                   {"output", g.out_path}};
  std::vector<double> us(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) us[i] = grid.u(i);
  write_curve_artifact(g, j, {"t", "u", "fstar", "fstarstar"},
                       {grid.nodes(), us, r.star.values(), r.maximal.values()});
  out << j.dump(2) << "\n";
  return kExitOk;
}

struct FundamentalArgs {
  std::string space;
};

int do_fundamental(const GlobalOpts& g, const FundamentalArgs& a,
                   std::ostream& out) {
  const GridPtr grid = make_log_grid(g.t_min, g.ppd);
  const SpaceSpec spec = parse_space(a.space, grid);
  const FundamentalFn phi = fundamental(spec, grid);
  Json j = envelope("fundamental", g);
  j["data"] = Json{{"space", a.space},
                   {"zero_limit", num(phi.zero_limit())},
                   {"quasiconcavity_defect", num(phi.quasiconcavity_defect())},
                   {"closed_form", phi.is_powlog() ? phi.powlog()->to_string() : ""},
                   {"output", g.out_path}};
  const Grid& gr = *phi.grid();
  std::vector<double> us(gr.size());
  for (std::size_t i = 0; i < gr.size(); ++i) us[i] = gr.u(i);
  write_curve_artifact(g, j, {"t", "u", "phi", "majorant"},
                       {gr.nodes(), us, phi.samples().values(),
                        phi.majorant().values()});
  out << j.dump(2) << "\n";
  return kExitOk;
}

struct EmbedArgs {
  int m = 1;
  double alpha = 0.5;
  std::string domain, target;
  int n_random = 40;
};

int do_embed(const GlobalOpts& g, const EmbedArgs& a, std::ostream& out) {
  const GridPtr grid = make_log_grid(g.t_min, g.ppd);
  EmbeddingProblem prob;
  prob.m = a.m;
  prob.alpha = a.alpha;
  prob.domain = parse_space(a.domain, grid);
  prob.target = parse_space(a.target, grid);
  const auto family = default_family(g.seed, a.n_random);
  const OpNormReport rep =
      reduction_check(prob, family, refinement_ladder(g.t_min), g.ppd);
  Json j = envelope("embed", g);
  j["data"] = Json{{"m", a.m},
                   {"alpha", a.alpha},
                   {"domain", a.domain},
                   {"target", a.target},
                   {"report", opnorm_json(rep)}};
  out << j.dump(2) << "\n";
  if (!g.out_path.empty()) write_json_file(g.out_path, j);
  return exit_for_verdict(rep.verdict);
}

struct OpnormArgs {
  std::string op = "copson";
  int m = 1;
  double alpha = 0.5;
  double gamma = 0.5;
  double lambda = 0.5;
  std::string domain, target;
  int n_random = 40;
};

int do_opnorm(const GlobalOpts& g, const OpnormArgs& a, std::ostream& out) {
  const GridPtr grid = make_log_grid(g.t_min, g.ppd);
  const SpaceSpec domain = parse_space(a.domain, grid);
  const SpaceSpec target = parse_space(a.target, grid);
  OpApply apply;
  if (a.op == "copson") {
    const CopsonOp op(a.m, a.alpha);
    apply = [op](const GridFn& f) { return copson(op, f); };
  } else if (a.op == "sup") {
    const double gamma = a.gamma;
    apply = [gamma](const GridFn& f) { return sup_op(gamma, f); };
  } else if (a.op == "dilate") {
    const double lambda = a.lambda;
    apply = [lambda](const GridFn& f) { return dilate(lambda, f); };
  } else {
    fail(ErrorKind::parameter, "opnorm: unknown --op '" + a.op +
                                   "' (copson | sup | dilate)");
  }
  const auto family = default_family(g.seed, a.n_random);
  const OpNormReport rep = op_norm_estimate(apply, domain, target, family,
                                            refinement_ladder(g.t_min), g.ppd);
  Json j = envelope("opnorm", g);
  j["data"] = Json{{"op", a.op},
                   {"domain", a.domain},
                   {"target", a.target},
                   {"report", opnorm_json(rep)}};
  out << j.dump(2) << "\n";
  if (!g.out_path.empty()) write_json_file(g.out_path, j);
  return exit_for_verdict(rep.verdict);
}

struct MazyaArgs {
  int n = 2;
  double alpha = 0.5;
};

int do_mazya(const GlobalOpts& g, const MazyaArgs& a, std::ostream& out) {
  const MazyaParams p(a.n, a.alpha);
  const double vol = omega_volume(p);
  const IsoProfile iso = model_profile(a.alpha);
  Json j = envelope("mazya", g);
  j["data"] = Json{{"n", a.n},
                   {"alpha", a.alpha},
                   {"volume", num(vol)},
                   {"volume_defect", num(std::abs(vol - 1.0))},
                   {"axis_length", num(p.axis_length())},
                   {"omega_n_minus_1", num(p.omega())},
                   {"iso_profile", iso.profile.to_string()},
                   {"output", g.out_path}};
  // Axis profile (x, eta) on a uniform axis grid.
  const int rows = 512;
  std::vector<double> xs(rows + 1), etas(rows + 1);
  for (int i = 0; i <= rows; ++i) {
    xs[static_cast<std::size_t>(i)] = p.axis_length() * i / rows;
    etas[static_cast<std::size_t>(i)] = eta(p, xs[static_cast<std::size_t>(i)]);
  }
  write_curve_artifact(g, j, {"x", "eta"}, {xs, etas});
  out << j.dump(2) << "\n";
  return kExitOk;
}

struct Thm31Args {
  std::string target;
  double alpha = 0.5;
  int n = 2;
};

int do_thm31(const GlobalOpts& g, const Thm31Args& a, std::ostream& out) {
  const GridPtr grid = make_log_grid(g.t_min, g.ppd);
  const MazyaParams params(a.n, a.alpha);  // range-checks alpha against n
  const SpaceSpec target = parse_space(a.target, grid);
  const FundamentalFn phi_y = fundamental(target, grid);
  const IsoProfile iso = model_profile(a.alpha);
  const FundamentalFn phi_x = induced_domain_phi(phi_y, iso);
  Json j = envelope("thm31", g);
  j["data"] = Json{{"target", a.target},
                   {"alpha", a.alpha},
                   {"n", a.n},
                   {"phi_y_zero_limit", num(phi_y.zero_limit())},
                   {"phi_x_defect", num(phi_x.quasiconcavity_defect())},
                   {"output", g.out_path}};
  const Grid& gr = *phi_x.grid();
  std::vector<double> us(gr.size());
  for (std::size_t i = 0; i < gr.size(); ++i) us[i] = gr.u(i);
  write_curve_artifact(g, j, {"t", "u", "phi_x"},
                       {gr.nodes(), us, phi_x.samples().values()});
  out << j.dump(2) << "\n";
  return kExitOk;
}

struct WitnessArgs {
  int m = 1;
  double alpha = 0.5;
  std::string q = "inf";
  std::optional<double> beta;
};

int do_witness(const GlobalOpts& g, const WitnessArgs& a, std::ostream& out) {
  const GridPtr grid = make_log_grid(g.t_min, g.ppd);
  const double q = (a.q == "inf") ? kInf : std::strtod(a.q.c_str(), nullptr);
  const NonexistenceReport rep = witness_pipeline(a.m, a.alpha, q, a.beta, grid);

  Json j = envelope("witness", g);
  Json data;
  data["m"] = rep.m;
  data["alpha"] = rep.alpha;
  data["q"] = num(rep.q);
  data["gamma"] = num(rep.gamma);
  data["target_level_phi"] = rep.target_level_phi.to_string();
  data["phi_x_closed_form"] = rep.phi_x_closed.to_string();
  data["phi_x_crosscheck"] = equivalence_json(rep.phi_x_crosscheck);
  data["phi_x_ratio_spread"] = num(rep.phi_x_ratio_spread);
  data["fundamental_orlicz"] =
      rep.fundamental_orlicz_id ? to_string(*rep.fundamental_orlicz_id) : "";
  data["beta"] = num(rep.beta);
  data["beta_interval"] =
      Json::array({num(rep.beta_interval.first), num(rep.beta_interval.second)});
  data["membership"] = Json{{"member", rep.membership.member},
                            {"conclusive", rep.membership.conclusive},
                            {"tail_exponent", num(rep.membership.tail_exponent)},
                            {"verdict", to_string(rep.membership.verdict)}};
  data["divergence_slope"] = num(rep.divergence_slope);
  data["expected_slope"] = num(rep.expected_slope);
  data["slope_ok"] = rep.slope_ok;
  data["q_stated_range_ok"] = rep.q_stated_range_ok;
  data["q_proof_range_ok"] = rep.q_proof_range_ok;
  data["target_admissible"] = rep.target_admissible;
  data["verdict"] = to_string(rep.verdict);
  data["s_curve_output"] = g.out_path;
  j["data"] = std::move(data);
  {
    std::vector<double> ts, us, ss;
    ts.reserve(rep.s_curve.size());
    for (const auto& [t, s_val] : rep.s_curve) {
      ts.push_back(t);
      us.push_back(u_of_t(t));
      ss.push_back(s_val);
    }
    write_curve_artifact(g, j, {"t", "u", "S"}, {ts, us, ss});
  }
  out << j.dump(2) << "\n";
  return rep.verdict == PipelineVerdict::nonexistence_certified
             ? kExitOk
             : kExitInconclusive;
}

struct ReportArgs {
  int m = 1;
  double alpha = 0.5;
};

struct ReportRow {
  double q;
  std::string domain;
  std::string named_target;
  EquivalenceReport check;
  bool verified = false;
};

ReportRow report_row(int m, double alpha, double q, const GridPtr& grid) {
  const double gamma = m * (1.0 - alpha);
  const double p = 1.0 / gamma;

  ReportRow row;
  row.q = q;
  EmbeddingProblem prob;
  prob.m = m;
  prob.alpha = alpha;
  prob.domain = Lorentz{p, q};
  row.domain = space_to_string(prob.domain);

  PowLogFn phi_named;
  if (q == 1.0) {
    row.named_target = "L:inf";
    phi_named = PowLogFn::constant(1.0);
  } else if (std::isinf(q)) {
    std::ostringstream name;
    name << "expL:" << 1.0 / (1.0 - gamma);
    row.named_target = name.str();
    phi_named = PowLogFn::atom(1.0, 0.0, -(1.0 - gamma));
  } else {
    std::ostringstream name;
    name << "LZ:inf," << q << ",-1";
    row.named_target = name.str();
    phi_named = PowLogFn::atom(1.0, 0.0, -1.0 + 1.0 / q);
  }

  std::vector<std::tuple<double, double, double>> samples;
  for (double a = 1e-10; a < 0.6; a *= 10.0) {
    const double aa = std::min(a, 0.5);
    const GridFn chi = GridFn::indicator(grid, aa);
    const double functional = optimal_target_norm(prob, chi);
    if (!(functional > 0.0) || !std::isfinite(functional)) continue;
    samples.emplace_back(aa, aa / functional, phi_named(aa));
  }
  row.check = compare_on_scales(samples);
  row.verified = row.check.verdict == EqVerdict::equivalent;
  return row;
}

int do_report(const GlobalOpts& g, const ReportArgs& a, std::ostream& out) {
  const GridPtr grid = make_log_grid(g.t_min, g.ppd);
  const double gamma = a.m * (1.0 - a.alpha);
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    fail(ErrorKind::precondition, "report: need 0 < m(1-alpha) < 1");
  }
  const std::vector<double> qs = {1.0, 1.0 / gamma, kInf};

  // Rows are independent; dispatch concurrently, collect in input order.
  std::vector<std::future<ReportRow>> futures;
  futures.reserve(qs.size());
  for (double q : qs) {
    futures.push_back(std::async(std::launch::async, report_row, a.m, a.alpha,
                                 q, grid));
  }

  Json rows = Json::array();
  bool all_verified = true;
  for (auto& fut : futures) {
    const ReportRow row = fut.get();
    all_verified = all_verified && row.verified;
    rows.push_back(Json{{"q", num(row.q)},
                        {"domain", row.domain},
                        {"optimal_target", row.named_target},
                        {"level_check", equivalence_json(row.check)},
                        {"verified", row.verified}});
  }

  Json j = envelope("report", g);
  j["data"] = Json{{"m", a.m}, {"alpha", a.alpha}, {"rows", rows}};
  out << j.dump(2) << "\n";
  if (!g.out_path.empty()) write_json_file(g.out_path, j);
  return all_verified ? kExitOk : kExitInconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Numerical calculus for rearrangement-invariant spaces on (0,1): "
      "norms, rearrangements, kernel operators, and embedding optimality "
      "certificates"};
  app.name("rispace");

  GlobalOpts g;
  if (const char* env = std::getenv("RISPACE_TMIN")) g.t_min = std::strtod(env, nullptr);
  if (const char* env = std::getenv("RISPACE_PPD")) g.ppd = std::atoi(env);
  app.add_option("--tmin", g.t_min, "Grid depth t_min (default 1e-30)")
      ->check(CLI::Range(1e-300, 1e-3));
  app.add_option("--ppd", g.ppd, "Grid points per decade (default 64)")
      ->check(CLI::Range(1, 4096));
  app.add_option("--seed", g.seed, "Seed for randomized test families");
  app.add_option("--out", g.out_path, "Output artifact path");
  app.add_option("--format", g.format, "Artifact format for curve commands")
      ->check(CLI::IsMember({"csv", "json"}));

  NormArgs norm_args;
  auto* norm_cmd = app.add_subcommand("norm", "Evaluate a space norm");
  norm_cmd->add_option("--space", norm_args.space, "Space spec")->required();
  norm_cmd->add_option("--fn", norm_args.fn_text, "Power-log text form");
  norm_cmd->add_option("--csv", norm_args.csv_path, "GridFn CSV file");

  RearrangeArgs re_args;
  auto* re_cmd = app.add_subcommand("rearrange", "f* and f** of a sampled function");
  re_cmd->add_option("--csv", re_args.csv_path, "GridFn CSV file")->required();

  FundamentalArgs fund_args;
  auto* fund_cmd = app.add_subcommand("fundamental", "Fundamental function of a space");
  fund_cmd->add_option("--space", fund_args.space, "Space spec")->required();

  EmbedArgs embed_args;
  auto* embed_cmd = app.add_subcommand("embed", "Reduction-principle certificate");
  embed_cmd->add_option("--m", embed_args.m, "Order of differentiation")->required();
  embed_cmd->add_option("--alpha", embed_args.alpha, "Isoperimetric exponent")->required();
  embed_cmd->add_option("--domain", embed_args.domain, "Domain space")->required();
  embed_cmd->add_option("--target", embed_args.target, "Target space")->required();
  embed_cmd->add_option("--nrandom", embed_args.n_random, "Random family size");

  OpnormArgs op_args;
  auto* op_cmd = app.add_subcommand("opnorm", "Empirical operator-norm report");
  op_cmd->add_option("--op", op_args.op, "copson | sup | dilate");
  op_cmd->add_option("--m", op_args.m, "Copson order");
  op_cmd->add_option("--alpha", op_args.alpha, "Copson isoperimetric exponent");
  op_cmd->add_option("--gamma", op_args.gamma, "sup-operator index");
  op_cmd->add_option("--lambda", op_args.lambda, "dilation factor");
  op_cmd->add_option("--domain", op_args.domain, "Domain space")->required();
  op_cmd->add_option("--target", op_args.target, "Target space")->required();
  op_cmd->add_option("--nrandom", op_args.n_random, "Random family size");

  MazyaArgs mazya_args;
  auto* mazya_cmd = app.add_subcommand("mazya", "Model domain profile and volume");
  mazya_cmd->add_option("--n", mazya_args.n, "Ambient dimension")->required();
  mazya_cmd->add_option("--alpha", mazya_args.alpha, "Isoperimetric exponent")->required();

  Thm31Args thm31_args;
  auto* thm31_cmd = app.add_subcommand(
      "thm31", "Fundamental function of the operator-induced domain space");
  thm31_cmd->add_option("--target", thm31_args.target, "Target space")->required();
  thm31_cmd->add_option("--alpha", thm31_args.alpha, "Isoperimetric exponent")->required();
  thm31_cmd->add_option("--n", thm31_args.n, "Ambient dimension (range check)");

  WitnessArgs wit_args;
  double beta_in = 0.0;
  auto* wit_cmd = app.add_subcommand(
      "witness", "Nonexistence certificate for optimal Orlicz domains");
  wit_cmd->add_option("--m", wit_args.m, "Order of differentiation")->required();
  wit_cmd->add_option("--alpha", wit_args.alpha, "Isoperimetric exponent")->required();
  wit_cmd->add_option("--q", wit_args.q, "Secondary target index (or 'inf')");
  auto* beta_opt = wit_cmd->add_option("--beta", beta_in, "Witness log exponent");

  ReportArgs rep_args;
  auto* rep_cmd = app.add_subcommand(
      "report", "Optimal-target table across the secondary index q");
  rep_cmd->add_option("--m", rep_args.m, "Order of differentiation")->required();
  rep_cmd->add_option("--alpha", rep_args.alpha, "Isoperimetric exponent")->required();

  app.fallthrough();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  app.require_subcommand(1);

  std::vector<std::string> argv_strings;
  argv_strings.reserve(args.size() + 1);
  argv_strings.push_back("rispace");
  for (const auto& s : args) argv_strings.push_back(s);
  std::vector<char*> argv;
  argv.reserve(argv_strings.size());
  for (auto& s : argv_strings) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::stringstream out_buf, err_buf;
    const int code = app.exit(e, out_buf, err_buf);
    out << out_buf.str();
    err << err_buf.str();
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*norm_cmd) return do_norm(g, norm_args, out);
    if (*re_cmd) return do_rearrange(g, re_args, out);
    if (*fund_cmd) return do_fundamental(g, fund_args, out);
    if (*embed_cmd) return do_embed(g, embed_args, out);
    if (*op_cmd) return do_opnorm(g, op_args, out);
    if (*mazya_cmd) return do_mazya(g, mazya_args, out);
    if (*thm31_cmd) return do_thm31(g, thm31_args, out);
    if (*wit_cmd) {
      if (beta_opt->count() > 0) wit_args.beta = beta_in;
      return do_witness(g, wit_args, out);
    }
    if (*rep_cmd) return do_report(g, rep_args, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace rispace::cli
