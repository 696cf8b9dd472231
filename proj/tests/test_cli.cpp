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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli_app.hpp"
#include "rispace/gridfn.hpp"
#include "rispace/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = rispace::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json parse_report(const std::string& text) { return json::parse(text); }

/// Minimal structural validator for the subset of JSON Schema the shipped
/// schema uses: required members, type/enum checks one level down.
bool validates_against_schema(const json& doc, const json& schema) {
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!doc.contains(key.get<std::string>())) return false;
    }
  }
  if (!schema.contains("properties")) return true;
  for (const auto& [key, sub] : schema["properties"].items()) {
    if (!doc.contains(key)) continue;
    const json& v = doc[key];
    if (sub.contains("type")) {
      const std::string type = sub["type"];
      if (type == "string" && !v.is_string()) return false;
      if (type == "number" && !v.is_number()) return false;
      if (type == "integer" && !v.is_number_integer()) return false;
      if (type == "object" && !v.is_object()) return false;
    }
    if (sub.contains("enum")) {
      bool found = false;
      for (const auto& e : sub["enum"]) found = found || e == v;
      if (!found) return false;
    }
    if (sub.contains("required") || sub.contains("properties")) {
      if (!validates_against_schema(v, sub)) return false;
    }
  }
  return true;
}

json load_schema() {
  for (const char* path :
       {"docs/report.schema.json", "../docs/report.schema.json",
        "../../docs/report.schema.json"}) {
    std::ifstream in(path);
    if (in) return json::parse(in);
  }
  FAIL("report.schema.json not found; run tests from the build tree");
  return {};
}

}  // namespace

TEST_CASE("norm command prints the closed-form value") {
  const RunResult r =
      run_cli({"norm", "--space", "Lor:2,1", "--fn", "1*t^0*log^0"});
  CHECK(r.code == 0);
  CHECK(std::strtod(r.out.c_str(), nullptr) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("mazya command reports unit volume") {
  const RunResult r = run_cli({"mazya", "--n", "2", "--alpha", "0.5"});
  REQUIRE(r.code == 0);
  const json rep = parse_report(r.out);
  CHECK(rep["data"]["volume"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(validates_against_schema(rep, load_schema()));
}

TEST_CASE("witness command certifies the flagship case") {
  const RunResult r =
      run_cli({"witness", "--m", "1", "--alpha", "0.5", "--q", "2"});
  REQUIRE(r.code == 0);
  const json rep = parse_report(r.out);
  CHECK(rep["data"]["verdict"] == "nonexistence_certified");
  CHECK(rep["data"]["membership"]["member"] == true);
  CHECK(validates_against_schema(rep, load_schema()));
}

TEST_CASE("embed command certifies the critical embedding") {
  const RunResult r =
      run_cli({"--tmin", "1e-20", "embed", "--m", "1", "--alpha", "0.5",
               "--domain", "Lor:2,1", "--target", "L:inf", "--nrandom", "6"});
  REQUIRE(r.code == 0);
  const json rep = parse_report(r.out);
  CHECK(rep["data"]["report"]["verdict"] == "bounded");
  CHECK(validates_against_schema(rep, load_schema()));
}

TEST_CASE("rearrange command round-trips CSV artifacts") {
  using namespace rispace;
  const GridPtr g = make_log_grid(1e-4, 16);
  const std::string in_path = "cli_test_in.csv";
  const std::string out_path = "cli_test_out.csv";
  {
    const GridFn f =
        GridFn::sample(g, [](double t) { return t <= 0.3 ? 2.0 : 1.0; });
    write_gridfn_csv(in_path, {"t", "value"}, {g->nodes(), f.values()});
  }
  const RunResult r =
      run_cli({"--out", out_path, "rearrange", "--csv", in_path});
  REQUIRE(r.code == 0);
  const json rep = parse_report(r.out);
  CHECK(rep["data"]["ess_sup"].get<double>() == doctest::Approx(2.0));

  std::ifstream out_file(out_path);
  REQUIRE(out_file.good());
  std::string header;
  std::getline(out_file, header);
  CHECK(header == "t,u,fstar,fstarstar");
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("report command verifies the closed rows and flags the endpoint") {
  const RunResult r = run_cli({"report", "--m", "1", "--alpha", "0.5"});
  const json rep = parse_report(r.out);
  REQUIRE(rep["data"]["rows"].size() == 3);
  CHECK(rep["data"]["rows"][0]["optimal_target"] == "L:inf");
  CHECK(rep["data"]["rows"][0]["verified"] == true);
  CHECK(rep["data"]["rows"][1]["optimal_target"] == "LZ:inf,2,-1");
  CHECK(rep["data"]["rows"][1]["verified"] == true);
  CHECK(rep["data"]["rows"][2]["optimal_target"] == "expL:2");
  // The q = inf endpoint claim does not survive the duality computation
  // (the measured level is (log 2/t)^{-1}); the row reports it honestly and
  // the exit status marks a partial failure.
  CHECK(rep["data"]["rows"][2]["verified"] == false);
  CHECK(r.code == rispace::cli::kExitInconclusive);
}

TEST_CASE("curve artifacts honor --format json") {
  const std::string path = "cli_fmt_test.json";
  const RunResult r = run_cli({"--out", path, "--format", "json", "--tmin",
                               "1e-6", "mazya", "--n", "2", "--alpha", "0.5"});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  const json artifact = json::parse(in);
  CHECK(artifact.contains("curve"));
  CHECK(artifact["curve"].contains("eta"));
  CHECK(artifact["curve"]["x"].size() == artifact["curve"]["eta"].size());
  std::remove(path.c_str());
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::vector<std::string> cmd = {"witness", "--m", "1", "--alpha",
                                        "0.66", "--q", "inf"};
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("grid flags and environment override") {
  const RunResult flagged =
      run_cli({"--tmin", "1e-12", "--ppd", "32", "mazya", "--n", "2",
               "--alpha", "0.5"});
  CHECK(parse_report(flagged.out)["grid"]["t_min"].get<double>() ==
        doctest::Approx(1e-12));

  setenv("RISPACE_TMIN", "1e-16", 1);
  const RunResult env = run_cli({"mazya", "--n", "2", "--alpha", "0.5"});
  unsetenv("RISPACE_TMIN");
  CHECK(parse_report(env.out)["grid"]["t_min"].get<double>() ==
        doctest::Approx(1e-16));
}

TEST_CASE("errors name the offending token and exit 1") {
  const RunResult bad_space =
      run_cli({"norm", "--space", "bogus:1", "--fn", "1*t^0*log^0"});
  CHECK(bad_space.code == 1);
  CHECK(bad_space.err.find("bogus") != std::string::npos);

  const RunResult bad_fn = run_cli({"norm", "--space", "L:2", "--fn", "zap"});
  CHECK(bad_fn.code == 1);
  CHECK(bad_fn.err.find("zap") != std::string::npos);

  const RunResult bad_sub = run_cli({"frobnicate"});
  CHECK(bad_sub.code == 1);

  const RunResult bad_beta = run_cli(
      {"witness", "--m", "1", "--alpha", "0.5", "--beta", "0.7"});
  CHECK(bad_beta.code == 1);
}

TEST_CASE("inconclusive witness exits with status 2") {
  // beta close to the membership threshold makes the slope fine but the
  // membership exponent sits inside the undecided band.
  const RunResult r = run_cli(
      {"witness", "--m", "1", "--alpha", "0.5", "--q", "2", "--beta", "-0.022"});
  const json rep = parse_report(r.out);
  if (rep["data"]["verdict"] == "inconclusive") {
    CHECK(r.code == rispace::cli::kExitInconclusive);
  } else {
    CHECK(r.code == 0);
  }
}
