// Copyright 2026 The Corona Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corona/cli.hpp"
#include "corona/json_io.hpp"
#include "support.hpp"

using namespace corona;
using corona::json_io::Json;
using corona::testing::Q;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("corona_cli_" + std::to_string(std::random_device{}()) + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write(const std::string& name, const Distribution& f) const {
    return write(name, json_io::to_json(f).dump());
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("liouville-refute with unit constants") {
  const Result r = run({"liouville-refute", "--C", "1", "--N", "1", "--M", "1", "--cone", "orthant1"});
  CHECK(r.code == cli::kViolation);
  const Json j = json_io::parse(r.out);
  CHECK(j["K"] == 4);
  CHECK(j["success"] == true);

  const Result hard = run({"liouville-refute", "--C", "1", "--N", "5", "--M", "1"});
  CHECK(hard.code == cli::kInconclusive);
  CHECK(json_io::parse(hard.out)["success"] == false);
}

TEST_CASE("bezout-verify with the identity") {
  TempDir dir;
  const std::string d = dir.write("delta.json", Distribution::delta(1));
  const Result r = run({"bezout-verify", "--f", d, "--g", d});
  CHECK(r.code == cli::kPass);
  CHECK(json_io::parse(r.out)["exactIdentity"] == true);

  const std::string shifted = dir.write("shift.json", Distribution::delta(1) - Distribution::point({Q(1)}));
  const std::string plus = dir.write("plus.json", Distribution::delta(1) + Distribution::point({Q(1)}));
  CHECK(run({"bezout-verify", "--f", shifted, "--g", plus}).code == cli::kViolation);

  // With a cone the necessity chain runs on random samples.
  const Result chain = run({"bezout-verify", "--f", d, "--g", d, "--cone", "orthant", "--samples", "50"});
  CHECK(chain.code == cli::kPass);
  const Json cj = json_io::parse(chain.out);
  CHECK(cj.contains("necessity"));
  CHECK(cj["coronaCheck"]["status"] == "noViolationFoundOnSamples");
  CHECK(cj["seed"] == 1);
}

TEST_CASE("support-fn on the light cone") {
  const Result r = run({"support-fn", "--cone", "lightcone", "--speed", "1", "--xi", "1", "0"});
  CHECK(r.code == cli::kPass);
  const Json j = json_io::parse(r.out);
  CHECK(j["H"].get<double>() == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK(run({"support-fn", "--cone", "orthant2", "--xi", "1", "-1"}).code == cli::kPass);
  CHECK(run({"support-fn", "--cone", "orthant3", "--xi", "1", "-1"}).code == cli::kInputError);
  CHECK(run({"support-fn", "--cone", "sphere", "--xi", "1"}).code == cli::kInputError);
}

TEST_CASE("polyhedral cone from a file") {
  TempDir dir;
  const std::string cone = dir.write("cone.json", R"({"kind": "polyhedral", "dimension": 2,
      "generators": [[[1, 1], [0, 1]], [[1, 1], [1, 1]]]})");
  const Result r = run({"support-fn", "--cone", cone, "--xi", "0", "1"});
  CHECK(r.code == cli::kPass);
  CHECK(json_io::parse(r.out)["H"].get<double>() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("input errors") {
  TempDir dir;
  const std::string broken = dir.write("broken.json", "{\"dimension\": 1, \"terms\": [");
  const Result r = run({"transform", "--f", broken, "--z", "1"});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("byte") != std::string::npos);
  CHECK(run({"no-such-command"}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"--help"}).code == cli::kPass);
  const std::string d = dir.write("delta.json", Distribution::delta(1));
  CHECK(run({"transform", "--f", d, "--z", "1", "--precision", "32"}).code == cli::kInputError);
  CHECK(run({"corona-check", "--f", d, "--cone", "full", "--C", "0", "--z", "1"}).code == cli::kInputError);
  CHECK(run({"liouville-report", "--kmax", "9"}).code == cli::kInputError);
}

TEST_CASE("corona-check verdicts") {
  TempDir dir;
  const std::string d = dir.write("delta.json", Distribution::delta(1));
  const Result ok = run({"corona-check", "--f", d, "--cone", "full", "--C", "1/2", "--samples", "100", "--seed", "7"});
  CHECK(ok.code == cli::kPass);
  CHECK(json_io::parse(ok.out)["seed"] == 7);

  const std::string dp = dir.write(
      "dprime.json", Distribution::point({Q(0)}, ExactComplex(Q(0), Q(-1)), MultiIndex{{1}}));
  const Result bad = run({"corona-check", "--f", dp, "--cone", "full", "--z", "0"});
  CHECK(bad.code == cli::kViolation);
  CHECK(json_io::parse(bad.out)["status"] == "violationAt");

  // The Liouville pair at 2 pi q_4, written as a symbolic multiple of pi.
  const auto pair = liouville::example_pair(6);
  const std::string f1 = dir.write("f1.json", pair[0]);
  const std::string f2 = dir.write("f2.json", pair[1]);
  const std::string pts = dir.write("pts.json", R"([["2000000000000000000000000pi"]])");
  const Result lv = run({"corona-check", "--f", f1, "--f", f2, "--cone", "orthant1", "--points", pts});
  CHECK(lv.code == cli::kViolation);
}

TEST_CASE("corona-search is reproducible") {
  TempDir dir;
  const std::string f = dir.write("f.json", Distribution::delta(1) - Distribution::point({Q(1)}));
  const std::vector<std::string> args{"corona-search", "--f", f, "--cone", "full", "--C", "1/100", "--box",
                                      "5:8:-0.5:0.5", "--budget", "300", "--seed", "3"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == cli::kViolation);
  CHECK(a.out == b.out);
  CHECK(json_io::parse(a.out)["seed"] == 3);
  CHECK(run({"corona-search", "--f", f, "--cone", "full", "--box", "1:2:3"}).code == cli::kInputError);
}

TEST_CASE("transform, pws and weight-check") {
  TempDir dir;
  const std::string ind =
      dir.write("ind.json", Distribution::density(PiecewisePolyDensity::indicator(Q(0), Q(1))));
  const Result t = run({"transform", "--f", ind, "--z", "0"});
  CHECK(t.code == cli::kPass);
  CHECK(json_io::parse(t.out)["results"][0]["abs"]["mid"].get<std::string>().rfind("1", 0) == 0);

  const Result p = run({"pws", "--f", ind, "--samples", "100", "--im-radius", "10"});
  CHECK(p.code == cli::kPass);
  CHECK(json_io::parse(p.out)["allPass"] == true);

  const Result w = run({"weight-check", "--samples", "300", "--seed", "5"});
  CHECK(w.code == cli::kPass);
  const Json wj = json_io::parse(w.out);
  CHECK(wj["seed"] == 5);
  CHECK(wj["suites"].size() == 3);
}

TEST_CASE("liouville-report formats and --out") {
  TempDir dir;
  const Result csv = run({"liouville-report", "--kmax", "3", "--format", "csv"});
  CHECK(csv.code == cli::kPass);
  CHECK(csv.out.rfind("K,pK,qK", 0) == 0);
  const std::string out = dir.path("report.json");
  CHECK(run({"liouville-report", "--kmax", "2", "--out", out}).code == cli::kPass);
  const Json j = json_io::read_file(out);
  CHECK(j["rows"].size() == 2);
  CHECK(run({"liouville-report", "--format", "xml"}).code == cli::kInputError);
}
