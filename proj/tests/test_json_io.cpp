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

#include "corona/json_io.hpp"
#include "support.hpp"

using namespace corona;
using corona::json_io::Json;
using corona::testing::Q;

TEST_CASE("distributions round-trip bit-exactly") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Distribution f = trial % 3 == 0 ? testing::random_density(rng) + testing::random_point_masses(rng, 1, 3, 2)
                                          : testing::random_point_masses(rng, 1 + trial % 3, 4, 3);
    const Json j = json_io::to_json(f);
    CHECK(json_io::distribution_from_json(j) == f);
    CHECK(json_io::distribution_from_json(json_io::parse(j.dump())) == f);
  }
}

TEST_CASE("schema of the Liouville truncation") {
  const Distribution f = Distribution::delta(1) - Distribution::point({Rational(BigInt(1), pow10(720))});
  const Json j = json_io::to_json(f);
  // 10^720 does not fit in 64 bits and is written as a decimal string.
  const Json& loc = j["terms"][1]["location"][0];
  CHECK(loc[1].is_string());
  CHECK(json_io::distribution_from_json(j) == f);
}

TEST_CASE("hand-written distribution") {
  const Json j = json_io::parse(R"({
    "dimension": 1,
    "terms": [{"coeff": [1, 1, 0, 1], "location": [[0, 1]], "deriv": [0]},
              {"coeff": [-1, 1, 0, 1], "location": [[11, 100]]}],
    "density": {"breakpoints": [[0, 1], [1, 1]], "pieces": [[[1, 1]]]}
  })");
  const Distribution f = json_io::distribution_from_json(j);
  const Distribution want = Distribution::delta(1) - Distribution::point({Q(11, 100)}) +
                            Distribution::density(PiecewisePolyDensity::indicator(Q(0), Q(1)));
  CHECK(f == want);
}

TEST_CASE("malformed input names the position") {
  try {
    json_io::parse("{\"dimension\": 1, \"terms\": [", "f.json");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("f.json") != std::string::npos);
    CHECK(msg.find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(json_io::distribution_from_json(json_io::parse(R"({"terms": []})")), InputError);
  CHECK_THROWS_AS(json_io::distribution_from_json(json_io::parse(R"({"dimension": 2, "terms": [
    {"coeff": [1, 1, 0, 1], "location": [[0, 1]]}]})")),
                  InputError);
  CHECK_THROWS_AS(json_io::rational_from_json(json_io::parse("[1, 0]")), InputError);
  CHECK_THROWS_AS(json_io::read_file("/nonexistent/f.json"), InputError);
}

TEST_CASE("cones") {
  for (const Cone& c : {Cone::full(3), Cone::orthant(2), Cone::light(2, Q(1, 2)),
                        Cone::polyhedral(2, {{Q(1), Q(0)}, {Q(1), Q(1)}})}) {
    const Cone back = json_io::cone_from_json(json_io::to_json(c));
    CHECK(back.name() == c.name());
    CHECK(back.dimension() == c.dimension());
  }
  const Cone lc = json_io::cone_from_json(json_io::parse(R"({"kind": "lightcone", "dimension": 3, "speed": [2, 1]})"));
  CHECK(lc.as<LightCone>().spatial_dim == 2);
  CHECK(lc.as<LightCone>().speed == Q(2));
  CHECK_THROWS_AS(json_io::cone_from_json(json_io::parse(R"({"kind": "sphere", "dimension": 2})")), InputError);
}

TEST_CASE("points") {
  const auto pts = json_io::points_from_json(json_io::parse(R"([[1.5], [["200pi", "-1/3"]], ["2/7", [0, 1]]])"));
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].coords[0].re.rational == Q(3, 2));
  CHECK(pts[1].coords[0].re.pi_multiple == Q(200));
  CHECK(pts[1].coords[0].im.rational == Q(-1, 3));
  CHECK(pts[2].dimension() == 2);
  CHECK(json_io::point_from_json(json_io::to_json(pts[1])) == pts[1]);
}

TEST_CASE("liouville CSV") {
  const auto rows = liouville::report(3, {Q(1), Q(1), Q(1)});
  const std::string csv = json_io::liouville_csv(rows);
  CHECK(csv.find("K,pK,qK") == 0);
  CHECK(csv.find("\n3,110001,1000000,") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
