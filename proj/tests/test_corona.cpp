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

#include <cmath>
#include <numbers>

#include "corona/corona.hpp"
#include "corona/liouville.hpp"
#include "support.hpp"

using namespace corona;
using corona::testing::delta_at;
using corona::testing::Q;
using Status = CoronaVerdict::Status;

namespace {

CoronaParams params(Rational c, Rational n, Rational m) { return {std::move(c), std::move(n), std::move(m)}; }

Distribution dprime_over_i() { return Distribution::point({Q(0)}, ExactComplex(Q(0), Q(-1)), MultiIndex{{1}}); }

std::vector<PointSpec> random_points(std::mt19937_64& rng, int dim, std::size_t n, double re, double im) {
  std::vector<PointSpec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(PointSpec::from_doubles(testing::random_complex(rng, dim, re, im)));
  return out;
}

}  // namespace

TEST_CASE("parameters must be positive") {
  CHECK_NOTHROW(params(Q(1), Q(1), Q(1)).validate());
  CHECK_THROWS_AS(params(Q(0), Q(1), Q(1)).validate(), InputError);
  CHECK_THROWS_AS(params(Q(1), Q(-1), Q(1)).validate(), InputError);
  CHECK_THROWS_AS(params(Q(1), Q(1), Q(0)).validate(), InputError);
}

TEST_CASE("lower bound examples") {
  const CoronaParams p = params(Q(1), Q(3), Q(5));
  CHECK(corona_lower_bound(p, Cone::full(2), ComplexPoint::from_doubles({{0, 0}, {0, 0}})).mid_double() == 1.0);

  const CoronaParams unit = params(Q(1), Q(1), Q(1));
  const Ball b = corona_lower_bound(unit, Cone::full(1), PointSpec::real({SymReal::parse("200pi")}).at(128));
  const double want = 1.0 / (1.0 + 4.0 * std::numbers::pi * std::numbers::pi * 1e4);
  CHECK(std::abs(b.mid_double() - want) <= 1e-15 * want);

  const Ball h = corona_lower_bound(unit, Cone::orthant(1), ComplexPoint::from_doubles({{0, -1}}));
  CHECK(h.mid_double() == doctest::Approx(0.5).epsilon(1e-15));
  // Upper half plane: exp(-M y) enters.
  const Ball up = corona_lower_bound(unit, Cone::orthant(1), ComplexPoint::from_doubles({{0, 2}}));
  CHECK(up.mid_double() == doctest::Approx(std::exp(-2.0) / 5.0).epsilon(1e-14));
}

TEST_CASE("lower bound is monotone in N and M") {
  std::mt19937_64 rng(79);
  const Cone cone = Cone::light(1, Q(1));
  for (int i = 0; i < 100; ++i) {
    const ComplexPoint z = ComplexPoint::from_doubles(testing::random_complex(rng, 2, 5.0, 5.0));
    const Ball base = corona_lower_bound(params(Q(1), Q(1), Q(1)), cone, z);
    const Ball more_n = corona_lower_bound(params(Q(1), Q(3, 2), Q(1)), cone, z);
    const Ball more_m = corona_lower_bound(params(Q(1), Q(1), Q(2)), cone, z);
    CHECK(more_n.mid_double() <= base.mid_double());
    CHECK(more_m.mid_double() <= base.mid_double());
  }
}

TEST_CASE("identity never violates a bound with C <= 1") {
  std::mt19937_64 rng(83);
  const auto pts = random_points(rng, 1, 200, 50.0, 20.0);
  const CoronaVerdict v = check_corona({Distribution::delta(1)}, params(Q(1), Q(1, 2), Q(3)), Cone::full(1), pts);
  CHECK(v.status == Status::kNoViolationFound);
  CHECK(v.evaluated == pts.size());
  CHECK(v.min_ratio >= 1.0);
}

TEST_CASE("a common zero is a rigorous violation") {
  std::vector<PointSpec> pts{PointSpec::from_doubles({{3, 1}}), PointSpec::from_doubles({{0, 0}})};
  const CoronaVerdict v = check_corona({dprime_over_i()}, params(Q(1, 1000000), Q(1), Q(1)), Cone::full(1), pts);
  REQUIRE(v.status == Status::kViolation);
  REQUIRE(v.point);
  CHECK(*v.point == pts[1]);
  REQUIRE(v.lhs);
  REQUIRE(v.rhs);
  CHECK(certainly_less(*v.lhs, *v.rhs));
  CHECK(status_name(v.status) == "violationAt");
}

TEST_CASE("the Liouville pair violates unit constants at 2 pi q_4") {
  const auto fs = liouville::example_pair(6);
  const auto [p4, q4] = liouville::convergents(4);
  const std::vector<PointSpec> pts{PointSpec::real({SymReal{Rational(0), Rational(2 * q4)}})};
  const CoronaVerdict v = check_corona(fs, params(Q(1), Q(1), Q(1)), Cone::orthant(1), pts);
  REQUIRE(v.status == Status::kViolation);
  // Confirmed at twice the working precision.
  const mpfr_prec_t prec = 2 * v.precision;
  const ComplexPoint z = v.point->at(prec);
  CHECK(certainly_less(corona_lhs(fs, z), corona_lower_bound(params(Q(1), Q(1), Q(1)), Cone::orthant(1), z)));
}

TEST_CASE("search finds the real zeros of 1 - exp(-iz)") {
  SearchBox box;
  box.re.push_back({5.0, 8.0});
  box.im.push_back({-0.5, 0.5});
  SearchOptions opts;
  opts.budget = 300;
  const CoronaVerdict v =
      search_violation({Distribution::delta(1) - delta_at(Q(1))}, params(Q(1, 100), Q(1), Q(1)), Cone::full(1), box, opts);
  REQUIRE(v.status == Status::kViolation);
  REQUIRE(v.point);
  CHECK(std::abs(v.point->approx()[0] - std::complex<double>(2 * std::numbers::pi, 0)) < 0.05);
}

TEST_CASE("search over the identity reports the minimal ratio") {
  SearchBox box;
  box.re.push_back({-10.0, 10.0});
  box.im.push_back({-3.0, 3.0});
  SearchOptions opts;
  opts.budget = 200;
  const CoronaVerdict v = search_violation({Distribution::delta(1)}, params(Q(1, 2), Q(1), Q(1)), Cone::full(1), box, opts);
  CHECK(v.status == Status::kNoViolationFound);
  CHECK(v.min_ratio >= 2.0);
}

TEST_CASE("search along the real axis does not falsify unit constants at small K") {
  SearchBox box;
  box.re.push_back({0.0, 1e4});
  box.im.push_back({0.0, 0.0});
  SearchOptions opts;
  opts.budget = 400;
  const CoronaVerdict v =
      search_violation(liouville::example_pair(6), params(Q(1), Q(1), Q(1)), Cone::orthant(1), box, opts);
  CHECK(v.status != Status::kViolation);
  CHECK(v.min_ratio > 1.0);
}

TEST_CASE("search is deterministic for a fixed seed") {
  SearchBox box;
  box.re.push_back({-4.0, 4.0});
  box.im.push_back({-1.0, 1.0});
  SearchOptions opts;
  opts.budget = 120;
  opts.seed = 99;
  const auto fs = std::vector<Distribution>{Distribution::delta(1) + delta_at(Q(1, 3))};
  const CoronaVerdict a = search_violation(fs, params(Q(1), Q(1), Q(1)), Cone::full(1), box, opts);
  const CoronaVerdict b = search_violation(fs, params(Q(1), Q(1), Q(1)), Cone::full(1), box, opts);
  CHECK(a.status == b.status);
  CHECK(a.min_ratio == b.min_ratio);
  CHECK(a.point == b.point);
}

TEST_CASE("Bezout identities") {
  const Distribution d = Distribution::delta(1);
  const BezoutReport r0 = verify_bezout({d}, {d});
  CHECK(r0.exact_identity);
  CHECK(r0.transform_consistent);

  const BezoutReport r1 = verify_bezout({d - delta_at(Q(1)), delta_at(Q(1))}, {d, d});
  CHECK(r1.exact_identity);
  CHECK(r1.max_residual_upper < 1e-30);

  const BezoutReport r2 = verify_bezout({d - delta_at(Q(1))}, {d + delta_at(Q(1))});
  CHECK_FALSE(r2.exact_identity);
  REQUIRE(r2.residual);
  CHECK(*r2.residual == scale(delta_at(Q(2)), ExactComplex(-1)));
  CHECK(r2.max_residual_upper > 0.0);
  CHECK(r2.transform_consistent);

  CHECK_THROWS_AS(verify_bezout({d, d}, {d}), InputError);
}

TEST_CASE("necessity constants") {
  const NecessityResult a = necessity_bound({Distribution::delta(1)}, Cone::orthant(1));
  CHECK(a.params.const_c == Q(1));
  CHECK(a.params.exponent_n == kMinPositive);
  CHECK(a.params.cone_scale_m == kMinPositive);
  CHECK(a.notes.size() == 2);

  const NecessityResult b = necessity_bound({Distribution::delta(1), delta_at(Q(1))}, Cone::orthant(1));
  CHECK(b.params.cone_scale_m == Q(1));
  CHECK(b.params.exponent_n == kMinPositive);
  CHECK(b.params.const_c == Q(1));

  const NecessityResult c = necessity_bound({dprime_over_i()}, Cone::orthant(1));
  CHECK(c.params.exponent_n == Q(1, 2));
  CHECK(c.params.cone_scale_m == kMinPositive);

  CHECK_THROWS_AS(necessity_bound({Distribution::zero(1)}, Cone::orthant(1)), InputError);
  CHECK_THROWS_AS(necessity_bound({delta_at(Q(-1))}, Cone::orthant(1)), InputError);
}

TEST_CASE("necessity chain on constructed Bezout tuples") {
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<long> num(0, 12);
  for (int trial = 0; trial < 6; ++trial) {
    const Rational a = Q(num(rng), 4);
    const Rational b = Q(num(rng), 3);
    const Distribution d = Distribution::delta(1);
    // (delta - h) * delta + h * delta = delta with h a point mass or a density.
    const Distribution h = trial % 2 == 0
                               ? delta_at(a)
                               : Distribution::density(PiecewisePolyDensity::indicator(b, b + 1, ExactComplex(Rational(a + 1))));
    std::vector<Distribution> fs{d - h, h};
    std::vector<Distribution> gs{d, d};
    const BezoutReport r = verify_bezout(fs, gs, 8, static_cast<std::uint64_t>(trial));
    REQUIRE(r.exact_identity);
    const NecessityResult nb = necessity_bound(gs, Cone::orthant(1));
    const auto pts = random_points(rng, 1, 100, 40.0, 8.0);
    const CoronaVerdict v = check_corona(fs, nb.params, Cone::orthant(1), pts);
    CHECK(v.status == Status::kNoViolationFound);
  }
  // Two dimensions, light cone, nontrivial cofactors:
  // (delta - delta_x) * (delta + delta_x) + delta_{2x} * delta = delta.
  const Cone lc = Cone::light(1, Q(1));
  const Distribution d2 = Distribution::delta(2);
  const Distribution dx = delta_at({Q(1, 2), Q(1)});
  const std::vector<Distribution> fs{d2 - dx, dx * dx};
  const std::vector<Distribution> gs{d2 + dx, d2};
  REQUIRE(verify_bezout(fs, gs, 8, 1).exact_identity);
  const NecessityResult nb = necessity_bound(gs, lc);
  CHECK(nb.params.const_c == Q(1, 2));
  const auto pts = random_points(rng, 2, 200, 20.0, 6.0);
  CHECK(check_corona(fs, nb.params, lc, pts).status == Status::kNoViolationFound);
}
