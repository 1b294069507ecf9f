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

#include "corona/fourier_laplace.hpp"
#include "corona/liouville.hpp"
#include "support.hpp"

using namespace corona;
using namespace corona::liouville;
using corona::testing::Q;

namespace {

BigInt ten_to(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

unsigned long fact(unsigned n) { return n <= 1 ? 1 : n * fact(n - 1); }

// q_K and c_K = sum_{k <= K} 10^(-k!) built directly from the definition.
Rational partial_sum(unsigned k) {
  Rational s;
  for (unsigned j = 1; j <= k; ++j) s += Rational(BigInt(1), ten_to(fact(j)));
  return s;
}

Rational power(const Rational& x, unsigned long e) {
  Rational r(1);
  for (unsigned long i = 0; i < e; ++i) r *= x;
  return r;
}

// 2 pi q^(1-K) (1 + 4 pi^2 q^2) for a rational stand-in of pi.
Rational oracle_ratio(unsigned k, const Rational& pi) {
  const Rational q(ten_to(fact(k)));
  return 2 * pi * (1 + 4 * pi * pi * q * q) / power(q, k - 1);
}

CoronaParams unit() { return {Q(1), Q(1), Q(1)}; }

}  // namespace

TEST_CASE("convergents from the definition") {
  CHECK(convergents(1) == std::pair<BigInt, BigInt>{1, 10});
  CHECK(convergents(2) == std::pair<BigInt, BigInt>{11, 100});
  CHECK(convergents(3) == std::pair<BigInt, BigInt>{110001, 1000000});
  for (unsigned k = 1; k <= 6; ++k) {
    const auto [p, q] = convergents(k);
    CHECK(q == ten_to(fact(k)));
    CHECK(Rational(p) == partial_sum(k) * Rational(q));
    CHECK(truncation(k) == partial_sum(k));
  }
}

TEST_CASE("cap and argument checks") {
  CHECK_THROWS_AS(convergents(0), InputError);
  CHECK_THROWS_AS(convergents(7), InputError);
  CHECK_NOTHROW(convergents(7, 7));
  CHECK_THROWS_AS(convergents(13, 13), InputError);
  try {
    convergents(9);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("digits") != std::string::npos);
  }
  CHECK_THROWS_AS(gap_bound(2, 0), InputError);
}

TEST_CASE("gap bounds against the exact tail") {
  for (unsigned k = 1; k <= 6; ++k) {
    const GapBound g = gap_bound(k);
    const Rational q(ten_to(fact(k)));
    CHECK(sgn(g.lower) > 0);
    CHECK(g.upper <= 1 / power(q, k));
    CHECK(g.power_bound == 1 / power(q, k));
    CHECK(g.lower <= g.upper);
  }
  CHECK(gap_bound(2).upper <= Q(1, 10000));
  // K = 1 with two summed tail terms: 10^-2 + 10^-6 + remainder.
  const GapBound g1 = gap_bound(1, 2);
  CHECK(g1.tail_terms == 2);
  const Rational two_terms = Q(1, 100) + Q(1, 1000000);
  CHECK(g1.upper > two_terms);
  CHECK(g1.upper - two_terms == Rational(10, 9) / Rational(ten_to(24)));
  // The true gap exceeds every finite tail sum; the bound must exceed it.
  CHECK(g1.upper > partial_sum(5) - partial_sum(1));
  CHECK(g1.upper <= Q(1, 10));
}

TEST_CASE("transform magnitude at 2 pi q_K") {
  const TransformBound t2 = transform_magnitude_at(2);
  CHECK(t2.transform_upper <= 2 * kPiUpper * Q(1, 100) * Rational(10, 9) * Rational(1, 1));
  CHECK(t2.transform_upper <= 2 * t2.sin_arg_upper);
  CHECK(t2.f2_vanishes);
  const TransformBound t1 = transform_magnitude_at(1);
  CHECK(t1.transform_upper <= Q(2));
  for (unsigned k = 1; k <= 6; ++k) {
    const TransformBound t = transform_magnitude_at(k);
    CHECK(t.f2_vanishes);
    CHECK(t.transform_upper <= 2 * t.sin_arg_upper);
  }
}

TEST_CASE("numeric transform stays below the exact bound") {
  // Truncating c two levels deeper keeps the phase exact to far below the bound.
  for (unsigned k = 1; k <= 3; ++k) {
    const Rational c = truncation(k + 2);
    const Distribution f1 = Distribution::delta(1) - Distribution::point({c});
    const auto [p, q] = convergents(k);
    const ComplexPoint z = PointSpec::real({SymReal{Rational(0), Rational(2 * q)}}).at(1024);
    const ComplexBall v = fl_transform(f1, z);
    const TransformBound t = transform_magnitude_at(k);
    CHECK(v.abs().upper_double() <= t.transform_upper.get_d());
    CHECK(v.rad_double() < 1e-200);
  }
}

TEST_CASE("ratio oracle: K = 3 fails, K = 4 wins") {
  CHECK(oracle_ratio(3, kPiUpper) > 1);
  CHECK(oracle_ratio(4, kPiUpper) < Rational(BigInt(1), ten_to(21)));
  // The rational pi bounds bracket the display value with the true pi.
  CHECK(oracle_ratio(4, kPiLower) < oracle_ratio(4, kPiUpper));
  CHECK(ratio_upper(3, unit()) == oracle_ratio(3, kPiUpper));
  CHECK(ratio_upper(4, unit()) == oracle_ratio(4, kPiUpper));
  const double r4 = ratio_upper(4, unit()).get_d();
  CHECK(r4 == doctest::Approx(2.4805e-22).epsilon(1e-4));
  CHECK(ratio_upper(3, unit()).get_d() == doctest::Approx(248.05).epsilon(1e-4));
}

TEST_CASE("ratio decreases strictly from K = 2") {
  for (unsigned k = 2; k < 6; ++k) CHECK(ratio_upper(k + 1, unit()) < ratio_upper(k, unit()));
}

TEST_CASE("refutation") {
  const Refutation r = refute_params(unit(), Cone::orthant(1));
  CHECK(r.success);
  CHECK(r.k == 4);
  CHECK(r.ratio_upper == oracle_ratio(4, kPiUpper));
  CHECK(r.ratio_upper < Q(1, 2));

  const Refutation full = refute_params(unit(), Cone::full(1));
  CHECK(full.k == 4);

  const Refutation extreme = refute_params({Q(1, 1000000), Q(5), Q(100)}, Cone::orthant(1));
  // ceil(N) = 5 needs K > 2 ceil(N) + 1; the cap of 6 is not enough.
  CHECK_FALSE(extreme.success);
  CHECK(extreme.required_k_estimate == 12);
  CHECK(extreme.message.find("K = 12") != std::string::npos);

  const Refutation small = refute_params({Q(1, 1000000), Q(2), Q(100)}, Cone::orthant(1));
  CHECK(small.success);
  CHECK(small.k == 6);

  // M never matters on the real axis.
  CHECK(refute_params({Q(1), Q(1), Q(1000)}, Cone::orthant(1)).k == 4);
  CHECK_THROWS_AS(refute_params(unit(), Cone::orthant(2)), InputError);
  CHECK_THROWS_AS(refute_params(unit(), Cone::light(1, Q(1))), InputError);
}

TEST_CASE("refutation over random parameters") {
  // Succeeds exactly when ceil(N) <= 2 at the default cap.
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> logu(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const CoronaParams p{rational_from_double(std::pow(10.0, logu(rng))), rational_from_double(std::pow(10.0, logu(rng))),
                         rational_from_double(std::pow(10.0, logu(rng)))};
    const Refutation r = refute_params(p, Cone::full(1));
    const bool feasible = p.exponent_n <= 2;
    CHECK(r.success == feasible);
    if (r.success) {
      CHECK(r.ratio_upper < Q(1, 2));
      CHECK(r.ratio_upper == ratio_upper(r.k, p));
      if (r.k > 1) CHECK(ratio_upper(r.k - 1, p) >= Q(1, 2));
    } else {
      CHECK(r.required_k_estimate > kDefaultCap);
    }
  }
}

TEST_CASE("report rows") {
  const auto rows = report(4, unit());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].p == 1);
  CHECK(rows[0].q == 10);
  CHECK(rows[1].q == 100);
  CHECK(rows[1].gap.upper <= Q(1, 10000));
  for (const auto& r : rows) {
    CHECK(r.corona_lower <= r.corona_upper);
    CHECK(r.ratio_upper == ratio_upper(r.k, unit()));
  }
  CHECK_THROWS_AS(report(7, unit()), InputError);
}

TEST_CASE("example pair") {
  const auto pair = example_pair(2);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0] == Distribution::delta(1) - Distribution::point({Q(11, 100)}));
  CHECK(pair[1] == Distribution::density(PiecewisePolyDensity::indicator(Q(0), Q(1))));
}
