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

#include <array>
#include <cmath>
#include <functional>

#include "corona/cone.hpp"
#include "corona/distribution.hpp"
#include "support.hpp"

using namespace corona;
using corona::testing::delta_at;
using corona::testing::Q;

namespace {

Distribution indicator01() { return Distribution::density(PiecewisePolyDensity::indicator(Q(0), Q(1))); }

std::complex<double> eval_density(const PiecewisePolyDensity& rho, double x) {
  const auto& bp = rho.breakpoints();
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    if (bp[k].get_d() <= x && x < bp[k + 1].get_d()) {
      std::complex<double> acc = 0.0;
      const auto& c = rho.pieces()[k].coeffs();
      for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + std::complex<double>(c[j].re.get_d(), c[j].im.get_d());
      return acc;
    }
  }
  return 0.0;
}

// (rho * sigma)(x) by 5-point Gauss-Legendre on every interval between the
// kinks of y -> rho(y) sigma(x - y). Exact up to rounding for the polynomial
// degrees used here.
std::complex<double> convolution_quadrature(const PiecewisePolyDensity& rho, const PiecewisePolyDensity& sigma,
                                            double x) {
  std::vector<double> cuts;
  for (const auto& b : rho.breakpoints()) cuts.push_back(b.get_d());
  for (const auto& b : sigma.breakpoints()) cuts.push_back(x - b.get_d());
  std::sort(cuts.begin(), cuts.end());
  static constexpr std::array<double, 5> node{0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                              0.9061798459386640};
  static constexpr std::array<double, 5> weight{0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                                0.2369268850561891, 0.2369268850561891};
  std::complex<double> total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k], b = cuts[k + 1];
    if (b - a <= 0) continue;
    for (std::size_t i = 0; i < 5; ++i) {
      const double y = 0.5 * (a + b) + 0.5 * (b - a) * node[i];
      total += 0.5 * (b - a) * weight[i] * eval_density(rho, y) * eval_density(sigma, x - y);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("addition and cancellation") {
  const Distribution d = Distribution::delta(1);
  CHECK((d + scale(d, ExactComplex(-1))).is_zero());
  CHECK((d - delta_at(Q(1, 3))) + delta_at(Q(1, 3)) == d);
  const Distribution two = indicator01() + indicator01();
  REQUIRE(two.density());
  CHECK(two.density()->pieces().size() == 1);
  CHECK(two.density()->pieces()[0] == Poly::constant(ExactComplex(2)));
  CHECK_THROWS_AS(Distribution::delta(1) + Distribution::delta(2), InputError);
}

TEST_CASE("scaling") {
  const Distribution d = Distribution::delta(1);
  CHECK(scale(d, ExactComplex(1)) == d);
  CHECK(scale(d - delta_at(Q(1)), ExactComplex(-1)) == delta_at(Q(1)) - d);
  CHECK(scale(indicator01(), ExactComplex(2)) ==
        Distribution::density(PiecewisePolyDensity::indicator(Q(0), Q(1), ExactComplex(2))));
  CHECK(scale(d, ExactComplex(0)).is_zero());
}

TEST_CASE("point-mass convolution") {
  CHECK(delta_at(Q(1, 2)) * delta_at(Q(1, 3)) == delta_at(Q(5, 6)));
  const Distribution f = Distribution::delta(1) - delta_at(Q(11, 100));
  CHECK(Distribution::delta(1) * f == f);
  // (c1 d^a delta_x) * (c2 d^b delta_y) = c1 c2 d^(a+b) delta_(x+y)
  const Distribution a = Distribution::point({Q(1), Q(2)}, ExactComplex(Q(3)), MultiIndex{{1, 0}});
  const Distribution b = Distribution::point({Q(-1), Q(1, 2)}, ExactComplex(Q(0), Q(2)), MultiIndex{{0, 2}});
  CHECK(a * b == Distribution::point({Q(0), Q(5, 2)}, ExactComplex(Q(0), Q(6)), MultiIndex{{1, 2}}));
}

TEST_CASE("indicator self-convolution is the hat, checked by quadrature") {
  const Distribution hat = indicator01() * indicator01();
  REQUIRE(hat.density());
  REQUIRE(hat.terms().empty());
  const auto& rho = *hat.density();
  CHECK(rho.breakpoints() == std::vector<Rational>{Q(0), Q(1), Q(2)});
  CHECK(rho.pieces()[0] == Poly({ExactComplex(0), ExactComplex(1)}));
  CHECK(rho.pieces()[1] == Poly({ExactComplex(2), ExactComplex(-1)}));
  const Distribution one = indicator01();
  const auto& ind = *one.density();
  for (int i = 0; i <= 400; ++i) {
    const double x = -0.5 + 3.0 * i / 400.0 + 1e-9;
    CHECK(std::abs(eval_density(rho, x) - convolution_quadrature(ind, ind, x)) <= 1e-12);
  }
}

TEST_CASE("random density convolutions agree with quadrature") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Distribution f = testing::random_density(rng);
    const Distribution g = testing::random_density(rng);
    const Distribution h = f * g;
    REQUIRE(h.terms().empty());
    REQUIRE(h.density());
    double scale_ref = 1.0;
    for (int i = 0; i <= 60; ++i) {
      const double x = -3.0 + 8.0 * i / 60.0 + 1e-7;
      const auto want = convolution_quadrature(*f.density(), *g.density(), x);
      scale_ref = std::max(scale_ref, std::abs(want));
      CHECK(std::abs(eval_density(*h.density(), x) - want) <= 1e-10 * scale_ref);
    }
  }
}

TEST_CASE("distributional derivative") {
  const Distribution one = indicator01();
  const auto& ind = *one.density();
  CHECK(distributional_derivative(ind) == Distribution::delta(1) - delta_at(Q(1)));

  const Distribution hat = indicator01() * indicator01();
  const Distribution dh = distributional_derivative(*hat.density());
  CHECK(dh.terms().empty());
  CHECK(dh == indicator01() - Distribution::density(PiecewisePolyDensity::indicator(Q(1), Q(2))));

  auto sq = PiecewisePolyDensity::make({Q(0), Q(1)}, {Poly::monomial(ExactComplex(1), 2)});
  REQUIRE(sq);
  const Distribution dsq = distributional_derivative(*sq);
  const Distribution expect = Distribution::density(*PiecewisePolyDensity::make(
                                  {Q(0), Q(1)}, {Poly::monomial(ExactComplex(2), 1)})) -
                              delta_at(Q(1));
  CHECK(dsq == expect);
}

TEST_CASE("derivative point mass acting on a density") {
  // delta' * 1_[0,1] = delta_0 - delta_1
  const Distribution dprime = Distribution::point({Q(0)}, ExactComplex(1), MultiIndex{{1}});
  CHECK(dprime * indicator01() == Distribution::delta(1) - delta_at(Q(1)));
  // delta_a' * hat = (hat shifted by a)'
  const Distribution shifted = Distribution::point({Q(1, 2)}, ExactComplex(1), MultiIndex{{1}});
  const Distribution hat = indicator01() * indicator01();
  CHECK(shifted * hat == derivative(delta_at(Q(1, 2)) * hat));
}

TEST_CASE("ring laws on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Distribution f = testing::random_point_masses(rng, 1, 3, 2);
    const Distribution g = testing::random_point_masses(rng, 1, 3, 2);
    const Distribution h = testing::random_point_masses(rng, 1, 2, 1);
    const Distribution rho = testing::random_density(rng);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(Distribution::delta(1) * f == f);
    CHECK(f * rho == rho * f);
    CHECK((f * g) * rho == f * (g * rho));
  }
  for (int d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const Distribution f = testing::random_point_masses(rng, d, 3, 2);
      const Distribution g = testing::random_point_masses(rng, d, 3, 2);
      const Distribution h = testing::random_point_masses(rng, d, 2, 1);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
    }
  }
}

TEST_CASE("support hull") {
  CHECK(support_hull(Distribution::delta(2)) == Box{{Q(0), Q(0)}, {Q(0), Q(0)}});
  CHECK(support_hull(Distribution::delta(1) - delta_at(Q(11, 100))) == Box{{Q(0)}, {Q(11, 100)}});
  CHECK(support_hull(indicator01() + delta_at(Q(3))) == Box{{Q(0)}, {Q(3)}});
  CHECK_FALSE(support_hull(Distribution::zero(1)).has_value());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Distribution f = testing::random_point_masses(rng, 2, 3, 1);
    const Distribution g = testing::random_point_masses(rng, 2, 3, 1);
    const auto h = support_hull(f * g);
    if (h) CHECK((*support_hull(f) + *support_hull(g)).contains(*h));
  }
}

TEST_CASE("cone membership") {
  CHECK(in_cone(delta_at(Q(1)), Cone::orthant(1)));
  CHECK_FALSE(in_cone(delta_at(Q(-1)), Cone::orthant(1)));
  CHECK(in_cone(delta_at({Q(1), Q(0), Q(2)}), Cone::light(2, Q(1))));
  CHECK_FALSE(in_cone(delta_at({Q(3), Q(0), Q(2)}), Cone::light(2, Q(1))));
  CHECK(in_cone(indicator01(), Cone::orthant(1)));
  CHECK_FALSE(in_cone(Distribution::density(PiecewisePolyDensity::indicator(Q(-1), Q(1))), Cone::orthant(1)));

  // Closure under convolution: locations are nonnegative combinations of rays.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> w(0, 6);
  struct Case {
    Cone cone;
    std::vector<std::vector<Rational>> rays;
  };
  const Case cases[] = {
      {Cone::orthant(2), {{Q(1), Q(0)}, {Q(0), Q(1)}}},
      {Cone::light(1, Q(1, 2)), {{Q(1, 2), Q(1)}, {Q(-1, 2), Q(1)}}},
      {Cone::polyhedral(2, {{Q(1), Q(0)}, {Q(1), Q(1)}}), {{Q(1), Q(0)}, {Q(1), Q(1)}}},
  };
  auto random_in = [&](const Case& c) {
    Distribution f(2);
    for (int t = 0; t < 3; ++t) {
      std::vector<Rational> loc{Q(0), Q(0)};
      for (const auto& r : c.rays) {
        const Rational lambda = Q(w(rng), 3);
        loc[0] += lambda * r[0];
        loc[1] += lambda * r[1];
      }
      f = f + Distribution::point(loc, testing::random_coeff(rng));
    }
    return f.is_zero() ? Distribution::delta(2) : f;
  };
  for (const auto& c : cases) {
    for (int trial = 0; trial < 25; ++trial) {
      const Distribution f = random_in(c);
      const Distribution g = random_in(c);
      REQUIRE(in_cone(f, c.cone));
      REQUIRE(in_cone(g, c.cone));
      CHECK(in_cone(f * g, c.cone));
    }
  }
}
