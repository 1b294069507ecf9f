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

#include "corona/ball.hpp"
#include "support.hpp"

using namespace corona;
using corona::testing::Q;

namespace {

bool encloses(const Ball& b, double x) { return b.lower_double() <= x && x <= b.upper_double(); }

}  // namespace

TEST_CASE("rational inputs are enclosed") {
  const Ball third = Ball::from_rational(Q(1, 3), 128);
  CHECK(encloses(third, 1.0 / 3.0));
  CHECK(third.rad_double() < 1e-37);
}

TEST_CASE("elementary functions enclose the libm value") {
  for (double x : {-3.5, -0.25, 0.0, 0.5, 1.0, 7.0}) {
    const Ball b = Ball::exact(x, 128);
    CHECK(encloses(exp(b), std::exp(x)));
    CHECK(encloses(sin(b), std::sin(x)));
    CHECK(encloses(cos(b), std::cos(x)));
    CHECK(encloses(sqr(b), x * x));
    if (x > 0) {
      CHECK(encloses(log(b), std::log(x)));
      CHECK(encloses(sqrt(b), std::sqrt(x)));
    }
  }
  CHECK(encloses(Ball::pi(200), std::numbers::pi));
  CHECK(encloses(Ball::log_of_rational(Q(8), 128), std::log(8.0)));
}

TEST_CASE("radius grows with input uncertainty") {
  const Ball a = Ball::with_radius(1.0, 1e-10, 128);
  const Ball e = exp(a);
  CHECK(e.rad_double() >= std::exp(1.0) * 1e-10 * 0.999);
  CHECK(encloses(e, std::exp(1.0 + 1e-10)));
  CHECK(encloses(e, std::exp(1.0 - 1e-10)));
}

TEST_CASE("ordering predicates are strict about overlap") {
  const Ball a = Ball::with_radius(1.0, 0.1, 64);
  const Ball b = Ball::with_radius(1.15, 0.1, 64);
  const Ball c = Ball::with_radius(2.0, 0.1, 64);
  CHECK_FALSE(certainly_less(a, b));
  CHECK(certainly_less(a, c));
  CHECK(hull(a, c).lower_double() <= 0.9);
  CHECK(hull(a, c).upper_double() >= 2.1);
}

TEST_CASE("complex exponential at a huge real argument") {
  // exp(-i 2 pi 10^6) = 1: needs the argument reduction to keep many bits.
  const mpfr_prec_t prec = 256;
  const Ball two_pi_q = Ball::pi(prec) * Q(2000000);
  const ComplexBall w(Ball(prec), -two_pi_q);
  const ComplexBall e = exp(w);
  CHECK(encloses(e.re(), 1.0));
  CHECK(encloses(e.im(), 0.0));
  CHECK(e.rad_double() < 1e-50);
}

TEST_CASE("division by a ball containing zero fails loudly") {
  const Ball z = Ball::with_radius(0.0, 1e-3, 64);
  CHECK_THROWS_AS(Ball::exact(1.0, 64) / z, PrecisionExhausted);
}
