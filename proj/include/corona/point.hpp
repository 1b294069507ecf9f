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

#ifndef CORONA_POINT_HPP_
#define CORONA_POINT_HPP_

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "corona/ball.hpp"
#include "corona/exact.hpp"

namespace corona {

// Point of C^d at a fixed working precision.
struct ComplexPoint {
  std::vector<ComplexBall> coords;

  std::size_t dimension() const { return coords.size(); }
  mpfr_prec_t precision() const { return coords.empty() ? kDefaultPrecision : coords.front().precision(); }

  static ComplexPoint from_doubles(const std::vector<std::complex<double>>& z,
                                   mpfr_prec_t prec = kDefaultPrecision);

  std::vector<Ball> real_part() const;
  std::vector<Ball> imag_part() const;
  // ||z||^2 = sum |z_j|^2
  Ball norm2() const;
};

// a + b*pi with a, b rational. Sample points are stored in this exact form
// so they can be re-materialized at any precision (the test points 2 pi q
// of the Liouville example need several hundred bits).
struct SymReal {
  Rational rational;
  Rational pi_multiple;

  // Accepts "3/4", "0.5", "200pi", "2*pi", "-pi", "1/2+3pi".
  static SymReal parse(std::string_view text);
  Ball at(mpfr_prec_t prec) const;
  double approx() const;
  std::string to_string() const;
  friend bool operator==(const SymReal&, const SymReal&) = default;
};

struct PointSpec {
  struct Coord {
    SymReal re;
    SymReal im;
    friend bool operator==(const Coord&, const Coord&) = default;
  };
  std::vector<Coord> coords;

  static PointSpec from_doubles(const std::vector<std::complex<double>>& z);
  static PointSpec real(std::vector<SymReal> xs);

  std::size_t dimension() const { return coords.size(); }
  ComplexPoint at(mpfr_prec_t prec) const;
  std::vector<std::complex<double>> approx() const;
  std::string to_string() const;
  friend bool operator==(const PointSpec&, const PointSpec&) = default;
};

}  // namespace corona

#endif  // CORONA_POINT_HPP_
