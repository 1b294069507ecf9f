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

// Fourier-Laplace transform f^(z) = <f, exp(-i z . x)> of exact
// distributions, evaluated in ball arithmetic, and Paley-Wiener-Schwartz
// growth constants |f^(z)| <= C (1 + |z|^2)^N exp(H_K(Im z)).

#ifndef CORONA_FOURIER_LAPLACE_HPP_
#define CORONA_FOURIER_LAPLACE_HPP_

#include <optional>
#include <vector>

#include "corona/ball.hpp"
#include "corona/distribution.hpp"
#include "corona/point.hpp"

namespace corona {

struct TransformOptions {
  enum class DensityBranch { kAuto, kSeries, kClosedForm };
  // kAuto picks the power series when |z| * (piece length) < 1/2.
  DensityBranch branch = DensityBranch::kAuto;
  // Fail with PrecisionExhausted when the result radius exceeds this.
  std::optional<double> max_radius;
};

inline constexpr double kSeriesThreshold = 0.5;

ComplexBall fl_transform(const Distribution& f, const ComplexPoint& z, const TransformOptions& opts = {});

// Integral of poly(x) exp(-i z x) over [a, b].
ComplexBall density_piece_transform(const Poly& poly, const Rational& a, const Rational& b, const ComplexBall& z,
                                    TransformOptions::DensityBranch branch);

struct PwsBound {
  double const_c = 0;      // rounded upward
  double exponent_n = 0;
  Box support_box;
};

// Throws InputError for the zero distribution.
PwsBound pws_bound_for(const Distribution& f);

// Supporting function of the box: sum_j max(lo_j eta_j, hi_j eta_j).
Ball box_support_function(const Box& box, const std::vector<Ball>& eta);

// C (1 + |z|^2)^N exp(H_K(Im z)) as a ball.
Ball pws_rhs(const PwsBound& bound, const ComplexPoint& z);

struct PwsSample {
  ComplexPoint point;
  ComplexBall value;
  Ball abs_value;
  Ball bound;
  double margin = 0;  // lower(bound) - upper(|value|)
  bool pass = false;
};

struct PwsReport {
  std::vector<PwsSample> samples;
  double worst_margin = 0;
  bool all_pass = true;
};

PwsReport verify_pws_on_samples(const Distribution& f, const PwsBound& bound,
                                const std::vector<ComplexPoint>& samples, const TransformOptions& opts = {});

}  // namespace corona

#endif  // CORONA_FOURIER_LAPLACE_HPP_
