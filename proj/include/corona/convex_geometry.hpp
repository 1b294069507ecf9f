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

// Metric projections onto cones, the supporting function H of
// B = C n {|x| <= 1}, the weight p(z) = log(1 + |z|^2) + H(Im z), and
// sampled admissibility checks for that weight.

#ifndef CORONA_CONVEX_GEOMETRY_HPP_
#define CORONA_CONVEX_GEOMETRY_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "corona/ball.hpp"
#include "corona/cone.hpp"
#include "corona/point.hpp"
#include "corona/simd/kernels.hpp"

namespace corona {

// Active-set iteration failed to settle. Carries the step log.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::string> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

// Nonnegative least squares min |A x - b|, x >= 0 (Lawson-Hanson active set).
// A is rows x cols in column-major order.
std::vector<double> nnls(std::span<const double> a, std::size_t rows, std::size_t cols, std::span<const double> b);

// Euclidean projection of xi onto the cone. Light-cone vectors are ordered
// (spatial..., time).
std::vector<double> project_onto_cone(const Cone& cone, std::span<const double> xi);

// H(xi) = sup over C n B of <x, xi>.
double support_function(const Cone& cone, std::span<const double> xi);

// Rigorous enclosure of H over every xi inside the given balls.
Ball support_function(const Cone& cone, const std::vector<Ball>& xi);

// p(z) = log(1 + |z|^2) + H(Im z).
Ball weight_p(const Cone& cone, const ComplexPoint& z);

struct LocalityOptions {
  double k1 = 0;
  double k2 = 0;
};

struct LocalityPair {
  ComplexPoint z;
  ComplexPoint zeta;
};

struct LocalityViolation {
  std::size_t index = 0;
  Ball p_z;
  Ball p_zeta;
};

struct LocalityReport {
  std::size_t checked = 0;
  double worst_slack = 0;  // min over pairs of lower(p(z) + log 8 + 1 - p(zeta))
  std::vector<LocalityViolation> violations;
  bool all_pass = true;
};

// Checks p(zeta) <= p(z) + log 8 + 1 for pairs with |z - zeta| <= exp(-k1 p(z) - k2).
// A pair that certainly breaks the distance precondition is an InputError.
LocalityReport check_weight_locality(const Cone& cone, const std::vector<LocalityPair>& pairs,
                                     const LocalityOptions& opts = {});

// w* F(z) w with F(z) = I / (1 + |z|^2) - z z* / (1 + |z|^2)^2.
Ball hessian_quad_form(const ComplexPoint& z, const std::vector<ComplexBall>& w);

struct AxiomSample {
  std::vector<double> xi;
  std::vector<double> eta;
  double t = 1;
};

struct AxiomReport {
  std::size_t checked = 0;
  double worst_subadditivity = 0;  // max of H(xi + eta) - H(xi) - H(eta), relative
  double worst_homogeneity = 0;    // max of |H(t xi) - t H(xi)|, relative
  double tolerance = 1e-12;
  bool all_pass = true;
};

// Throws InputError for t < 0.
AxiomReport check_support_fn_axioms(const Cone& cone, const std::vector<AxiomSample>& samples,
                                    double tolerance = 1e-12);

// Quasi-random points of C n B. The budget is split over boundary strata
// (faces of C on the unit sphere) and the interior cap; the origin is always
// included.
simd::PointCloud sample_cone_ball(const Cone& cone, std::size_t count, std::uint64_t seed = 0);

// max(0, max over the cloud of <x, xi>).
double sampled_support(const simd::PointCloud& cloud, std::span<const double> xi);

}  // namespace corona

#endif  // CORONA_CONVEX_GEOMETRY_HPP_
