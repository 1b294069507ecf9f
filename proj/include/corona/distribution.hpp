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

// Exact convolution algebra of compactly supported distributions.
//
// The representable class is the span of derivatives of shifted Dirac masses
// (any dimension) plus, in one dimension, piecewise-polynomial densities.
// This class is closed under addition, scaling and convolution, and every
// value is kept in a canonical form so that equality is structural.

#ifndef CORONA_DISTRIBUTION_HPP_
#define CORONA_DISTRIBUTION_HPP_

#include <compare>
#include <optional>
#include <vector>

#include "corona/cone.hpp"
#include "corona/exact.hpp"

namespace corona {

struct MultiIndex {
  std::vector<unsigned> entries;

  static MultiIndex zero(int dim) { return {std::vector<unsigned>(static_cast<std::size_t>(dim), 0)}; }
  unsigned order() const;
  std::size_t dimension() const { return entries.size(); }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// coeff * d^deriv delta_location
struct PointMassTerm {
  ExactComplex coeff;
  std::vector<Rational> location;
  MultiIndex deriv;

  friend bool operator==(const PointMassTerm&, const PointMassTerm&) = default;
};

// One-dimensional density, polynomial on each interval between consecutive
// breakpoints and zero outside [front, back]. Polynomials are in the global
// coordinate x (not shifted to the left endpoint).
class PiecewisePolyDensity {
 public:
  // Validates and canonicalizes: adjacent equal pieces merge, zero pieces at
  // either end are trimmed. Returns nullopt when everything cancels.
  static std::optional<PiecewisePolyDensity> make(std::vector<Rational> breakpoints,
                                                  std::vector<Poly> pieces);
  // c on [a, b].
  static PiecewisePolyDensity indicator(const Rational& a, const Rational& b,
                                        const ExactComplex& c = ExactComplex(1));

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  const Rational& support_lo() const { return breakpoints_.front(); }
  const Rational& support_hi() const { return breakpoints_.back(); }

  // Value at x, taking the piece to the right of a breakpoint (zero past the
  // last one).
  ExactComplex right_limit(const Rational& x) const;
  ExactComplex left_limit(const Rational& x) const;

  friend bool operator==(const PiecewisePolyDensity&, const PiecewisePolyDensity&) = default;

 private:
  PiecewisePolyDensity() = default;
  std::vector<Rational> breakpoints_;
  std::vector<Poly> pieces_;
};

class Distribution {
 public:
  explicit Distribution(int dimension);  // the zero distribution
  Distribution(int dimension, std::vector<PointMassTerm> terms,
               std::optional<PiecewisePolyDensity> density = std::nullopt);

  static Distribution zero(int dimension) { return Distribution(dimension); }
  static Distribution delta(int dimension);
  // coeff * d^deriv delta_location; deriv defaults to order zero.
  static Distribution point(std::vector<Rational> location, ExactComplex coeff = ExactComplex(1),
                            std::optional<MultiIndex> deriv = std::nullopt);
  static Distribution density(PiecewisePolyDensity rho);

  int dimension() const { return dimension_; }
  const std::vector<PointMassTerm>& terms() const { return terms_; }
  const std::optional<PiecewisePolyDensity>& density() const { return density_; }
  bool is_zero() const { return terms_.empty() && !density_; }
  unsigned max_order() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  void normalize();

  int dimension_;
  std::vector<PointMassTerm> terms_;
  std::optional<PiecewisePolyDensity> density_;
};

// Axis-aligned box [lo, hi].
struct Box {
  std::vector<Rational> lo;
  std::vector<Rational> hi;

  // Minkowski sum.
  friend Box operator+(const Box& a, const Box& b);
  bool contains(const Box& inner) const;
  friend bool operator==(const Box&, const Box&) = default;
};

Distribution add(const Distribution& f, const Distribution& g);
Distribution scale(const Distribution& f, const ExactComplex& lambda);
Distribution convolve(const Distribution& f, const Distribution& g);

// Derivative in the sense of distributions: piecewise derivative plus a
// jump * delta at every discontinuity.
Distribution distributional_derivative(const PiecewisePolyDensity& rho);
// First derivative of a one-dimensional distribution.
Distribution derivative(const Distribution& f);

// Empty for the zero distribution.
std::optional<Box> support_hull(const Distribution& f);
bool in_cone(const Distribution& f, const Cone& cone);

Distribution operator+(const Distribution& f, const Distribution& g);
Distribution operator-(const Distribution& f, const Distribution& g);
Distribution operator*(const Distribution& f, const Distribution& g);

}  // namespace corona

#endif  // CORONA_DISTRIBUTION_HPP_
