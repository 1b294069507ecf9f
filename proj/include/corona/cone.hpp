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

#ifndef CORONA_CONE_HPP_
#define CORONA_CONE_HPP_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "corona/exact.hpp"

namespace corona {

// Closed convex cones with apex at the origin.
struct FullSpace {
  int dim;
};

struct Orthant {
  int dim;
};

// {(x, t) in R^spatial x R : |x| <= speed * t}. Ambient dimension is
// spatial + 1, time last.
struct LightCone {
  int spatial_dim;
  Rational speed;
};

// Conic hull of finitely many nonzero generators.
struct Polyhedral {
  int dim;
  std::vector<std::vector<Rational>> generators;
};

class Cone {
 public:
  using Kind = std::variant<FullSpace, Orthant, LightCone, Polyhedral>;

  static Cone full(int dim);
  static Cone orthant(int dim);
  static Cone light(int spatial_dim, Rational speed);
  static Cone polyhedral(int dim, std::vector<std::vector<Rational>> generators);

  const Kind& kind() const { return kind_; }
  int dimension() const;
  std::string name() const;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(kind_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(kind_);
  }

 private:
  explicit Cone(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

// Exact membership of a rational point.
bool contains(const Cone& cone, std::span<const Rational> x);

}  // namespace corona

#endif  // CORONA_CONE_HPP_
