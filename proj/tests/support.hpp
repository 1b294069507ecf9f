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

// Shared fixtures for the unit tests.

#ifndef CORONA_TESTS_SUPPORT_HPP_
#define CORONA_TESTS_SUPPORT_HPP_

#include <complex>
#include <random>
#include <vector>

#include "corona/distribution.hpp"
#include "corona/point.hpp"

namespace corona::testing {

inline Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Distribution delta_at(std::vector<Rational> loc) { return Distribution::point(std::move(loc)); }
inline Distribution delta_at(const Rational& a) { return Distribution::point({a}); }

inline Rational random_rational(std::mt19937_64& rng, long range, long den) {
  std::uniform_int_distribution<long> n(-range * den, range * den);
  return Q(n(rng), den);
}

inline ExactComplex random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-9, 9);
  std::uniform_int_distribution<long> d(1, 5);
  ExactComplex c(Q(n(rng), d(rng)), Q(n(rng), d(rng)));
  if (c.is_zero()) c = ExactComplex(1);
  return c;
}

// Random point-mass combination with locations in [-range, range]^dim.
inline Distribution random_point_masses(std::mt19937_64& rng, int dim, int terms, unsigned max_order,
                                        long range_num = 1, long range_den = 4) {
  std::uniform_int_distribution<unsigned> order(0, max_order);
  std::uniform_int_distribution<long> coord(-range_num * 8, range_num * 8);
  Distribution f(dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<Rational> loc;
    MultiIndex k = MultiIndex::zero(dim);
    for (int j = 0; j < dim; ++j) {
      loc.push_back(Q(coord(rng), 8 * range_den));
    }
    if (max_order > 0) k.entries[static_cast<std::size_t>(rng() % static_cast<unsigned>(dim))] = order(rng);
    f = f + Distribution::point(loc, random_coeff(rng), k);
  }
  if (f.is_zero()) f = Distribution::delta(dim);
  return f;
}

// Random one-dimensional density with up to three pieces of degree <= 2.
inline Distribution random_density(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pieces(1, 3);
  std::uniform_int_distribution<long> width(1, 4);
  std::uniform_int_distribution<long> start(-4, 4);
  const int n = pieces(rng);
  std::vector<Rational> bp{Q(start(rng), 4)};
  std::vector<Poly> polys;
  for (int i = 0; i < n; ++i) {
    bp.push_back(bp.back() + Q(width(rng), 4));
    std::vector<ExactComplex> c;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) c.push_back(random_coeff(rng));
    polys.emplace_back(c);
  }
  auto rho = PiecewisePolyDensity::make(bp, polys);
  if (!rho) return Distribution::density(PiecewisePolyDensity::indicator(Q(0), Q(1)));
  return Distribution::density(*rho);
}

inline std::vector<std::complex<double>> random_complex(std::mt19937_64& rng, int dim, double re, double im) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(dim));
  for (auto& c : z) c = {re * u(rng), im * u(rng)};
  return z;
}

}  // namespace corona::testing

#endif  // CORONA_TESTS_SUPPORT_HPP_
