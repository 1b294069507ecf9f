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

#include "corona/cone.hpp"

#include <algorithm>
#include <optional>
#include <type_traits>

namespace corona {

namespace {

constexpr std::size_t kMaxGenerators = 24;

// Solves G_S lambda = x exactly for the columns in `subset`. Returns the
// coefficients when the columns are independent and the system is
// consistent.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& gens,
                                                 const std::vector<std::size_t>& subset,
                                                 std::span<const Rational> x) {
  const std::size_t rows = x.size();
  const std::size_t cols = subset.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = gens[subset[c]][r];
    a[r][cols] = x[r];
  }
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_row(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) return std::nullopt;  // dependent columns
    std::swap(a[p], a[pivot_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[pivot_row][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[pivot_row][k];
    }
    pivot_col_row[c] = pivot_row;
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (sgn(a[r][cols]) != 0) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> lambda(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto r = pivot_col_row[c];
    lambda[c] = a[r][cols] / a[r][c];
  }
  return lambda;
}

bool polyhedral_contains(const Polyhedral& p, std::span<const Rational> x) {
  bool all_zero = true;
  for (const auto& v : x) all_zero = all_zero && sgn(v) == 0;
  if (all_zero) return true;
  // Caratheodory: x lies in the cone iff it is a nonnegative combination of
  // some linearly independent subset of the generators.
  const std::size_t m = p.generators.size();
  const std::size_t max_size = std::min<std::size_t>(m, static_cast<std::size_t>(p.dim));
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) > max_size) continue;
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (1UL << k)) subset.push_back(k);
    }
    auto lambda = solve_exact(p.generators, subset, x);
    if (!lambda) continue;
    bool nonneg = true;
    for (const auto& l : *lambda) nonneg = nonneg && sgn(l) >= 0;
    if (nonneg) return true;
  }
  return false;
}

}  // namespace

Cone Cone::full(int dim) {
  if (dim < 1) throw InputError("cone dimension must be >= 1");
  return Cone(FullSpace{dim});
}

Cone Cone::orthant(int dim) {
  if (dim < 1) throw InputError("cone dimension must be >= 1");
  return Cone(Orthant{dim});
}

Cone Cone::light(int spatial_dim, Rational speed) {
  if (spatial_dim < 1) throw InputError("light cone needs at least one spatial dimension");
  if (sgn(speed) <= 0) throw InputError("light cone speed must be positive");
  return Cone(LightCone{spatial_dim, std::move(speed)});
}

Cone Cone::polyhedral(int dim, std::vector<std::vector<Rational>> generators) {
  if (dim < 1) throw InputError("cone dimension must be >= 1");
  if (generators.empty()) throw InputError("polyhedral cone needs at least one generator");
  if (generators.size() > kMaxGenerators) throw InputError("too many polyhedral generators (max 24)");
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(dim)) throw InputError("generator dimension mismatch");
    bool zero = true;
    for (const auto& v : g) zero = zero && sgn(v) == 0;
    if (zero) throw InputError("polyhedral generators must be nonzero");
  }
  return Cone(Polyhedral{dim, std::move(generators)});
}

int Cone::dimension() const {
  return std::visit(
      [](const auto& k) -> int {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LightCone>) {
          return k.spatial_dim + 1;
        } else {
          return k.dim;
        }
      },
      kind_);
}

std::string Cone::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FullSpace>) return "full";
        if constexpr (std::is_same_v<T, Orthant>) return "orthant";
        if constexpr (std::is_same_v<T, LightCone>) return "lightcone";
        if constexpr (std::is_same_v<T, Polyhedral>) return "polyhedral";
      },
      kind_);
}

bool contains(const Cone& cone, std::span<const Rational> x) {
  if (x.size() != static_cast<std::size_t>(cone.dimension())) {
    throw InputError("point dimension does not match cone dimension");
  }
  return std::visit(
      [&](const auto& k) -> bool {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FullSpace>) {
          return true;
        } else if constexpr (std::is_same_v<T, Orthant>) {
          for (const auto& v : x) {
            if (sgn(v) < 0) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, LightCone>) {
          const Rational& t = x.back();
          if (sgn(t) < 0) return false;
          Rational spatial;
          for (std::size_t i = 0; i + 1 < x.size(); ++i) spatial += x[i] * x[i];
          return spatial <= k.speed * k.speed * t * t;
        } else {
          return polyhedral_contains(k, x);
        }
      },
      cone.kind());
}

}  // namespace corona
