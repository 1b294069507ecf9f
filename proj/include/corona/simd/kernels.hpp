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

// Double-precision batch kernels for the sampling sweeps.
//
// Every kernel has a portable scalar reference in `scalar::` and, on x86-64,
// an AVX2+FMA variant in `avx2::`. The unqualified entry points dispatch at
// runtime on the detected ISA; tests compare the variants directly.

#ifndef CORONA_SIMD_KERNELS_HPP_
#define CORONA_SIMD_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace corona::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
// Best ISA supported by this CPU and build.
Isa detected_isa();
// ISA used by the dispatching entry points. Honors CORONA_FORCE_SCALAR=1.
Isa active_isa();
// Override for tests; throws std::invalid_argument if unsupported.
void set_active_isa(Isa isa);

// Structure-of-arrays point set: coordinate k of point i is
// data[k * count + i].
struct PointCloud {
  std::size_t dim = 0;
  std::size_t count = 0;
  std::vector<double> data;

  PointCloud() = default;
  PointCloud(std::size_t d, std::size_t n) : dim(d), count(n), data(d * n, 0.0) {}
  double& at(std::size_t k, std::size_t i) { return data[k * count + i]; }
  double at(std::size_t k, std::size_t i) const { return data[k * count + i]; }
  // Builds from row-major coordinates (point i at rows[i * d .. i * d + d)).
  static PointCloud from_rows(std::size_t d, std::span<const double> rows);
};

// Batch of (z, w) pairs in C^dim, split into real/imaginary planes with the
// same layout as PointCloud.
struct HessianBatch {
  std::size_t dim = 0;
  std::size_t count = 0;
  std::vector<double> z_re, z_im, w_re, w_im;

  HessianBatch(std::size_t d, std::size_t n)
      : dim(d), count(n), z_re(d * n), z_im(d * n), w_re(d * n), w_im(d * n) {}
};

// max_i <p_i, xi>; -inf for an empty cloud.
double max_dot(const PointCloud& points, std::span<const double> xi);

// w* F(z) w with F(z) = I / (1 + |z|^2) - z z* / (1 + |z|^2)^2, evaluated via
// the Lagrange identity |w|^2 |z|^2 - |w* z|^2 = sum_{j<k} |z_j w_k - z_k w_j|^2
// so every term is a sum of squares.
void hessian_quad_batch(const HessianBatch& batch, std::span<double> out);

namespace scalar {
double max_dot(const PointCloud& points, std::span<const double> xi);
void hessian_quad_batch(const HessianBatch& batch, std::span<double> out);
}  // namespace scalar

namespace avx2 {
double max_dot(const PointCloud& points, std::span<const double> xi);
void hessian_quad_batch(const HessianBatch& batch, std::span<double> out);
}  // namespace avx2

}  // namespace corona::simd

#endif  // CORONA_SIMD_KERNELS_HPP_
