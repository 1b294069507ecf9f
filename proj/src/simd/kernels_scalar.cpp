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

#include <limits>
#include <stdexcept>

#include "corona/simd/kernels.hpp"

namespace corona::simd {

PointCloud PointCloud::from_rows(std::size_t d, std::span<const double> rows) {
  if (d == 0 || rows.size() % d != 0) throw std::invalid_argument("row-major data is not a multiple of the dimension");
  PointCloud out(d, rows.size() / d);
  for (std::size_t i = 0; i < out.count; ++i) {
    for (std::size_t k = 0; k < d; ++k) out.at(k, i) = rows[i * d + k];
  }
  return out;
}

namespace scalar {

double max_dot(const PointCloud& points, std::span<const double> xi) {
  if (xi.size() != points.dim) throw std::invalid_argument("max_dot: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.count; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < points.dim; ++k) acc += points.data[k * points.count + i] * xi[k];
    if (acc > best) best = acc;
  }
  return best;
}

void hessian_quad_batch(const HessianBatch& b, std::span<double> out) {
  if (out.size() < b.count) throw std::invalid_argument("hessian_quad_batch: output too small");
  const std::size_t n = b.count;
  for (std::size_t i = 0; i < n; ++i) {
    double zz = 0.0, ww = 0.0, cross = 0.0;
    for (std::size_t j = 0; j < b.dim; ++j) {
      const double zr = b.z_re[j * n + i], zi = b.z_im[j * n + i];
      const double wr = b.w_re[j * n + i], wi = b.w_im[j * n + i];
      zz += zr * zr + zi * zi;
      ww += wr * wr + wi * wi;
      for (std::size_t k = j + 1; k < b.dim; ++k) {
        const double zkr = b.z_re[k * n + i], zki = b.z_im[k * n + i];
        const double wkr = b.w_re[k * n + i], wki = b.w_im[k * n + i];
        // z_j w_k - z_k w_j
        const double re = (zr * wkr - zi * wki) - (zkr * wr - zki * wi);
        const double im = (zr * wki + zi * wkr) - (zkr * wi + zki * wr);
        cross += re * re + im * im;
      }
    }
    const double s = 1.0 + zz;
    out[i] = (ww + cross) / (s * s);
  }
}

}  // namespace scalar
}  // namespace corona::simd
