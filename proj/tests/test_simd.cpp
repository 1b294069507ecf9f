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

#include "corona/simd/kernels.hpp"
#include "support.hpp"

using namespace corona;

namespace {

bool avx2_available() { return simd::detected_isa() == simd::Isa::kAvx2; }

simd::PointCloud random_cloud(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> rows(d * n);
  for (auto& x : rows) x = u(rng);
  return simd::PointCloud::from_rows(d, rows);
}

simd::HessianBatch random_batch(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  std::normal_distribution<double> g(0.0, 5.0);
  simd::HessianBatch b(d, n);
  for (auto* plane : {&b.z_re, &b.z_im, &b.w_re, &b.w_im}) {
    for (auto& x : *plane) x = g(rng);
  }
  return b;
}

double hessian_reference(const simd::HessianBatch& b, std::size_t i) {
  std::complex<double> wz = 0.0;
  double zz = 0, ww = 0;
  for (std::size_t k = 0; k < b.dim; ++k) {
    const std::complex<double> z(b.z_re[k * b.count + i], b.z_im[k * b.count + i]);
    const std::complex<double> w(b.w_re[k * b.count + i], b.w_im[k * b.count + i]);
    zz += std::norm(z);
    ww += std::norm(w);
    wz += std::conj(w) * z;
  }
  const double s = 1 + zz;
  return (ww + ww * zz - std::norm(wz)) / (s * s);
}

}  // namespace

TEST_CASE("point cloud layout") {
  const std::vector<double> rows{1, 2, 3, 4, 5, 6};
  const auto c = simd::PointCloud::from_rows(2, rows);
  CHECK(c.count == 3);
  CHECK(c.at(0, 1) == 3);
  CHECK(c.at(1, 2) == 6);
  CHECK(std::isinf(simd::max_dot(simd::PointCloud(2, 0), std::vector<double>{1, 1})));
}

TEST_CASE("scalar kernels against direct formulas") {
  std::mt19937_64 rng(103);
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto cloud = random_cloud(rng, d, 37);
    std::vector<double> xi(d, 0.5);
    double best = -INFINITY;
    for (std::size_t i = 0; i < cloud.count; ++i) {
      double s = 0;
      for (std::size_t k = 0; k < d; ++k) s += cloud.at(k, i) * xi[k];
      best = std::max(best, s);
    }
    CHECK(simd::scalar::max_dot(cloud, xi) == doctest::Approx(best).epsilon(1e-15));

    const auto batch = random_batch(rng, d, 29);
    std::vector<double> out(29);
    simd::scalar::hessian_quad_batch(batch, out);
    for (std::size_t i = 0; i < 29; ++i) {
      CHECK(out[i] >= 0.0);
      CHECK(out[i] == doctest::Approx(hessian_reference(batch, i)).epsilon(1e-9));
    }
  }
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available on this machine; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(107);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 1000u, 1003u}) {
      const auto cloud = random_cloud(rng, d, n);
      for (int t = 0; t < 5; ++t) {
        const auto xi = random_cloud(rng, d, 1).data;
        const double s = simd::scalar::max_dot(cloud, xi);
        const double v = simd::avx2::max_dot(cloud, xi);
        CHECK(std::abs(s - v) <= 1e-14 * std::max(1.0, std::abs(s)));
      }
      const auto batch = random_batch(rng, d, n);
      std::vector<double> a(n), b(n);
      simd::scalar::hessian_quad_batch(batch, a);
      simd::avx2::hessian_quad_batch(batch, b);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(b[i] >= 0.0);
        CHECK(std::abs(a[i] - b[i]) <= 1e-13 * std::max(1e-300, std::abs(a[i])));
      }
    }
  }
}

TEST_CASE("runtime dispatch") {
  const simd::Isa before = simd::active_isa();
  simd::set_active_isa(simd::Isa::kScalar);
  CHECK(simd::active_isa() == simd::Isa::kScalar);
  std::mt19937_64 rng(109);
  const auto cloud = random_cloud(rng, 3, 100);
  const std::vector<double> xi{0.3, -0.2, 0.9};
  CHECK(simd::max_dot(cloud, xi) == simd::scalar::max_dot(cloud, xi));
  if (avx2_available()) {
    simd::set_active_isa(simd::Isa::kAvx2);
    CHECK(simd::max_dot(cloud, xi) == simd::avx2::max_dot(cloud, xi));
  } else {
    CHECK_THROWS_AS(simd::set_active_isa(simd::Isa::kAvx2), std::invalid_argument);
  }
  simd::set_active_isa(before);
  CHECK(simd::isa_name(simd::Isa::kScalar) == "scalar");
}
