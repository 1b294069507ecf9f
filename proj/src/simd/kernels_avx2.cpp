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

// Built with -mavx2 -mfma. Only reached through the dispatcher after a CPUID
// check, or directly from tests that perform the same check.

#include <limits>
#include <stdexcept>

#include "corona/simd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define CORONA_HAVE_AVX2 1
#else
#define CORONA_HAVE_AVX2 0
#endif

namespace corona::simd::avx2 {

#if CORONA_HAVE_AVX2

namespace {

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

inline __m256d sq(__m256d x) { return _mm256_mul_pd(x, x); }

}  // namespace

double max_dot(const PointCloud& points, std::span<const double> xi) {
  if (xi.size() != points.dim) throw std::invalid_argument("max_dot: dimension mismatch");
  const std::size_t n = points.count;
  const double* data = points.data.data();
  __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t k = 0; k < points.dim; ++k) {
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(data + k * n + i), _mm256_set1_pd(xi[k]), acc);
    }
    best = _mm256_max_pd(best, acc);
  }
  double out = hmax(best);
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < points.dim; ++k) acc += data[k * n + i] * xi[k];
    if (acc > out) out = acc;
  }
  return out;
}

void hessian_quad_batch(const HessianBatch& b, std::span<double> out) {
  if (out.size() < b.count) throw std::invalid_argument("hessian_quad_batch: output too small");
  const std::size_t n = b.count;
  std::size_t i = 0;
  const __m256d one = _mm256_set1_pd(1.0);
  for (; i + 4 <= n; i += 4) {
    __m256d zz = _mm256_setzero_pd(), ww = _mm256_setzero_pd(), cross = _mm256_setzero_pd();
    for (std::size_t j = 0; j < b.dim; ++j) {
      const __m256d zr = _mm256_loadu_pd(&b.z_re[j * n + i]);
      const __m256d zi = _mm256_loadu_pd(&b.z_im[j * n + i]);
      const __m256d wr = _mm256_loadu_pd(&b.w_re[j * n + i]);
      const __m256d wi = _mm256_loadu_pd(&b.w_im[j * n + i]);
      zz = _mm256_add_pd(zz, _mm256_add_pd(sq(zr), sq(zi)));
      ww = _mm256_add_pd(ww, _mm256_add_pd(sq(wr), sq(wi)));
      for (std::size_t k = j + 1; k < b.dim; ++k) {
        const __m256d zkr = _mm256_loadu_pd(&b.z_re[k * n + i]);
        const __m256d zki = _mm256_loadu_pd(&b.z_im[k * n + i]);
        const __m256d wkr = _mm256_loadu_pd(&b.w_re[k * n + i]);
        const __m256d wki = _mm256_loadu_pd(&b.w_im[k * n + i]);
        const __m256d re = _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(zr, wkr), _mm256_mul_pd(zi, wki)),
                                         _mm256_sub_pd(_mm256_mul_pd(zkr, wr), _mm256_mul_pd(zki, wi)));
        const __m256d im = _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(zr, wki), _mm256_mul_pd(zi, wkr)),
                                         _mm256_add_pd(_mm256_mul_pd(zkr, wi), _mm256_mul_pd(zki, wr)));
        cross = _mm256_add_pd(cross, _mm256_add_pd(sq(re), sq(im)));
      }
    }
    const __m256d s = _mm256_add_pd(one, zz);
    _mm256_storeu_pd(&out[i], _mm256_div_pd(_mm256_add_pd(ww, cross), _mm256_mul_pd(s, s)));
  }
  if (i < n) {
    // Tail through the reference kernel on a compacted copy.
    const std::size_t rest = n - i;
    HessianBatch tail(b.dim, rest);
    for (std::size_t j = 0; j < b.dim; ++j) {
      for (std::size_t r = 0; r < rest; ++r) {
        tail.z_re[j * rest + r] = b.z_re[j * n + i + r];
        tail.z_im[j * rest + r] = b.z_im[j * n + i + r];
        tail.w_re[j * rest + r] = b.w_re[j * n + i + r];
        tail.w_im[j * rest + r] = b.w_im[j * n + i + r];
      }
    }
    scalar::hessian_quad_batch(tail, out.subspan(i, rest));
  }
}

#else  // !CORONA_HAVE_AVX2

double max_dot(const PointCloud&, std::span<const double>) {
  throw std::logic_error("AVX2 kernels were not compiled into this build");
}

void hessian_quad_batch(const HessianBatch&, std::span<double>) {
  throw std::logic_error("AVX2 kernels were not compiled into this build");
}

#endif

}  // namespace corona::simd::avx2
