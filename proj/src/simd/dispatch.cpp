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

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "corona/simd/kernels.hpp"

namespace corona::simd {

namespace {

Isa probe() {
#if defined(CORONA_BUILD_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

Isa initial_isa() {
  const char* force = std::getenv("CORONA_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0 && force[0] != '\0') return Isa::kScalar;
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) {
    throw std::invalid_argument("AVX2 is not available on this CPU or build");
  }
  active().store(isa, std::memory_order_relaxed);
}

double max_dot(const PointCloud& points, std::span<const double> xi) {
  if (active_isa() == Isa::kAvx2) return avx2::max_dot(points, xi);
  return scalar::max_dot(points, xi);
}

void hessian_quad_batch(const HessianBatch& batch, std::span<double> out) {
  if (active_isa() == Isa::kAvx2) return avx2::hessian_quad_batch(batch, out);
  scalar::hessian_quad_batch(batch, out);
}

}  // namespace corona::simd
