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

// The corona lower bound
//
//   |f1^(z)| + ... + |fn^(z)| >= C (1 + |z|^2)^(-N) exp(-M H(Im z)),
//
// checked on samples, searched for violations, and derived from Bezout
// cofactors.

#ifndef CORONA_CORONA_HPP_
#define CORONA_CORONA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corona/ball.hpp"
#include "corona/cone.hpp"
#include "corona/distribution.hpp"
#include "corona/fourier_laplace.hpp"
#include "corona/point.hpp"

namespace corona {

struct CoronaParams {
  Rational const_c;
  Rational exponent_n;
  Rational cone_scale_m;

  // Throws InputError unless all three are strictly positive.
  void validate() const;
};

// C (1 + |z|^2)^(-N) exp(-M H(Im z)).
Ball corona_lower_bound(const CoronaParams& params, const Cone& cone, const ComplexPoint& z);

// sum_i |f_i^(z)|.
Ball corona_lhs(const std::vector<Distribution>& fs, const ComplexPoint& z, const TransformOptions& opts = {});

struct CheckOptions {
  mpfr_prec_t precision = kDefaultPrecision;
  // Ceiling for the precision doubling used to separate lhs from rhs.
  mpfr_prec_t max_precision = 2048;
};

struct CoronaVerdict {
  enum class Status { kNoViolationFound, kViolation, kInconclusive };
  Status status = Status::kNoViolationFound;
  std::optional<PointSpec> point;  // violating point, or best candidate
  std::optional<Ball> lhs;
  std::optional<Ball> rhs;
  double min_ratio = 0;            // smallest lhs/rhs seen (midpoints)
  std::size_t evaluated = 0;
  std::size_t unresolved = 0;      // points where lhs and rhs overlapped
  std::vector<std::string> notes;  // skipped points, precision events
  mpfr_prec_t precision = kDefaultPrecision;
};

std::string status_name(CoronaVerdict::Status s);

// Scans the samples in order; the first rigorous violation wins. A point
// whose transforms cannot be evaluated is skipped and noted, which turns an
// otherwise clean scan into kInconclusive.
CoronaVerdict check_corona(const std::vector<Distribution>& fs, const CoronaParams& params, const Cone& cone,
                           const std::vector<PointSpec>& samples, const CheckOptions& opts = {});

// Per-coordinate ranges for the real and imaginary parts.
struct SearchBox {
  struct Range {
    double lo = 0;
    double hi = 0;
  };
  std::vector<Range> re;
  std::vector<Range> im;

  std::size_t dimension() const { return re.size(); }
};

std::vector<PointSpec> sample_box(const SearchBox& box, std::size_t count, std::uint64_t seed);

struct SearchOptions {
  std::size_t budget = 2000;  // transform evaluations
  std::uint64_t seed = 1;
  mpfr_prec_t precision = kDefaultPrecision;
  mpfr_prec_t max_precision = 2048;
};

// Quasi-random scan of log(lhs / rhs) over the box, three rounds of
// golden-section refinement around the best cells, then rigorous
// confirmation of the best candidate.
CoronaVerdict search_violation(const std::vector<Distribution>& fs, const CoronaParams& params, const Cone& cone,
                               const SearchBox& box, const SearchOptions& opts = {});

struct BezoutReport {
  bool representable = true;  // every f_i * g_i was computed exactly
  bool exact_identity = false;
  std::optional<Distribution> residual;  // sum f_i * g_i - delta
  std::size_t samples = 0;
  double max_residual_upper = 0;  // max over samples of upper |sum f^ g^ - 1|
  bool transform_consistent = true;
};

// Exact check of f_1 * g_1 + ... + f_n * g_n = delta plus a transform
// cross-check at random points with |Re z_j|, |Im z_j| <= radius.
BezoutReport verify_bezout(const std::vector<Distribution>& fs, const std::vector<Distribution>& gs,
                           std::size_t samples = 32, std::uint64_t seed = 1, double radius = 5.0);

struct NecessityResult {
  CoronaParams params;
  std::vector<std::string> notes;
};

inline const Rational kMinPositive = Rational(1, 1 << 20);

// Constants for which the cofactors gs force the corona bound: C = 1 / max C_k,
// N = max N_k, M = max |x| over the supports, with N and M clamped to at
// least kMinPositive.
NecessityResult necessity_bound(const std::vector<Distribution>& gs, const Cone& cone);

}  // namespace corona

#endif  // CORONA_CORONA_HPP_
