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

// Rational approximations p_K / q_K of the Liouville constant
// c = sum_{n >= 1} 10^(-n!) and the exact bounds showing that
// f1 = delta - delta_c, f2 = 1_[0, 1] violate every corona bound at the
// real points z = 2 pi q_K, although f1^ and f2^ share no zero.

#ifndef CORONA_LIOUVILLE_HPP_
#define CORONA_LIOUVILLE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "corona/cone.hpp"
#include "corona/corona.hpp"
#include "corona/distribution.hpp"
#include "corona/exact.hpp"

namespace corona::liouville {

inline constexpr unsigned kDefaultCap = 6;

// 355/113 > pi > 333/106.
inline const Rational kPiUpper(355, 113);
inline const Rational kPiLower(333, 106);

// (p_K, q_K) with q_K = 10^(K!). Throws InputError for K = 0 or K > cap.
std::pair<BigInt, BigInt> convergents(unsigned k, unsigned cap = kDefaultCap);

// p_J / q_J.
Rational truncation(unsigned j, unsigned cap = kDefaultCap);

struct GapBound {
  Rational lower;        // partial tail sum; the gap is at least this
  Rational upper;        // partial tail plus geometric remainder
  Rational power_bound;  // q_K^(-K)
  unsigned tail_terms = 0;  // terms actually summed
};

// Bounds on |c - p_K / q_K| = sum_{k > K} 10^(-k!). The remainder after
// tail_terms terms is bounded by (10/9) 10^(-(K + tail_terms + 1)!); tail terms
// whose exponent would exceed a million digits are dropped. Checks
// upper <= (10/9) 10^(-(K + 1)!) <= q_K^(-K).
GapBound gap_bound(unsigned k, unsigned tail_terms = 1, unsigned cap = kDefaultCap);

struct TransformBound {
  Rational sin_arg_upper;    // pi |c q_K - p_K| <= pi_up q_K gap_upper
  Rational transform_upper;  // |f1^(2 pi q_K)| <= min(2, 2 sin_arg_upper)
  bool f2_vanishes = false;  // exp(-2 pi i q_K) = 1 because q_K is an integer
};

TransformBound transform_magnitude_at(unsigned k, unsigned cap = kDefaultCap);

// 2 pi_up q_K^(1 - K) (1 + 4 pi_up^2 q_K^2)^ceil(N) / C, exact.
Rational ratio_upper(unsigned k, const CoronaParams& params);

struct LiouvilleRow {
  unsigned k = 0;
  BigInt p;
  BigInt q;
  GapBound gap;
  TransformBound transform;
  Rational corona_lower;  // C (1 + 4 pi_up^2 q^2)^(-ceil N)
  Rational corona_upper;  // C (1 + 4 pi_lo^2 q^2)^(-floor N)
  Rational ratio_upper;
};

LiouvilleRow row(unsigned k, const CoronaParams& params, unsigned cap = kDefaultCap);
std::vector<LiouvilleRow> report(unsigned kmax, const CoronaParams& params, unsigned cap = kDefaultCap);

struct Refutation {
  bool success = false;
  unsigned k = 0;
  Rational ratio_upper;
  // When unsuccessful: smallest K for which the double-precision estimate
  // of the ratio drops below 1/2.
  unsigned required_k_estimate = 0;
  std::string message;
};

// Smallest K <= cap with ratio_upper(K) < 1/2. On the real axis
// exp(-M H(Im z)) = 1 for both the full line and the half line, so M plays
// no role. Throws InputError unless the cone is FullSpace(1) or Orthant(1).
Refutation refute_params(const CoronaParams& params, const Cone& cone, unsigned cap = kDefaultCap);

// log10 of the ratio estimate, in doubles. Used as a prefilter and for
// the required-K estimate.
double log10_ratio_estimate(unsigned k, const CoronaParams& params);

// f1 = delta - delta_{p_J / q_J} and f2 = 1_[0, 1].
std::vector<Distribution> example_pair(unsigned j, unsigned cap = kDefaultCap);

}  // namespace corona::liouville

#endif  // CORONA_LIOUVILLE_HPP_
