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

#include "corona/liouville.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace corona::liouville {

namespace {

// Tail exponents beyond this many digits are not materialized.
constexpr unsigned long kMaxDigits = 1'000'000;

unsigned long small_factorial(unsigned n) {
  unsigned long f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

double log10_factorial(unsigned n) { return std::lgamma(static_cast<double>(n) + 1.0) / std::numbers::ln10; }

void check_k(unsigned k, unsigned cap) {
  if (k == 0) throw InputError("K must be at least 1");
  if (cap > 12) throw InputError("cap above 12 is not supported (q_K would have more than 10^8 digits)");
  if (k > cap) {
    std::ostringstream msg;
    msg << "K = " << k << " exceeds the cap " << cap << "; q_K = 10^(" << k << "!) would have about "
        << std::pow(10.0, log10_factorial(k)) << " decimal digits";
    throw InputError(msg.str());
  }
}

Rational inverse_pow10(unsigned long e) { return Rational(BigInt(1), pow10(e)); }

Rational pow_q(const Rational& x, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

unsigned long ceil_ul(const Rational& x) {
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (sgn(c) < 0) return 0;
  if (!c.fits_ulong_p()) throw InputError("exponent N is too large");
  return c.get_ui();
}

unsigned long floor_ul(const Rational& x) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (sgn(f) < 0) return 0;
  if (!f.fits_ulong_p()) throw InputError("exponent N is too large");
  return f.get_ui();
}

// 1 + 4 pi^2 q^2 with pi replaced by the given rational.
Rational growth_base(const BigInt& q, const Rational& pi) { return 1 + 4 * pi * pi * Rational(q * q); }

}  // namespace

std::pair<BigInt, BigInt> convergents(unsigned k, unsigned cap) {
  check_k(k, cap);
  const unsigned long kf = small_factorial(k);
  BigInt p;
  for (unsigned j = 1; j <= k; ++j) p += pow10(kf - small_factorial(j));
  return {p, pow10(kf)};
}

Rational truncation(unsigned j, unsigned cap) {
  auto [p, q] = convergents(j, cap);
  Rational out(p, q);
  out.canonicalize();
  return out;
}

GapBound gap_bound(unsigned k, unsigned tail_terms, unsigned cap) {
  check_k(k, cap);
  if (tail_terms == 0) throw InputError("tailTerms must be at least 1");
  unsigned t = tail_terms;
  while (t > 0 && small_factorial(k + t + 1) > kMaxDigits) --t;

  GapBound g;
  g.tail_terms = t;
  Rational partial;
  for (unsigned j = k + 1; j <= k + t; ++j) partial += inverse_pow10(small_factorial(j));
  g.upper = partial + Rational(10, 9) * inverse_pow10(small_factorial(k + t + 1));
  g.lower = inverse_pow10(small_factorial(k + 1));
  const BigInt q = pow10(small_factorial(k));
  g.power_bound = Rational(BigInt(1), BigInt(1)) / pow_q(Rational(q), k);

  const Rational chain = Rational(10, 9) * inverse_pow10(small_factorial(k + 1));
  if (!(g.upper <= chain && chain <= g.power_bound && sgn(g.lower) > 0 && g.lower <= g.upper)) {
    throw std::logic_error("gap bound chain failed for K = " + std::to_string(k));
  }
  return g;
}

TransformBound transform_magnitude_at(unsigned k, unsigned cap) {
  const GapBound g = gap_bound(k, 1, cap);
  const BigInt q = pow10(small_factorial(k));
  TransformBound t;
  t.sin_arg_upper = kPiUpper * Rational(q) * g.upper;
  const Rational twice = 2 * t.sin_arg_upper;
  t.transform_upper = twice < Rational(2) ? twice : Rational(2);
  // f2^(z) = (exp(-iz) - 1) / (-iz) and exp(-2 pi i q) = 1 for integer q.
  t.f2_vanishes = mpz_cmp_ui(q.get_mpz_t(), 0) > 0;
  return t;
}

Rational ratio_upper(unsigned k, const CoronaParams& params) {
  params.validate();
  const BigInt q = pow10(small_factorial(k));
  const Rational q_pow = pow_q(Rational(q), k - 1);  // q^(K - 1)
  const Rational growth = pow_q(growth_base(q, kPiUpper), ceil_ul(params.exponent_n));
  return 2 * kPiUpper * growth / (q_pow * params.const_c);
}

double log10_ratio_estimate(unsigned k, const CoronaParams& params) {
  const double kf = std::pow(10.0, log10_factorial(k));
  const double n = static_cast<double>(ceil_ul(params.exponent_n));
  const double log_four_pi2 = std::log10(4.0 * std::numbers::pi * std::numbers::pi);
  // log10(1 + 4 pi^2 10^(2 K!)).
  const double log_base = 2.0 * kf + log_four_pi2 + std::log10(1.0 + std::pow(10.0, -2.0 * kf - log_four_pi2));
  return std::log10(2.0 * std::numbers::pi) + (1.0 - static_cast<double>(k)) * kf + n * log_base -
         std::log10(params.const_c.get_d());
}

LiouvilleRow row(unsigned k, const CoronaParams& params, unsigned cap) {
  params.validate();
  LiouvilleRow r;
  r.k = k;
  std::tie(r.p, r.q) = convergents(k, cap);
  r.gap = gap_bound(k, 1, cap);
  r.transform = transform_magnitude_at(k, cap);
  r.corona_lower = params.const_c / pow_q(growth_base(r.q, kPiUpper), ceil_ul(params.exponent_n));
  r.corona_upper = params.const_c / pow_q(growth_base(r.q, kPiLower), floor_ul(params.exponent_n));
  r.ratio_upper = ratio_upper(k, params);
  return r;
}

std::vector<LiouvilleRow> report(unsigned kmax, const CoronaParams& params, unsigned cap) {
  check_k(kmax, cap);
  std::vector<LiouvilleRow> rows;
  for (unsigned k = 1; k <= kmax; ++k) rows.push_back(row(k, params, cap));
  return rows;
}

Refutation refute_params(const CoronaParams& params, const Cone& cone, unsigned cap) {
  params.validate();
  const bool line = (cone.is<FullSpace>() || cone.is<Orthant>()) && cone.dimension() == 1;
  if (!line) throw InputError("refutation is defined for the full line or the half line only");
  check_k(1, cap);

  const Rational half(1, 2);
  const double threshold = std::log10(0.5);
  Refutation out;
  for (unsigned k = 1; k <= cap; ++k) {
    // The exact ratio is within a factor (355/113 / pi)^(2N+1) of the
    // estimate; skip values that are clearly too large.
    if (log10_ratio_estimate(k, params) > threshold + 1.0) continue;
    Rational r = ratio_upper(k, params);
    if (r < half) {
      out.success = true;
      out.k = k;
      out.ratio_upper = std::move(r);
      return out;
    }
  }
  unsigned need = cap + 1;
  while (need < 170 && log10_ratio_estimate(need, params) >= threshold) ++need;
  out.required_k_estimate = need;
  std::ostringstream msg;
  msg << "no K <= " << cap << " refutes these parameters; about K = " << need
      << " would be needed, and q_K = 10^(K!) is beyond the cap";
  out.message = msg.str();
  return out;
}

std::vector<Distribution> example_pair(unsigned j, unsigned cap) {
  const Rational c = truncation(j, cap);
  Distribution f1 = Distribution::delta(1) - Distribution::point({c});
  Distribution f2 = Distribution::density(PiecewisePolyDensity::indicator(Rational(0), Rational(1)));
  return {f1, f2};
}

}  // namespace corona::liouville
