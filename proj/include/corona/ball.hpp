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

// Midpoint-radius ("ball") arithmetic over MPFR.
//
// A Ball [m +/- r] is an enclosure: the exact quantity it stands for lies in
// the closed interval [m - r, m + r]. Midpoints are computed with
// round-to-nearest at the working precision; radii live at a fixed low
// precision and are only ever rounded upward, absorbing both propagated
// input error and the rounding of every midpoint operation.

#ifndef CORONA_BALL_HPP_
#define CORONA_BALL_HPP_

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "corona/exact.hpp"

namespace corona {

// Requested accuracy is unreachable at the configured precision.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kMinPrecision = 53;
inline constexpr mpfr_prec_t kRadiusPrecision = 64;

// Owning MPFR value.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrecision);
  Real(double x, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  // Decimal rendering with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

 private:
  mpfr_t value_;
};

class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = kDefaultPrecision);

  // [mid +/- rad]; the radius is rounded up to radius precision.
  static Ball from_parts(Real mid, const Real& rad);
  static Ball exact(double x, mpfr_prec_t prec);
  static Ball from_rational(const Rational& q, mpfr_prec_t prec);
  // [mid +/- rad] with rad rounded up to a double-representable bound.
  static Ball with_radius(double mid, double rad, mpfr_prec_t prec);
  static Ball pi(mpfr_prec_t prec);
  static Ball log_of_rational(const Rational& q, mpfr_prec_t prec);

  const Real& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  mpfr_prec_t precision() const { return mid_.precision(); }

  double mid_double() const { return mid_.to_double(); }
  // Upper bound on the radius, as a double (may be +inf on overflow).
  double rad_double() const { return rad_.to_double(MPFR_RNDU); }
  // Rigorous endpoints at the working precision.
  Real upper() const;
  Real lower() const;
  double upper_double() const { return upper().to_double(MPFR_RNDU); }
  double lower_double() const { return lower().to_double(MPFR_RNDD); }

  bool is_exact() const { return rad_.is_zero(); }
  bool contains_zero() const;
  bool certainly_positive() const { return lower().sign() > 0; }
  bool certainly_nonnegative() const { return lower().sign() >= 0; }
  bool is_finite() const { return mid_.is_finite() && rad_.is_finite(); }

  // Widen the radius by a nonnegative bound.
  void add_error(const Real& err);
  void add_error(double err);

  std::string to_string(int digits = 20) const;

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  // Throws PrecisionExhausted when the divisor ball contains zero.
  friend Ball operator/(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a);
  friend Ball operator*(const Ball& a, const Rational& q);

  friend Ball exp(const Ball& a);
  friend Ball sin(const Ball& a);
  friend Ball cos(const Ball& a);
  // Throws PrecisionExhausted unless the ball is strictly positive.
  friend Ball log(const Ball& a);
  friend Ball sqrt(const Ball& a);
  friend Ball abs(const Ball& a);
  friend Ball sqr(const Ball& a);
  // a^e for a certainly positive, via exp(e log a).
  friend Ball pow(const Ball& a, const Ball& e);
  // Enclosure of max(a, b).
  friend Ball max(const Ball& a, const Ball& b);
  // Smallest ball (up to rounding) containing both.
  friend Ball hull(const Ball& a, const Ball& b);

 private:
  Real mid_;
  Real rad_;
};

// a < b rigorously (upper(a) < lower(b)).
bool certainly_less(const Ball& a, const Ball& b);
// a <= b rigorously.
bool certainly_less_equal(const Ball& a, const Ball& b);

class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  ComplexBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexBall from_exact(const ExactComplex& z, mpfr_prec_t prec);
  static ComplexBall exact(double re, double im, mpfr_prec_t prec);

  const Ball& re() const { return re_; }
  const Ball& im() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  Ball abs() const;
  Ball norm2() const;
  ComplexBall conj() const { return {re_, -im_}; }
  ComplexBall times_i() const { return {-im_, re_}; }
  // Upper bound on |z - mid(z)|, namely re.rad + im.rad.
  double rad_double() const;
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const Ball& s);
  friend ComplexBall operator*(const ComplexBall& a, const Rational& q);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a);

 private:
  Ball re_;
  Ball im_;
};

// exp(w) for complex w. Throws PrecisionExhausted when the imaginary part
// (the phase) is uncertain by more than one radian.
ComplexBall exp(const ComplexBall& w);

}  // namespace corona

#endif  // CORONA_BALL_HPP_
