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

#include "corona/ball.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

namespace corona {

// ---------------------------------------------------------------------------
// Real

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(double x, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, x, MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(value_, o.precision());
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  // Leave `o` as a valid minimal-precision zero so its destructor is safe.
  value_[0] = o.value_[0];
  mpfr_init2(o.value_, MPFR_PREC_MIN);
  mpfr_set_zero(o.value_, 1);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(value_, o.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::unique_ptr<char, void (*)(char*)> guard(buf, [](char* p) { mpfr_free_str(p); });
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// Ball helpers

namespace {

// |x| rounded up to radius precision.
Real abs_up(const Real& x) {
  Real r(kRadiusPrecision);
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDU);
  return r;
}

// |x| rounded down to radius precision.
Real abs_down(const Real& x) {
  Real r(kRadiusPrecision);
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDD);
  return r;
}

Real add_up(const Real& a, const Real& b) {
  Real r(kRadiusPrecision);
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}

Real mul_up(const Real& a, const Real& b) {
  Real r(kRadiusPrecision);
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}

// Bound on the round-to-nearest error of a midpoint just produced with the
// given MPFR ternary value: half an ulp is at most |mid| * 2^-prec.
void absorb_rounding(Real& rad, const Real& mid, int ternary) {
  if (ternary == 0) return;
  Real err = abs_up(mid);
  mpfr_mul_2si(err.raw(), err.raw(), 1 - static_cast<long>(mid.precision()), MPFR_RNDU);
  rad = add_up(rad, err);
}

mpfr_prec_t joint_precision(const Ball& a, const Ball& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

// ---------------------------------------------------------------------------
// Ball

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadiusPrecision) {}

Ball Ball::from_parts(Real mid, const Real& rad) {
  Ball b(mid.precision());
  b.mid_ = std::move(mid);
  b.add_error(rad);
  return b;
}

Ball Ball::exact(double x, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_d(b.mid_.raw(), x, MPFR_RNDN);
  absorb_rounding(b.rad_, b.mid_, t);
  return b;
}

Ball Ball::from_rational(const Rational& q, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_q(b.mid_.raw(), q.get_mpq_t(), MPFR_RNDN);
  absorb_rounding(b.rad_, b.mid_, t);
  return b;
}

Ball Ball::with_radius(double mid, double rad, mpfr_prec_t prec) {
  Ball b = exact(mid, prec);
  b.add_error(std::abs(rad));
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_const_pi(b.mid_.raw(), MPFR_RNDN);
  absorb_rounding(b.rad_, b.mid_, t);
  return b;
}

Ball Ball::log_of_rational(const Rational& q, mpfr_prec_t prec) {
  // Extra guard bits keep the conversion error negligible before the log.
  return log(from_rational(q, prec + 16));
}

Real Ball::upper() const {
  Real r(precision());
  mpfr_add(r.raw(), mid_.raw(), rad_.raw(), MPFR_RNDU);
  return r;
}

Real Ball::lower() const {
  Real r(precision());
  mpfr_sub(r.raw(), mid_.raw(), rad_.raw(), MPFR_RNDD);
  return r;
}

bool Ball::contains_zero() const { return lower().sign() <= 0 && upper().sign() >= 0; }

void Ball::add_error(const Real& err) { rad_ = add_up(rad_, abs_up(err)); }

void Ball::add_error(double err) {
  Real e(kRadiusPrecision);
  mpfr_set_d(e.raw(), std::abs(err), MPFR_RNDU);
  rad_ = add_up(rad_, e);
}

std::string Ball::to_string(int digits) const {
  return "[" + mid_.to_string(digits) + " +/- " + rad_.to_string(3) + "]";
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(joint_precision(a, b));
  int t = mpfr_add(r.mid_.raw(), a.mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  r.rad_ = add_up(a.rad_, b.rad_);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(joint_precision(a, b));
  int t = mpfr_sub(r.mid_.raw(), a.mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  r.rad_ = add_up(a.rad_, b.rad_);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball operator-(const Ball& a) {
  Ball r = a;
  mpfr_neg(r.mid_.raw(), r.mid_.raw(), MPFR_RNDN);
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(joint_precision(a, b));
  int t = mpfr_mul(r.mid_.raw(), a.mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  // |a||rb| + |b||ra| + ra rb
  Real e1 = mul_up(abs_up(a.mid_), b.rad_);
  Real e2 = mul_up(abs_up(b.mid_), a.rad_);
  Real e3 = mul_up(a.rad_, b.rad_);
  r.rad_ = add_up(add_up(e1, e2), e3);
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball operator*(const Ball& a, const Rational& q) {
  Ball r(a.precision());
  int t = mpfr_mul_q(r.mid_.raw(), a.mid_.raw(), q.get_mpq_t(), MPFR_RNDN);
  Real aq(kRadiusPrecision);
  Rational abs_q = abs(q);
  mpfr_mul_q(aq.raw(), a.rad_.raw(), abs_q.get_mpq_t(), MPFR_RNDU);
  r.rad_ = aq;
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  Real bm_down = abs_down(b.mid_);
  Real gap(kRadiusPrecision);
  mpfr_sub(gap.raw(), bm_down.raw(), b.rad_.raw(), MPFR_RNDD);
  if (gap.sign() <= 0) throw PrecisionExhausted("division by a ball containing zero");
  Ball r(joint_precision(a, b));
  int t = mpfr_div(r.mid_.raw(), a.mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
    Real num = add_up(mul_up(abs_up(a.mid_), b.rad_), mul_up(abs_up(b.mid_), a.rad_));
    Real den(kRadiusPrecision);
    mpfr_mul(den.raw(), bm_down.raw(), gap.raw(), MPFR_RNDD);
    Real q(kRadiusPrecision);
    mpfr_div(q.raw(), num.raw(), den.raw(), MPFR_RNDU);
    r.rad_ = q;
  }
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball exp(const Ball& a) {
  Ball r(a.precision());
  int t = mpfr_exp(r.mid_.raw(), a.mid_.raw(), MPFR_RNDN);
  if (!a.rad_.is_zero()) {
    // e^m (e^r - 1) <= e^(m + r) r
    Real top(kRadiusPrecision);
    mpfr_add(top.raw(), a.mid_.raw(), a.rad_.raw(), MPFR_RNDU);
    mpfr_exp(top.raw(), top.raw(), MPFR_RNDU);
    r.rad_ = mul_up(top, a.rad_);
  }
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball sin(const Ball& a) {
  Ball r(a.precision());
  int t = mpfr_sin(r.mid_.raw(), a.mid_.raw(), MPFR_RNDN);
  r.rad_ = a.rad_;
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball cos(const Ball& a) {
  Ball r(a.precision());
  int t = mpfr_cos(r.mid_.raw(), a.mid_.raw(), MPFR_RNDN);
  r.rad_ = a.rad_;
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball log(const Ball& a) {
  Real lo(kRadiusPrecision);
  mpfr_sub(lo.raw(), a.mid_.raw(), a.rad_.raw(), MPFR_RNDD);
  if (lo.sign() <= 0) throw PrecisionExhausted("logarithm of a ball that is not certainly positive");
  Ball r(a.precision());
  int t = mpfr_log(r.mid_.raw(), a.mid_.raw(), MPFR_RNDN);
  if (!a.rad_.is_zero()) {
    Real q(kRadiusPrecision);
    mpfr_div(q.raw(), a.rad_.raw(), lo.raw(), MPFR_RNDU);
    r.rad_ = q;
  }
  absorb_rounding(r.rad_, r.mid_, t);
  return r;
}

Ball sqrt(const Ball& a) {
  Real lo(kRadiusPrecision);
  mpfr_sub(lo.raw(), a.mid_.raw(), a.rad_.raw(), MPFR_RNDD);
  Ball r(a.precision());
  if (lo.sign() > 0) {
    int t = mpfr_sqrt(r.mid_.raw(), a.mid_.raw(), MPFR_RNDN);
    if (!a.rad_.is_zero()) {
      // |sqrt(x) - sqrt(m)| <= r / (2 sqrt(m - r))
      Real s(kRadiusPrecision);
      mpfr_sqrt(s.raw(), lo.raw(), MPFR_RNDD);
      mpfr_mul_2ui(s.raw(), s.raw(), 1, MPFR_RNDD);
      Real q(kRadiusPrecision);
      mpfr_div(q.raw(), a.rad_.raw(), s.raw(), MPFR_RNDU);
      r.rad_ = q;
    }
    absorb_rounding(r.rad_, r.mid_, t);
    return r;
  }
  Real hi(kRadiusPrecision);
  mpfr_add(hi.raw(), a.mid_.raw(), a.rad_.raw(), MPFR_RNDU);
  if (hi.sign() < 0) throw PrecisionExhausted("square root of a negative ball");
  if (hi.sign() == 0) return r;
  // Enclose [0, sqrt(hi)].
  Real s(kRadiusPrecision);
  mpfr_sqrt(s.raw(), hi.raw(), MPFR_RNDU);
  mpfr_div_2ui(s.raw(), s.raw(), 1, MPFR_RNDU);
  Real mid(a.precision());
  mpfr_set(mid.raw(), s.raw(), MPFR_RNDN);  // exact: working precision >= radius precision
  return Ball::from_parts(std::move(mid), s);
}

Ball abs(const Ball& a) {
  if (!a.contains_zero()) {
    Ball r = a;
    mpfr_abs(r.mid_.raw(), r.mid_.raw(), MPFR_RNDN);
    return r;
  }
  Real hi = add_up(abs_up(a.mid_), a.rad_);
  mpfr_div_2ui(hi.raw(), hi.raw(), 1, MPFR_RNDU);
  Real mid(a.precision());
  mpfr_set(mid.raw(), hi.raw(), MPFR_RNDN);  // exact: working precision >= radius precision
  return Ball::from_parts(std::move(mid), hi);
}

Ball sqr(const Ball& a) { return a * a; }

Ball pow(const Ball& a, const Ball& e) { return exp(e * log(a)); }

Ball max(const Ball& a, const Ball& b) {
  mpfr_prec_t prec = joint_precision(a, b);
  Real alo = a.lower(), blo = b.lower(), ahi = a.upper(), bhi = b.upper();
  Real lo(prec), hi(prec);
  mpfr_max(lo.raw(), alo.raw(), blo.raw(), MPFR_RNDD);
  mpfr_max(hi.raw(), ahi.raw(), bhi.raw(), MPFR_RNDU);
  Ball r(prec);
  mpfr_add(r.mid_.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
  mpfr_div_2ui(r.mid_.raw(), r.mid_.raw(), 1, MPFR_RNDN);
  Real d1(kRadiusPrecision), d2(kRadiusPrecision);
  mpfr_sub(d1.raw(), hi.raw(), r.mid_.raw(), MPFR_RNDU);
  mpfr_sub(d2.raw(), r.mid_.raw(), lo.raw(), MPFR_RNDU);
  mpfr_max(r.rad_.raw(), d1.raw(), d2.raw(), MPFR_RNDU);
  return r;
}

Ball hull(const Ball& a, const Ball& b) {
  mpfr_prec_t prec = joint_precision(a, b);
  Real alo = a.lower(), blo = b.lower(), ahi = a.upper(), bhi = b.upper();
  Real lo(prec), hi(prec);
  mpfr_min(lo.raw(), alo.raw(), blo.raw(), MPFR_RNDD);
  mpfr_max(hi.raw(), ahi.raw(), bhi.raw(), MPFR_RNDU);
  Ball r(prec);
  mpfr_add(r.mid_.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
  mpfr_div_2ui(r.mid_.raw(), r.mid_.raw(), 1, MPFR_RNDN);
  Real d1(kRadiusPrecision), d2(kRadiusPrecision);
  mpfr_sub(d1.raw(), hi.raw(), r.mid_.raw(), MPFR_RNDU);
  mpfr_sub(d2.raw(), r.mid_.raw(), lo.raw(), MPFR_RNDU);
  mpfr_max(r.rad_.raw(), d1.raw(), d2.raw(), MPFR_RNDU);
  return r;
}

bool certainly_less(const Ball& a, const Ball& b) {
  return mpfr_less_p(a.upper().raw(), b.lower().raw()) != 0;
}

bool certainly_less_equal(const Ball& a, const Ball& b) {
  return mpfr_lessequal_p(a.upper().raw(), b.lower().raw()) != 0;
}

// ---------------------------------------------------------------------------
// ComplexBall

ComplexBall ComplexBall::from_exact(const ExactComplex& z, mpfr_prec_t prec) {
  return {Ball::from_rational(z.re, prec), Ball::from_rational(z.im, prec)};
}

ComplexBall ComplexBall::exact(double re, double im, mpfr_prec_t prec) {
  return {Ball::exact(re, prec), Ball::exact(im, prec)};
}

Ball ComplexBall::abs() const {
  Real h(precision());
  int t = mpfr_hypot(h.raw(), re_.mid().raw(), im_.mid().raw(), MPFR_RNDN);
  // |(x + a, y + b)| - |(x, y)| <= |(a, b)| <= ra + rb
  Real err = add_up(re_.rad(), im_.rad());
  absorb_rounding(err, h, t);
  return Ball::from_parts(std::move(h), err);
}

Ball ComplexBall::norm2() const { return sqr(re_) + sqr(im_); }

double ComplexBall::rad_double() const {
  Real r = add_up(re_.rad(), im_.rad());
  return r.to_double(MPFR_RNDU);
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

ComplexBall operator-(const ComplexBall& a) { return {-a.re_, -a.im_}; }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexBall operator*(const ComplexBall& a, const Ball& s) { return {a.re_ * s, a.im_ * s}; }

ComplexBall operator*(const ComplexBall& a, const Rational& q) { return {a.re_ * q, a.im_ * q}; }

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  Ball n = b.norm2();
  ComplexBall num = a * b.conj();
  return {num.re_ / n, num.im_ / n};
}

ComplexBall exp(const ComplexBall& w) {
  if (mpfr_cmp_ui(w.im().rad().raw(), 1) > 0) {
    throw PrecisionExhausted("phase uncertain by more than one radian; raise the working precision");
  }
  Ball m = exp(w.re());
  return {m * cos(w.im()), m * sin(w.im())};
}

}  // namespace corona
