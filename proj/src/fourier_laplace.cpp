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

#include "corona/fourier_laplace.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace corona {

namespace {

// -i w
ComplexBall times_minus_i(const ComplexBall& w) { return {w.im(), -w.re()}; }

Ball zero_ball(mpfr_prec_t prec) { return Ball::exact(0.0, prec); }

ComplexBall zero_complex(mpfr_prec_t prec) { return {zero_ball(prec), zero_ball(prec)}; }

// Smallest N with u^(N+1) / (N+1)! * e^u < 2^(-prec + 4).
unsigned series_terms(double u, mpfr_prec_t prec) {
  if (u == 0.0) return 0;
  const double target = (4.0 - static_cast<double>(prec)) * std::numbers::ln2;
  for (unsigned n = 0; n < 100000; ++n) {
    const double log_tail = static_cast<double>(n + 1) * std::log(u) - std::lgamma(static_cast<double>(n) + 2.0) + u;
    if (log_tail < target) return n;
  }
  throw PrecisionExhausted("power series for a density piece does not converge in a reasonable number of terms");
}

// sum_k |c_k| * integral_a^b |x|^k dx, rounded up. Upper bound on the L1
// norm of the piece.
void add_piece_l1_bound(Real& acc, const Poly& poly, const Rational& a, const Rational& b) {
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
    const auto& c = poly.coeffs()[k];
    if (c.is_zero()) continue;
    Rational e = Rational(1, static_cast<long>(k + 1));
    auto pw = [&](const Rational& x) {
      Rational ax = abs(x);
      Rational out(1);
      for (std::size_t j = 0; j <= k; ++j) out *= ax;
      return out;
    };
    Rational integral;
    if (sgn(a) >= 0) {
      integral = (pw(b) - pw(a)) * e;
    } else if (sgn(b) <= 0) {
      integral = (pw(a) - pw(b)) * e;
    } else {
      integral = (pw(a) + pw(b)) * e;
    }
    Real modulus(kRadiusPrecision);
    Rational n2 = c.norm2();
    mpfr_set_q(modulus.raw(), n2.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(modulus.raw(), modulus.raw(), MPFR_RNDU);
    mpfr_mul_q(modulus.raw(), modulus.raw(), integral.get_mpq_t(), MPFR_RNDU);
    mpfr_add(acc.raw(), acc.raw(), modulus.raw(), MPFR_RNDU);
  }
}

}  // namespace

ComplexBall density_piece_transform(const Poly& poly, const Rational& a, const Rational& b, const ComplexBall& z,
                                    TransformOptions::DensityBranch branch) {
  const mpfr_prec_t prec = z.precision();
  if (poly.is_zero()) return zero_complex(prec);
  const Rational length = b - a;
  const ComplexBall s = times_minus_i(z);  // integrand exp(s x)

  bool use_series = false;
  switch (branch) {
    case TransformOptions::DensityBranch::kSeries: use_series = true; break;
    case TransformOptions::DensityBranch::kClosedForm: use_series = false; break;
    case TransformOptions::DensityBranch::kAuto: {
      const double zl = std::hypot(z.re().mid_double(), z.im().mid_double()) * length.get_d();
      use_series = zl < kSeriesThreshold;
      break;
    }
  }

  if (use_series) {
    // exp(s a) * sum_n s^n / n! * sum_m q_m L^(m + n + 1) / (m + n + 1),
    // with Q(t) = P(a + t).
    const Poly q = poly.shifted(a);
    const Ball u = s.abs() * length;
    const Real u_hi = u.upper();
    const unsigned terms = series_terms(u_hi.to_double(MPFR_RNDU), prec);

    ComplexBall sum = zero_complex(prec);
    ComplexBall s_pow = ComplexBall::exact(1.0, 0.0, prec);
    Rational inv_fact(1);
    for (unsigned n = 0; n <= terms; ++n) {
      ExactComplex c;
      Rational l_pow(1);
      for (unsigned j = 0; j < n + 1; ++j) l_pow *= length;  // L^(n + 1)
      for (std::size_t m = 0; m < q.coeffs().size(); ++m) {
        c += q.coeffs()[m] * (l_pow * Rational(1, static_cast<long>(m + n + 1)));
        l_pow *= length;
      }
      c *= inv_fact;
      sum = sum + s_pow * ComplexBall::from_exact(c, prec);
      s_pow = s_pow * s;
      inv_fact /= Rational(static_cast<long>(n + 1));
    }
    // Remainder: |sum_{n > N}| <= S u^(N+1) / (N+1)! e^u with
    // S = sum_m |q_m| L^(m+1).
    Rational big_s;
    {
      Rational l_pow = length;
      for (const auto& c : q.coeffs()) {
        big_s += (abs(c.re) + abs(c.im)) * l_pow;
        l_pow *= length;
      }
    }
    Ball u_up = Ball::from_parts(u_hi, Real(kRadiusPrecision));
    Ball tail = Ball::from_rational(big_s, prec) * exp(u_up);
    Ball u_pow = Ball::exact(1.0, prec);
    for (unsigned j = 0; j < terms + 1; ++j) u_pow = u_pow * u_up;
    tail = tail * u_pow * Rational(1, factorial(terms + 1));
    const Real tail_hi = tail.upper();
    Ball re = sum.re(), im = sum.im();
    re.add_error(tail_hi);
    im.add_error(tail_hi);
    return ComplexBall(re, im) * exp(s * a);
  }

  // Repeated integration by parts:
  // F(x) = exp(s x) sum_j (-1)^j P^(j)(x) / s^(j + 1), result F(b) - F(a).
  const ComplexBall inv_s = ComplexBall::exact(1.0, 0.0, prec) / s;
  auto antiderivative_at = [&](const Rational& x) {
    ComplexBall acc = zero_complex(prec);
    ComplexBall inv_pow = inv_s;
    Poly deriv = poly;
    for (int j = 0; !deriv.is_zero(); ++j) {
      ExactComplex value = deriv.eval(x);
      if (j % 2 == 1) value = -value;
      acc = acc + ComplexBall::from_exact(value, prec) * inv_pow;
      inv_pow = inv_pow * inv_s;
      deriv = deriv.derivative();
    }
    return exp(s * x) * acc;
  };
  return antiderivative_at(b) - antiderivative_at(a);
}

ComplexBall fl_transform(const Distribution& f, const ComplexPoint& z, const TransformOptions& opts) {
  if (static_cast<std::size_t>(f.dimension()) != z.dimension()) {
    throw InputError("transform point dimension does not match distribution dimension");
  }
  const mpfr_prec_t prec = z.precision();
  ComplexBall total = zero_complex(prec);
  for (const auto& t : f.terms()) {
    // coeff * (i z)^alpha * exp(-i <z, a>)
    ComplexBall phase = zero_complex(prec);
    ComplexBall factor = ComplexBall::from_exact(t.coeff, prec);
    for (std::size_t j = 0; j < z.dimension(); ++j) {
      if (sgn(t.location[j]) != 0) phase = phase + z.coords[j] * t.location[j];
      const ComplexBall iz = z.coords[j].times_i();
      for (unsigned k = 0; k < t.deriv.entries[j]; ++k) factor = factor * iz;
    }
    total = total + factor * exp(times_minus_i(phase));
  }
  if (f.density()) {
    const auto& rho = *f.density();
    for (std::size_t k = 0; k < rho.pieces().size(); ++k) {
      total = total + density_piece_transform(rho.pieces()[k], rho.breakpoints()[k], rho.breakpoints()[k + 1],
                                              z.coords[0], opts.branch);
    }
  }
  if (!total.is_finite()) throw PrecisionExhausted("transform value overflowed");
  if (opts.max_radius && total.rad_double() > *opts.max_radius) {
    throw PrecisionExhausted("transform error bound " + std::to_string(total.rad_double()) +
                             " exceeds the requested " + std::to_string(*opts.max_radius) +
                             " at precision " + std::to_string(prec));
  }
  return total;
}

PwsBound pws_bound_for(const Distribution& f) {
  if (f.is_zero()) throw InputError("growth bound of the zero distribution is undefined");
  Real acc(kRadiusPrecision);
  unsigned max_order = 0;
  for (const auto& t : f.terms()) {
    Real modulus(kRadiusPrecision);
    Rational n2 = t.coeff.norm2();
    mpfr_set_q(modulus.raw(), n2.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(modulus.raw(), modulus.raw(), MPFR_RNDU);
    mpfr_add(acc.raw(), acc.raw(), modulus.raw(), MPFR_RNDU);
    max_order = std::max(max_order, t.deriv.order());
  }
  if (f.density()) {
    const auto& rho = *f.density();
    for (std::size_t k = 0; k < rho.pieces().size(); ++k) {
      add_piece_l1_bound(acc, rho.pieces()[k], rho.breakpoints()[k], rho.breakpoints()[k + 1]);
    }
  }
  PwsBound out;
  out.const_c = acc.to_double(MPFR_RNDU);
  out.exponent_n = static_cast<double>(max_order) / 2.0;
  out.support_box = *support_hull(f);
  return out;
}

Ball box_support_function(const Box& box, const std::vector<Ball>& eta) {
  if (eta.size() != box.lo.size()) throw InputError("support box dimension mismatch");
  Ball acc = zero_ball(eta.empty() ? kDefaultPrecision : eta.front().precision());
  for (std::size_t j = 0; j < eta.size(); ++j) acc = acc + max(eta[j] * box.lo[j], eta[j] * box.hi[j]);
  return acc;
}

Ball pws_rhs(const PwsBound& bound, const ComplexPoint& z) {
  const mpfr_prec_t prec = z.precision();
  Ball rhs = Ball::exact(bound.const_c, prec);
  if (bound.exponent_n != 0.0) {
    Ball base = Ball::exact(1.0, prec) + z.norm2();
    rhs = rhs * exp(Ball::exact(bound.exponent_n, prec) * log(base));
  }
  return rhs * exp(box_support_function(bound.support_box, z.imag_part()));
}

PwsReport verify_pws_on_samples(const Distribution& f, const PwsBound& bound,
                                const std::vector<ComplexPoint>& samples, const TransformOptions& opts) {
  if (samples.empty()) throw InputError("sample set must be nonempty");
  PwsReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& z : samples) {
    PwsSample s{z, fl_transform(f, z, opts), Ball(z.precision()), pws_rhs(bound, z)};
    s.abs_value = s.value.abs();
    Real margin(kRadiusPrecision);
    mpfr_sub(margin.raw(), s.bound.lower().raw(), s.abs_value.upper().raw(), MPFR_RNDD);
    s.margin = margin.to_double(MPFR_RNDD);
    s.pass = margin.sign() >= 0;
    report.all_pass = report.all_pass && s.pass;
    report.worst_margin = std::min(report.worst_margin, s.margin);
    report.samples.push_back(std::move(s));
  }
  return report;
}

}  // namespace corona
