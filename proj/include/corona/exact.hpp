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

#ifndef CORONA_EXACT_HPP_
#define CORONA_EXACT_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace corona {

using BigInt = mpz_class;
using Rational = mpq_class;

// Rejected user input: dimension mismatches, malformed specs, out-of-range
// parameters. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses "7", "-3/4", "0.125", "1e-3", "2.5E+2" into an exact rational.
Rational parse_rational(std::string_view text);

// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

// Canonical "num/den" (or "num" when den == 1).
std::string to_string(const Rational& q);

// Gaussian rational a + b i.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design of the algebra
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(long r) : re(r) {}  // NOLINT

  static ExactComplex i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  ExactComplex conj() const { return {re, -im}; }
  // |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ExactComplex& operator*=(const Rational& s) {
    re *= s;
    im *= s;
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator*(ExactComplex a, const Rational& s) { return a *= s; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }

  // Throws InputError on division by zero.
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b);

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const ExactComplex& z);

// Exact polynomial with Gaussian-rational coefficients, ascending powers.
// Trailing zero coefficients are always trimmed; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<ExactComplex> coeffs);

  static Poly constant(const ExactComplex& c);
  static Poly monomial(const ExactComplex& c, std::size_t power);

  const std::vector<ExactComplex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ExactComplex& coeff(std::size_t k) const;

  ExactComplex eval(const Rational& x) const;
  Poly derivative() const;
  // Antiderivative with zero constant term.
  Poly antiderivative() const;
  // x -> P(x + a).
  Poly shifted(const Rational& a) const;
  // Composition P(alpha + beta x).
  Poly compose_affine(const Rational& alpha, const Rational& beta) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const ExactComplex& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const ExactComplex& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<ExactComplex> coeffs_;
};

std::string to_string(const Poly& p);

BigInt pow10(unsigned long exponent);
BigInt factorial(unsigned long n);

}  // namespace corona

#endif  // CORONA_EXACT_HPP_
