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

#include "corona/exact.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace corona {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
  if (!all_digits(body)) {
    throw InputError("malformed number '" + std::string(whole) + "'");
  }
  BigInt out;
  out.set_str(std::string(body), 10);
  if (!s.empty() && s.front() == '-') out = -out;
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal with optional exponent.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    BigInt ex = parse_integer(exp_text, text);
    if (!ex.fits_slong_p() || abs(ex) > 100000) {
      throw InputError("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = ex.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw InputError("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) throw InputError("malformed number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  BigInt num(digits, 10);
  if (negative) num = -num;
  Rational q(num);
  if (exponent > 0) {
    q *= Rational(pow10(static_cast<unsigned long>(exponent)));
  } else if (exponent < 0) {
    q /= Rational(pow10(static_cast<unsigned long>(-exponent)));
  }
  q.canonicalize();
  return q;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value cannot be made exact");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
  Rational n = b.norm2();
  if (sgn(n) == 0) throw InputError("division by zero complex");
  ExactComplex out = a * b.conj();
  out.re /= n;
  out.im /= n;
  return out;
}

std::string to_string(const ExactComplex& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  if (sgn(z.re) == 0) return to_string(z.im) + "i";
  std::string im = to_string(z.im);
  if (im.front() != '-') im = "+" + im;
  return to_string(z.re) + im + "i";
}

Poly::Poly(std::vector<ExactComplex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const ExactComplex& c) { return Poly(std::vector<ExactComplex>{c}); }

Poly Poly::monomial(const ExactComplex& c, std::size_t power) {
  std::vector<ExactComplex> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

const ExactComplex& Poly::coeff(std::size_t k) const {
  static const ExactComplex kZero;
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactComplex Poly::eval(const Rational& x) const {
  ExactComplex acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ExactComplex> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(v));
}

Poly Poly::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<ExactComplex> v(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    v[k + 1] = coeffs_[k] * Rational(1, static_cast<long>(k + 1));
  }
  return Poly(std::move(v));
}

Poly Poly::shifted(const Rational& a) const { return compose_affine(a, Rational(1)); }

Poly Poly::compose_affine(const Rational& alpha, const Rational& beta) const {
  // Horner in the polynomial ring: acc = acc * (alpha + beta x) + c_k.
  Poly lin(std::vector<ExactComplex>{ExactComplex(alpha), ExactComplex(beta)});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const ExactComplex& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactComplex> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p.coeffs()[k]) + ")";
    if (k == 1) out += "x";
    if (k > 1) out += "x^" + std::to_string(k);
  }
  return out;
}

BigInt pow10(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace corona
