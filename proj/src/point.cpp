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

#include "corona/point.hpp"

#include <cctype>
#include <numbers>

namespace corona {

ComplexPoint ComplexPoint::from_doubles(const std::vector<std::complex<double>>& z, mpfr_prec_t prec) {
  ComplexPoint p;
  p.coords.reserve(z.size());
  for (const auto& c : z) p.coords.push_back(ComplexBall::exact(c.real(), c.imag(), prec));
  return p;
}

std::vector<Ball> ComplexPoint::real_part() const {
  std::vector<Ball> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(c.re());
  return out;
}

std::vector<Ball> ComplexPoint::imag_part() const {
  std::vector<Ball> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(c.im());
  return out;
}

Ball ComplexPoint::norm2() const {
  Ball acc = Ball::exact(0.0, precision());
  for (const auto& c : coords) acc = acc + c.norm2();
  return acc;
}

// ---------------------------------------------------------------------------

SymReal SymReal::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InputError("empty coordinate");
  SymReal out;
  // Split into signed terms at '+'/'-' that do not follow an exponent marker.
  std::size_t start = 0;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    const bool boundary = k == s.size() ||
                          ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E');
    if (!boundary) continue;
    std::string term = s.substr(start, k - start);
    start = k;
    std::string lower;
    for (char c : term) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower.size() >= 2 && lower.substr(lower.size() - 2) == "pi") {
      std::string coeff = term.substr(0, term.size() - 2);
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
      if (coeff.empty() || coeff == "+") {
        out.pi_multiple += 1;
      } else if (coeff == "-") {
        out.pi_multiple -= 1;
      } else {
        out.pi_multiple += parse_rational(coeff);
      }
    } else {
      out.rational += parse_rational(term);
    }
  }
  return out;
}

Ball SymReal::at(mpfr_prec_t prec) const {
  Ball out = Ball::from_rational(rational, prec);
  if (sgn(pi_multiple) != 0) out = out + Ball::pi(prec) * pi_multiple;
  return out;
}

double SymReal::approx() const { return rational.get_d() + pi_multiple.get_d() * std::numbers::pi; }

std::string SymReal::to_string() const {
  if (sgn(pi_multiple) == 0) return corona::to_string(rational);
  std::string pi_part = corona::to_string(pi_multiple) + "pi";
  if (sgn(rational) == 0) return pi_part;
  if (pi_part.front() != '-') pi_part = "+" + pi_part;
  return corona::to_string(rational) + pi_part;
}

// ---------------------------------------------------------------------------

PointSpec PointSpec::from_doubles(const std::vector<std::complex<double>>& z) {
  PointSpec p;
  for (const auto& c : z) {
    p.coords.push_back({SymReal{rational_from_double(c.real()), {}}, SymReal{rational_from_double(c.imag()), {}}});
  }
  return p;
}

PointSpec PointSpec::real(std::vector<SymReal> xs) {
  PointSpec p;
  for (auto& x : xs) p.coords.push_back({std::move(x), SymReal{}});
  return p;
}

ComplexPoint PointSpec::at(mpfr_prec_t prec) const {
  ComplexPoint p;
  p.coords.reserve(coords.size());
  for (const auto& c : coords) p.coords.emplace_back(c.re.at(prec), c.im.at(prec));
  return p;
}

std::vector<std::complex<double>> PointSpec::approx() const {
  std::vector<std::complex<double>> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.emplace_back(c.re.approx(), c.im.approx());
  return out;
}

std::string PointSpec::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) out += ", ";
    out += coords[k].re.to_string();
    if (!(coords[k].im == SymReal{})) out += " + i(" + coords[k].im.to_string() + ")";
  }
  return out + ")";
}

}  // namespace corona
