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

#include "corona/distribution.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace corona {

namespace {

// A polynomial restricted to [lo, hi]; densities are assembled from these.
struct Segment {
  Rational lo;
  Rational hi;
  Poly poly;
};

// Sums overlapping segments on the union grid of their endpoints.
std::optional<PiecewisePolyDensity> assemble(const std::vector<Segment>& segments) {
  if (segments.empty()) return std::nullopt;
  std::vector<Rational> grid;
  for (const auto& s : segments) {
    grid.push_back(s.lo);
    grid.push_back(s.hi);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<Poly> pieces(grid.size() - 1);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    for (const auto& s : segments) {
      if (s.lo <= grid[k] && grid[k + 1] <= s.hi) pieces[k] += s.poly;
    }
  }
  return PiecewisePolyDensity::make(std::move(grid), std::move(pieces));
}

std::vector<Segment> segments_of(const PiecewisePolyDensity& rho) {
  std::vector<Segment> out;
  for (std::size_t k = 0; k < rho.pieces().size(); ++k) {
    if (rho.pieces()[k].is_zero()) continue;
    out.push_back({rho.breakpoints()[k], rho.breakpoints()[k + 1], rho.pieces()[k]});
  }
  return out;
}

// rho(x - a) * c
std::optional<PiecewisePolyDensity> shift_scale(const PiecewisePolyDensity& rho, const Rational& a,
                                                const ExactComplex& c) {
  std::vector<Rational> bps;
  bps.reserve(rho.breakpoints().size());
  for (const auto& b : rho.breakpoints()) bps.push_back(b + a);
  std::vector<Poly> pieces;
  pieces.reserve(rho.pieces().size());
  for (const auto& p : rho.pieces()) pieces.push_back(p.shifted(-a) * c);
  return PiecewisePolyDensity::make(std::move(bps), std::move(pieces));
}

Rational binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

// Integral over t in [lo(x), hi(x)] of P(t) Q(x - t), where each limit is
// alpha + beta x with beta in {0, 1}. Returned as a polynomial in x.
Poly integrate_product(const Poly& p, const Poly& q, const Rational& lo_alpha, const Rational& lo_beta,
                       const Rational& hi_alpha, const Rational& hi_beta) {
  // Q(x - t) = sum_m t^m R_m(x), R_m(x) = (-1)^m sum_j q_j C(j, m) x^(j - m).
  const std::size_t qn = q.coeffs().size();
  std::vector<Poly> r(qn);
  for (std::size_t m = 0; m < qn; ++m) {
    for (std::size_t j = m; j < qn; ++j) {
      ExactComplex c = q.coeffs()[j] * binomial(static_cast<unsigned>(j), static_cast<unsigned>(m));
      if (m % 2 == 1) c = -c;
      r[m] += Poly::monomial(c, j - m);
    }
  }
  // B(t, x) = P(t) Q(x - t) = sum_n t^n B_n(x).
  const std::size_t pn = p.coeffs().size();
  std::vector<Poly> b(pn + qn - 1);
  for (std::size_t i = 0; i < pn; ++i) {
    for (std::size_t m = 0; m < qn; ++m) b[i + m] += r[m] * p.coeffs()[i];
  }
  // Antiderivative in t evaluated at t = alpha + beta x.
  auto antiderivative_at = [&](const Rational& alpha, const Rational& beta) {
    Poly out;
    Poly lin(std::vector<ExactComplex>{ExactComplex(alpha), ExactComplex(beta)});
    Poly power = lin;  // (alpha + beta x)^(n + 1)
    for (std::size_t n = 0; n < b.size(); ++n) {
      out += b[n] * power * ExactComplex(Rational(1, static_cast<long>(n + 1)));
      power = power * lin;
    }
    return out;
  };
  return antiderivative_at(hi_alpha, hi_beta) - antiderivative_at(lo_alpha, lo_beta);
}

std::vector<Segment> convolve_pieces(const Segment& f, const Segment& g) {
  // Support of f(t) g(x - t) in t: [max(a, x - d), min(b, x - c)].
  const Rational &a = f.lo, &b = f.hi, &c = g.lo, &d = g.hi;
  std::vector<Rational> xs{a + c, a + d, b + c, b + d};
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Segment> out;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    Rational mid = (xs[k] + xs[k + 1]) / 2;
    const bool lo_const = a >= mid - d;
    const bool hi_const = b <= mid - c;
    Rational lo_at_mid = lo_const ? a : mid - d;
    Rational hi_at_mid = hi_const ? b : mid - c;
    if (lo_at_mid >= hi_at_mid) continue;
    Poly poly = integrate_product(f.poly, g.poly, lo_const ? a : Rational(-d), Rational(lo_const ? 0 : 1),
                                  hi_const ? b : Rational(-c), Rational(hi_const ? 0 : 1));
    if (!poly.is_zero()) out.push_back({xs[k], xs[k + 1], std::move(poly)});
  }
  return out;
}

Distribution convolve_densities(const PiecewisePolyDensity& f, const PiecewisePolyDensity& g) {
  std::vector<Segment> all;
  for (const auto& sf : segments_of(f)) {
    for (const auto& sg : segments_of(g)) {
      auto part = convolve_pieces(sf, sg);
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return Distribution(1, {}, assemble(all));
}

// (coeff d^k delta_a) * rho in one dimension: shift, scale, then k
// distributional derivatives.
Distribution convolve_point_density(const PointMassTerm& t, const PiecewisePolyDensity& rho) {
  Distribution out(1, {}, shift_scale(rho, t.location[0], t.coeff));
  for (unsigned k = 0; k < t.deriv.entries[0]; ++k) out = derivative(out);
  return out;
}

void require_same_dimension(const Distribution& f, const Distribution& g) {
  if (f.dimension() != g.dimension()) {
    throw InputError("dimension mismatch: " + std::to_string(f.dimension()) + " vs " +
                     std::to_string(g.dimension()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

unsigned MultiIndex::order() const { return std::accumulate(entries.begin(), entries.end(), 0U); }

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.entries.size() != b.entries.size()) throw InputError("multi-index dimension mismatch");
  MultiIndex out = a;
  for (std::size_t k = 0; k < b.entries.size(); ++k) out.entries[k] += b.entries[k];
  return out;
}

// ---------------------------------------------------------------------------

std::optional<PiecewisePolyDensity> PiecewisePolyDensity::make(std::vector<Rational> breakpoints,
                                                               std::vector<Poly> pieces) {
  if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size()) {
    throw InputError("density needs pieces.size() == breakpoints.size() - 1 >= 1");
  }
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    if (!(breakpoints[k] < breakpoints[k + 1])) throw InputError("density breakpoints must be strictly increasing");
  }
  // Merge runs of equal pieces.
  PiecewisePolyDensity out;
  out.breakpoints_.push_back(breakpoints[0]);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (!out.pieces_.empty() && out.pieces_.back() == pieces[k]) {
      out.breakpoints_.back() = breakpoints[k + 1];
    } else {
      out.pieces_.push_back(std::move(pieces[k]));
      out.breakpoints_.push_back(breakpoints[k + 1]);
    }
  }
  // Trim zero pieces at the ends.
  while (!out.pieces_.empty() && out.pieces_.back().is_zero()) {
    out.pieces_.pop_back();
    out.breakpoints_.pop_back();
  }
  std::size_t lead = 0;
  while (lead < out.pieces_.size() && out.pieces_[lead].is_zero()) ++lead;
  if (lead == out.pieces_.size()) return std::nullopt;
  out.pieces_.erase(out.pieces_.begin(), out.pieces_.begin() + static_cast<std::ptrdiff_t>(lead));
  out.breakpoints_.erase(out.breakpoints_.begin(), out.breakpoints_.begin() + static_cast<std::ptrdiff_t>(lead));
  return out;
}

PiecewisePolyDensity PiecewisePolyDensity::indicator(const Rational& a, const Rational& b, const ExactComplex& c) {
  if (c.is_zero()) throw InputError("indicator coefficient must be nonzero");
  auto d = make({a, b}, {Poly::constant(c)});
  return *d;
}

ExactComplex PiecewisePolyDensity::right_limit(const Rational& x) const {
  if (x < breakpoints_.front() || x >= breakpoints_.back()) return {};
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto k = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return pieces_[k].eval(x);
}

ExactComplex PiecewisePolyDensity::left_limit(const Rational& x) const {
  if (x <= breakpoints_.front() || x > breakpoints_.back()) return {};
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto k = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return pieces_[k].eval(x);
}

// ---------------------------------------------------------------------------

Distribution::Distribution(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw InputError("distribution dimension must be >= 1");
}

Distribution::Distribution(int dimension, std::vector<PointMassTerm> terms,
                           std::optional<PiecewisePolyDensity> density)
    : dimension_(dimension), terms_(std::move(terms)), density_(std::move(density)) {
  if (dimension < 1) throw InputError("distribution dimension must be >= 1");
  if (density_ && dimension != 1) throw InputError("densities are supported in dimension 1 only");
  for (const auto& t : terms_) {
    if (t.location.size() != static_cast<std::size_t>(dimension) ||
        t.deriv.dimension() != static_cast<std::size_t>(dimension)) {
      throw InputError("point term dimension does not match distribution dimension");
    }
  }
  normalize();
}

Distribution Distribution::delta(int dimension) {
  return point(std::vector<Rational>(static_cast<std::size_t>(dimension)));
}

Distribution Distribution::point(std::vector<Rational> location, ExactComplex coeff,
                                 std::optional<MultiIndex> deriv) {
  const int d = static_cast<int>(location.size());
  MultiIndex k = deriv ? *deriv : MultiIndex::zero(d);
  return Distribution(d, {PointMassTerm{std::move(coeff), std::move(location), std::move(k)}});
}

Distribution Distribution::density(PiecewisePolyDensity rho) { return Distribution(1, {}, std::move(rho)); }

unsigned Distribution::max_order() const {
  unsigned m = 0;
  for (const auto& t : terms_) m = std::max(m, t.deriv.order());
  return m;
}

void Distribution::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const PointMassTerm& a, const PointMassTerm& b) {
    if (a.location != b.location) return a.location < b.location;
    return a.deriv < b.deriv;
  });
  std::vector<PointMassTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().location == t.location && merged.back().deriv == t.deriv) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const PointMassTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

// ---------------------------------------------------------------------------

Box operator+(const Box& a, const Box& b) {
  Box out = a;
  for (std::size_t k = 0; k < out.lo.size(); ++k) {
    out.lo[k] += b.lo[k];
    out.hi[k] += b.hi[k];
  }
  return out;
}

bool Box::contains(const Box& inner) const {
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (inner.lo[k] < lo[k] || inner.hi[k] > hi[k]) return false;
  }
  return true;
}

Distribution add(const Distribution& f, const Distribution& g) {
  require_same_dimension(f, g);
  std::vector<PointMassTerm> terms = f.terms();
  terms.insert(terms.end(), g.terms().begin(), g.terms().end());
  std::optional<PiecewisePolyDensity> rho;
  if (f.density() && g.density()) {
    auto segs = segments_of(*f.density());
    auto more = segments_of(*g.density());
    segs.insert(segs.end(), more.begin(), more.end());
    rho = assemble(segs);
  } else {
    rho = f.density() ? f.density() : g.density();
  }
  return Distribution(f.dimension(), std::move(terms), std::move(rho));
}

Distribution scale(const Distribution& f, const ExactComplex& lambda) {
  if (lambda.is_zero()) return Distribution(f.dimension());
  std::vector<PointMassTerm> terms = f.terms();
  for (auto& t : terms) t.coeff *= lambda;
  std::optional<PiecewisePolyDensity> rho;
  if (f.density()) rho = shift_scale(*f.density(), Rational(0), lambda);
  return Distribution(f.dimension(), std::move(terms), std::move(rho));
}

Distribution convolve(const Distribution& f, const Distribution& g) {
  require_same_dimension(f, g);
  const int d = f.dimension();
  std::vector<PointMassTerm> terms;
  terms.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      std::vector<Rational> loc = a.location;
      for (std::size_t k = 0; k < loc.size(); ++k) loc[k] += b.location[k];
      terms.push_back({a.coeff * b.coeff, std::move(loc), a.deriv + b.deriv});
    }
  }
  Distribution out(d, std::move(terms));
  // Densities only exist in dimension 1, enforced by the constructor.
  if (g.density()) {
    for (const auto& a : f.terms()) out = add(out, convolve_point_density(a, *g.density()));
  }
  if (f.density()) {
    for (const auto& b : g.terms()) out = add(out, convolve_point_density(b, *f.density()));
  }
  if (f.density() && g.density()) out = add(out, convolve_densities(*f.density(), *g.density()));
  return out;
}

Distribution distributional_derivative(const PiecewisePolyDensity& rho) {
  std::vector<PointMassTerm> jumps;
  for (const auto& b : rho.breakpoints()) {
    ExactComplex jump = rho.right_limit(b) - rho.left_limit(b);
    if (!jump.is_zero()) jumps.push_back({jump, {b}, MultiIndex{{0}}});
  }
  std::vector<Poly> pieces;
  pieces.reserve(rho.pieces().size());
  for (const auto& p : rho.pieces()) pieces.push_back(p.derivative());
  return Distribution(1, std::move(jumps), PiecewisePolyDensity::make(rho.breakpoints(), std::move(pieces)));
}

Distribution derivative(const Distribution& f) {
  if (f.dimension() != 1) throw InputError("derivative() is defined for one-dimensional distributions");
  std::vector<PointMassTerm> terms = f.terms();
  for (auto& t : terms) t.deriv.entries[0] += 1;
  Distribution out(1, std::move(terms));
  if (f.density()) out = add(out, distributional_derivative(*f.density()));
  return out;
}

std::optional<Box> support_hull(const Distribution& f) {
  if (f.is_zero()) return std::nullopt;
  std::optional<Box> box;
  auto include = [&](const std::vector<Rational>& p) {
    if (!box) {
      box = Box{p, p};
      return;
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] < box->lo[k]) box->lo[k] = p[k];
      if (p[k] > box->hi[k]) box->hi[k] = p[k];
    }
  };
  for (const auto& t : f.terms()) include(t.location);
  if (f.density()) {
    include({f.density()->support_lo()});
    include({f.density()->support_hi()});
  }
  return box;
}

bool in_cone(const Distribution& f, const Cone& cone) {
  if (f.dimension() != cone.dimension()) throw InputError("distribution and cone dimensions differ");
  for (const auto& t : f.terms()) {
    if (!contains(cone, t.location)) return false;
  }
  if (f.density()) {
    // Convexity: the support interval lies in the cone iff its endpoints do.
    std::vector<Rational> lo{f.density()->support_lo()}, hi{f.density()->support_hi()};
    if (!contains(cone, lo) || !contains(cone, hi)) return false;
  }
  return true;
}

Distribution operator+(const Distribution& f, const Distribution& g) { return add(f, g); }

Distribution operator-(const Distribution& f, const Distribution& g) {
  return add(f, scale(g, ExactComplex(-1)));
}

Distribution operator*(const Distribution& f, const Distribution& g) { return convolve(f, g); }

}  // namespace corona
