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

#include "corona/corona.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "corona/convex_geometry.hpp"

namespace corona {

namespace {

void check_inputs(const std::vector<Distribution>& fs, const Cone& cone) {
  if (fs.empty()) throw InputError("at least one distribution is required");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].dimension() != cone.dimension()) {
      throw InputError("distribution " + std::to_string(i) + " has dimension " + std::to_string(fs[i].dimension()) +
                       ", cone has " + std::to_string(cone.dimension()));
    }
    if (!in_cone(fs[i], cone)) {
      throw InputError("distribution " + std::to_string(i) + " is not supported in the cone " + cone.name());
    }
  }
}

double mid_ratio(const Ball& lhs, const Ball& rhs) {
  Real q(kRadiusPrecision);
  mpfr_div(q.raw(), lhs.mid().raw(), rhs.mid().raw(), MPFR_RNDN);
  return q.to_double();
}

double log_mid_ratio(const Ball& lhs, const Ball& rhs) {
  if (lhs.mid().sign() <= 0) return -std::numeric_limits<double>::infinity();
  Real q(kRadiusPrecision);
  mpfr_div(q.raw(), lhs.mid().raw(), rhs.mid().raw(), MPFR_RNDN);
  mpfr_log(q.raw(), q.raw(), MPFR_RNDN);
  return q.to_double();
}

struct PointEval {
  Ball lhs;
  Ball rhs;
};

PointEval evaluate(const std::vector<Distribution>& fs, const CoronaParams& params, const Cone& cone,
                   const PointSpec& p, mpfr_prec_t prec) {
  const ComplexPoint z = p.at(prec);
  return {corona_lhs(fs, z), corona_lower_bound(params, cone, z)};
}

enum class Outcome { kHolds, kViolation, kUnresolved, kFailed };

struct PointResult {
  Outcome outcome = Outcome::kFailed;
  std::optional<PointEval> eval;
  mpfr_prec_t precision = 0;
  std::string note;
};

// Evaluates one point, doubling precision while a violation is plausible but
// not yet separated, then re-confirms a violation at twice the precision that
// found it.
PointResult classify(const std::vector<Distribution>& fs, const CoronaParams& params, const Cone& cone,
                     const PointSpec& p, mpfr_prec_t prec, mpfr_prec_t max_prec) {
  PointResult out;
  for (;;) {
    std::optional<PointEval> e;
    try {
      e = evaluate(fs, params, cone, p, prec);
    } catch (const PrecisionExhausted& err) {
      if (prec * 2 <= max_prec) {
        prec *= 2;
        continue;
      }
      out.note = "skipped " + p.to_string() + ": " + err.what();
      return out;
    }
    out.precision = prec;
    if (certainly_less(e->lhs, e->rhs)) {
      try {
        PointEval confirm = evaluate(fs, params, cone, p, prec * 2);
        if (certainly_less(confirm.lhs, confirm.rhs)) {
          out.outcome = Outcome::kViolation;
          out.eval = std::move(confirm);
          out.precision = prec * 2;
          return out;
        }
      } catch (const PrecisionExhausted&) {
      }
      out.outcome = Outcome::kViolation;
      out.eval = std::move(e);
      out.note = "violation at " + p.to_string() + " could not be re-evaluated at doubled precision";
      return out;
    }
    if (certainly_less_equal(e->rhs, e->lhs)) {
      out.outcome = Outcome::kHolds;
      out.eval = std::move(e);
      return out;
    }
    // Overlapping enclosures: refine until they separate.
    if (prec * 2 <= max_prec) {
      prec *= 2;
      continue;
    }
    out.outcome = Outcome::kUnresolved;
    out.eval = std::move(e);
    return out;
  }
}

// Searchable coordinate: index into the flattened (re_0, im_0, re_1, ...) list.
struct Axis {
  std::size_t slot;
  double lo;
  double hi;
};

PointSpec to_spec(const std::vector<double>& flat) {
  std::vector<std::complex<double>> z;
  for (std::size_t j = 0; j + 1 < flat.size(); j += 2) z.emplace_back(flat[j], flat[j + 1]);
  return PointSpec::from_doubles(z);
}

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, out = 0.0;
  while (i > 0) {
    out += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return out;
}

constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

void CoronaParams::validate() const {
  if (sgn(const_c) <= 0 || sgn(exponent_n) <= 0 || sgn(cone_scale_m) <= 0) {
    throw InputError("corona parameters C, N, M must all be strictly positive");
  }
}

Ball corona_lower_bound(const CoronaParams& params, const Cone& cone, const ComplexPoint& z) {
  if (z.dimension() != static_cast<std::size_t>(cone.dimension())) {
    throw InputError("point dimension does not match cone dimension");
  }
  const mpfr_prec_t prec = z.precision();
  const Ball h = support_function(cone, z.imag_part());
  const Ball growth = log(Ball::exact(1.0, prec) + z.norm2()) * params.exponent_n;
  return exp(-growth - h * params.cone_scale_m) * params.const_c;
}

Ball corona_lhs(const std::vector<Distribution>& fs, const ComplexPoint& z, const TransformOptions& opts) {
  Ball acc = Ball::exact(0.0, z.precision());
  for (const auto& f : fs) acc = acc + fl_transform(f, z, opts).abs();
  return acc;
}

std::string status_name(CoronaVerdict::Status s) {
  switch (s) {
    case CoronaVerdict::Status::kNoViolationFound: return "noViolationFoundOnSamples";
    case CoronaVerdict::Status::kViolation: return "violationAt";
    case CoronaVerdict::Status::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

CoronaVerdict check_corona(const std::vector<Distribution>& fs, const CoronaParams& params, const Cone& cone,
                           const std::vector<PointSpec>& samples, const CheckOptions& opts) {
  params.validate();
  check_inputs(fs, cone);
  if (samples.empty()) throw InputError("sample set must be nonempty");
  if (opts.precision < kMinPrecision) throw InputError("precision must be at least 53 bits");

  CoronaVerdict v;
  v.precision = opts.precision;
  v.min_ratio = std::numeric_limits<double>::infinity();
  std::size_t skipped = 0;
  for (const auto& p : samples) {
    if (p.dimension() != static_cast<std::size_t>(cone.dimension())) {
      throw InputError("sample point dimension does not match cone dimension");
    }
    PointResult r = classify(fs, params, cone, p, opts.precision, opts.max_precision);
    ++v.evaluated;
    if (r.outcome == Outcome::kFailed) {
      ++skipped;
      v.notes.push_back(r.note);
      continue;
    }
    if (!r.note.empty()) v.notes.push_back(r.note);
    const double ratio = mid_ratio(r.eval->lhs, r.eval->rhs);
    if (ratio < v.min_ratio) {
      v.min_ratio = ratio;
      v.point = p;
    }
    if (r.outcome == Outcome::kViolation) {
      v.status = CoronaVerdict::Status::kViolation;
      v.point = p;
      v.lhs = r.eval->lhs;
      v.rhs = r.eval->rhs;
      v.precision = r.precision;
      return v;
    }
    if (r.outcome == Outcome::kUnresolved) ++v.unresolved;
  }
  if (skipped > 0) {
    v.status = CoronaVerdict::Status::kInconclusive;
    v.notes.push_back(std::to_string(skipped) + " sample(s) could not be evaluated");
  }
  if (v.unresolved > 0) {
    v.status = CoronaVerdict::Status::kInconclusive;
    v.notes.push_back(std::to_string(v.unresolved) + " sample(s) unresolved at " +
                      std::to_string(opts.max_precision) + " bits");
  }
  return v;
}

std::vector<PointSpec> sample_box(const SearchBox& box, std::size_t count, std::uint64_t seed) {
  if (box.re.size() != box.im.size()) throw InputError("search box needs matching real and imaginary ranges");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<PointSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::complex<double>> z;
    for (std::size_t j = 0; j < box.dimension(); ++j) {
      const double re = box.re[j].lo + (box.re[j].hi - box.re[j].lo) * u(rng);
      const double im = box.im[j].lo + (box.im[j].hi - box.im[j].lo) * u(rng);
      z.emplace_back(re, im);
    }
    out.push_back(PointSpec::from_doubles(z));
  }
  return out;
}

CoronaVerdict search_violation(const std::vector<Distribution>& fs, const CoronaParams& params, const Cone& cone,
                               const SearchBox& box, const SearchOptions& opts) {
  params.validate();
  check_inputs(fs, cone);
  if (opts.budget == 0) throw InputError("search budget must be positive");
  if (box.dimension() != static_cast<std::size_t>(cone.dimension()) || box.im.size() != box.re.size()) {
    throw InputError("search box dimension does not match cone dimension");
  }

  std::vector<double> base(2 * box.dimension());
  std::vector<Axis> axes;
  for (std::size_t j = 0; j < box.dimension(); ++j) {
    for (int part = 0; part < 2; ++part) {
      const auto& r = part == 0 ? box.re[j] : box.im[j];
      if (r.hi < r.lo) throw InputError("search box range has hi < lo");
      base[2 * j + static_cast<std::size_t>(part)] = r.lo;
      if (r.hi > r.lo) axes.push_back({2 * j + static_cast<std::size_t>(part), r.lo, r.hi});
    }
  }

  CoronaVerdict v;
  v.precision = opts.precision;
  v.min_ratio = std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double inf = std::numeric_limits<double>::infinity();

  auto score = [&](const std::vector<double>& flat) {
    ++used;
    try {
      const PointEval e = evaluate(fs, params, cone, to_spec(flat), opts.precision);
      return log_mid_ratio(e.lhs, e.rhs);
    } catch (const PrecisionExhausted&) {
      return inf;
    }
  };

  // Coarse scan.
  const std::size_t coarse = axes.empty() ? 1 : std::max<std::size_t>(1, opts.budget * 6 / 10);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> shift(axes.size());
  for (auto& s : shift) s = unif(rng);
  std::vector<std::pair<double, std::vector<double>>> scanned;
  scanned.reserve(coarse);
  for (std::size_t i = 0; i < coarse; ++i) {
    std::vector<double> flat = base;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      double t = radical_inverse(i + 1, kBases[a % std::size(kBases)]) + shift[a];
      t -= std::floor(t);
      flat[axes[a].slot] = axes[a].lo + (axes[a].hi - axes[a].lo) * t;
    }
    scanned.emplace_back(score(flat), std::move(flat));
  }
  std::sort(scanned.begin(), scanned.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  const std::size_t n_candidates = std::min<std::size_t>(3, scanned.size());
  std::vector<std::pair<double, std::vector<double>>> candidates(scanned.begin(),
                                                                 scanned.begin() + static_cast<long>(n_candidates));

  // Golden-section refinement, one coordinate at a time.
  if (!axes.empty()) {
    const double cells = std::pow(static_cast<double>(coarse), 1.0 / static_cast<double>(axes.size()));
    const std::size_t refine_budget = opts.budget > used + 8 ? (opts.budget - used) * 7 / 8 : 0;
    // Candidates are visited best first, so a small budget goes to the best cell.
    const std::size_t per_search =
        std::max<std::size_t>(10, refine_budget / std::max<std::size_t>(1, 3 * n_candidates * axes.size()));
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (auto& [best, flat] : candidates) {
      std::vector<double> half(axes.size());
      for (std::size_t a = 0; a < axes.size(); ++a) half[a] = (axes[a].hi - axes[a].lo) / cells;
      for (int round = 0; round < 3 && used < opts.budget; ++round) {
        for (std::size_t a = 0; a < axes.size() && used < opts.budget; ++a) {
          const std::size_t slot = axes[a].slot;
          double lo = std::max(axes[a].lo, flat[slot] - half[a]);
          double hi = std::min(axes[a].hi, flat[slot] + half[a]);
          auto at = [&](double x) {
            std::vector<double> probe = flat;
            probe[slot] = x;
            return score(probe);
          };
          double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
          double f1 = at(x1), f2 = at(x2);
          for (std::size_t it = 2; it < per_search && used < opts.budget; ++it) {
            if (f1 <= f2) {
              hi = x2;
              x2 = x1;
              f2 = f1;
              x1 = hi - invphi * (hi - lo);
              f1 = at(x1);
            } else {
              lo = x1;
              x1 = x2;
              f1 = f2;
              x2 = lo + invphi * (hi - lo);
              f2 = at(x2);
            }
          }
          const double xb = f1 <= f2 ? x1 : x2;
          const double fb = std::min(f1, f2);
          if (fb < best) {
            best = fb;
            flat[slot] = xb;
          }
          half[a] = std::max(2.0 * (hi - lo), 1e-300);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }

  // Rigorous confirmation.
  for (const auto& [s, flat] : candidates) {
    const PointSpec p = to_spec(flat);
    PointResult r = classify(fs, params, cone, p, opts.precision, opts.max_precision);
    ++used;
    if (!r.note.empty()) v.notes.push_back(r.note);
    if (r.outcome == Outcome::kFailed) continue;
    const double ratio = mid_ratio(r.eval->lhs, r.eval->rhs);
    if (ratio < v.min_ratio) {
      v.min_ratio = ratio;
      v.point = p;
      v.lhs = r.eval->lhs;
      v.rhs = r.eval->rhs;
    }
    if (r.outcome == Outcome::kViolation) {
      v.status = CoronaVerdict::Status::kViolation;
      v.point = p;
      v.lhs = r.eval->lhs;
      v.rhs = r.eval->rhs;
      v.precision = r.precision;
      v.evaluated = used;
      return v;
    }
    if (r.outcome == Outcome::kUnresolved) ++v.unresolved;
  }
  v.evaluated = used;
  if (!std::isfinite(v.min_ratio)) {
    v.status = CoronaVerdict::Status::kInconclusive;
    v.notes.push_back("no candidate could be evaluated");
  } else if (v.min_ratio < 1.0) {
    v.status = CoronaVerdict::Status::kInconclusive;
    v.notes.push_back("budget exhausted: best candidate has ratio below 1 but no rigorous separation");
  }
  return v;
}

BezoutReport verify_bezout(const std::vector<Distribution>& fs, const std::vector<Distribution>& gs,
                           std::size_t samples, std::uint64_t seed, double radius) {
  if (fs.size() != gs.size()) throw InputError("fs and gs must have the same length");
  if (fs.empty()) throw InputError("at least one pair is required");
  const int d = fs.front().dimension();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].dimension() != d || gs[i].dimension() != d) throw InputError("Bezout inputs disagree on dimension");
  }

  BezoutReport report;
  try {
    Distribution sum(d);
    for (std::size_t i = 0; i < fs.size(); ++i) sum = sum + convolve(fs[i], gs[i]);
    report.residual = sum - Distribution::delta(d);
    report.exact_identity = report.residual->is_zero();
  } catch (const InputError&) {
    report.representable = false;
  }

  SearchBox box;
  for (int j = 0; j < d; ++j) {
    box.re.push_back({-radius, radius});
    box.im.push_back({-radius, radius});
  }
  for (const auto& p : sample_box(box, samples, seed)) {
    const ComplexPoint z = p.at(kDefaultPrecision);
    ComplexBall acc = ComplexBall::exact(-1.0, 0.0, kDefaultPrecision);
    for (std::size_t i = 0; i < fs.size(); ++i) acc = acc + fl_transform(fs[i], z) * fl_transform(gs[i], z);
    const Ball mag = acc.abs();
    report.max_residual_upper = std::max(report.max_residual_upper, mag.upper_double());
    if (report.exact_identity && mag.certainly_positive()) report.transform_consistent = false;
    ++report.samples;
  }
  return report;
}

NecessityResult necessity_bound(const std::vector<Distribution>& gs, const Cone& cone) {
  if (gs.empty()) throw InputError("at least one cofactor is required");
  NecessityResult out;
  double max_c = 0.0;
  Rational max_n;
  Rational max_r2;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    const Distribution& g = gs[k];
    if (g.is_zero()) throw InputError("cofactor " + std::to_string(k) + " is the zero distribution");
    if (g.dimension() != cone.dimension()) throw InputError("cofactor dimension does not match cone dimension");
    if (!in_cone(g, cone)) throw InputError("cofactor " + std::to_string(k) + " is not supported in the cone");
    const PwsBound b = pws_bound_for(g);
    max_c = std::max(max_c, b.const_c);
    max_n = std::max(max_n, rational_from_double(b.exponent_n));
    for (const auto& t : g.terms()) {
      Rational r2;
      for (const auto& x : t.location) r2 += x * x;
      max_r2 = std::max(max_r2, r2);
    }
    if (g.density()) {
      max_r2 = std::max(max_r2, Rational(g.density()->support_lo() * g.density()->support_lo()));
      max_r2 = std::max(max_r2, Rational(g.density()->support_hi() * g.density()->support_hi()));
    }
  }
  // Upper bound on sqrt(max_r2), as an exact rational.
  Real m(kRadiusPrecision);
  mpfr_set_q(m.raw(), max_r2.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(m.raw(), m.raw(), MPFR_RNDU);
  Rational max_m;
  mpfr_get_q(max_m.get_mpq_t(), m.raw());

  out.params.const_c = 1 / rational_from_double(max_c);
  out.params.exponent_n = max_n;
  out.params.cone_scale_m = max_m;
  if (out.params.exponent_n < kMinPositive) {
    out.params.exponent_n = kMinPositive;
    out.notes.push_back("N clamped from " + to_string(max_n) + " to 2^-20");
  }
  if (out.params.cone_scale_m < kMinPositive) {
    out.params.cone_scale_m = kMinPositive;
    out.notes.push_back("M clamped from " + to_string(max_m) + " to 2^-20");
  }
  return out;
}

}  // namespace corona
