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

#include "corona/convex_geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace corona {

namespace {

void require_dim(const Cone& cone, std::size_t n) {
  if (n != static_cast<std::size_t>(cone.dimension())) {
    throw InputError("vector dimension " + std::to_string(n) + " does not match cone dimension " +
                     std::to_string(cone.dimension()));
  }
}

double norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

// Column-major generator matrix in doubles.
std::vector<double> generator_matrix(const Polyhedral& p) {
  std::vector<double> a;
  a.reserve(p.generators.size() * static_cast<std::size_t>(p.dim));
  for (const auto& g : p.generators) {
    for (const auto& q : g) a.push_back(q.get_d());
  }
  return a;
}

std::vector<double> light_projection(const LightCone& lc, std::span<const double> xi) {
  const double c = lc.speed.get_d();
  const std::size_t s = static_cast<std::size_t>(lc.spatial_dim);
  const double r = norm(xi.first(s));
  const double tau = xi[s];
  std::vector<double> out(xi.begin(), xi.end());
  if (r <= c * tau) return out;
  if (tau <= -c * r) return std::vector<double>(xi.size(), 0.0);
  const double alpha = (c * r + tau) / (c * c + 1.0);
  for (std::size_t j = 0; j < s; ++j) out[j] = alpha * c * xi[j] / r;
  out[s] = alpha;
  return out;
}

double light_support(const LightCone& lc, std::span<const double> xi) {
  const double c = lc.speed.get_d();
  const std::size_t s = static_cast<std::size_t>(lc.spatial_dim);
  const double r = norm(xi.first(s));
  const double tau = xi[s];
  if (r / c <= tau) return std::hypot(r, tau);
  if (tau <= -c * r) return 0.0;
  return (tau + c * r) / std::sqrt(c * c + 1.0);
}

Ball norm_ball(const std::vector<Ball>& xs, std::size_t from, std::size_t to, mpfr_prec_t prec) {
  Ball s = Ball::exact(0.0, prec);
  for (std::size_t j = from; j < to; ++j) s = s + sqr(xs[j]);
  return sqrt(s);
}

Ball light_support_ball(const LightCone& lc, const std::vector<Ball>& xi, mpfr_prec_t prec) {
  const std::size_t s = static_cast<std::size_t>(lc.spatial_dim);
  const Ball c = Ball::from_rational(lc.speed, prec);
  const Ball r = norm_ball(xi, 0, s, prec);
  const Ball& tau = xi[s];
  const Ball upper_edge = r / c;   // branch 1 when tau >= |xi| / c
  const Ball lower_edge = -(c * r);  // branch 3 when tau <= -c |xi|

  const bool may_inside = !certainly_less(tau, upper_edge);
  const bool may_polar = !certainly_less(lower_edge, tau);
  const bool may_middle = !certainly_less(upper_edge, tau) && !certainly_less(tau, lower_edge);

  std::vector<Ball> candidates;
  if (may_inside) candidates.push_back(norm_ball(xi, 0, s + 1, prec));
  if (may_middle) candidates.push_back((tau + c * r) / sqrt(sqr(c) + Ball::exact(1.0, prec)));
  if (may_polar) candidates.push_back(Ball::exact(0.0, prec));
  Ball out = candidates.front();
  for (std::size_t k = 1; k < candidates.size(); ++k) out = hull(out, candidates[k]);
  return out;
}

// Two-sided bound for a polyhedral cone at an exactly known xi:
// lower from the feasible point v / |v| with v = G lambda, upper from
// |xi - r| for a certified polar vector r.
Ball polyhedral_support_exact(const Polyhedral& p, const std::vector<Rational>& xi, mpfr_prec_t prec) {
  const std::size_t d = static_cast<std::size_t>(p.dim);
  const std::vector<double> a = generator_matrix(p);
  const std::vector<double> xd = to_doubles(xi);
  const std::vector<double> lambda = nnls(a, d, p.generators.size(), xd);

  std::vector<Rational> v(d);
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] <= 0.0) continue;
    const Rational lk = rational_from_double(lambda[k]);
    for (std::size_t j = 0; j < d; ++j) v[j] += lk * p.generators[k][j];
  }

  Ball lower = Ball::exact(0.0, prec);
  const Rational vv = dot(v, v);
  if (sgn(vv) > 0) {
    Ball candidate = Ball::from_rational(dot(xi, v), prec) / sqrt(Ball::from_rational(vv, prec));
    lower = max(lower, candidate);
  }

  std::vector<Rational> r(d);
  for (std::size_t j = 0; j < d; ++j) r[j] = xi[j] - v[j];
  bool polar = true;
  for (const auto& g : p.generators) polar = polar && sgn(dot(g, r)) <= 0;
  if (!polar) {
    // Shift along a direction u with <g, u> > 0 for every generator.
    std::vector<Rational> u(d);
    for (const auto& g : p.generators) {
      Rational l1;
      for (const auto& q : g) l1 += abs(q);
      for (std::size_t j = 0; j < d; ++j) u[j] += g[j] / l1;
    }
    bool interior = true;
    Rational shift;
    for (const auto& g : p.generators) {
      const Rational gu = dot(g, u);
      if (sgn(gu) <= 0) {
        interior = false;
        break;
      }
      const Rational gr = dot(g, r);
      if (sgn(gr) > 0) shift = std::max(shift, Rational(gr / gu));
    }
    if (interior) {
      for (std::size_t j = 0; j < d; ++j) r[j] -= shift * u[j];
    } else {
      std::fill(r.begin(), r.end(), Rational(0));
    }
  }
  std::vector<Rational> diff(d);
  for (std::size_t j = 0; j < d; ++j) diff[j] = xi[j] - r[j];
  const Ball upper = sqrt(Ball::from_rational(dot(diff, diff), prec));
  return hull(lower, upper);
}

// Quasi-random sequences.
double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, out = 0.0;
  while (i > 0) {
    out += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return out;
}

constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

class Halton {
 public:
  Halton(unsigned dims, std::uint64_t seed) : shift_(dims, 0.0) {
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (auto& s : shift_) s = u(rng);
    }
  }
  double at(std::uint64_t i, unsigned k) const {
    double v = radical_inverse(i + 1, kPrimes[k % std::size(kPrimes)]) + shift_[k % shift_.size()];
    return v - std::floor(v);
  }

 private:
  std::vector<double> shift_;
};

// Unit vector in R^k from quasi-random coordinates starting at slot `off`.
void sphere_point(const Halton& h, std::uint64_t i, std::size_t k, unsigned off, double* out) {
  if (k == 1) {
    out[0] = (i % 2 == 0) ? 1.0 : -1.0;
    return;
  }
  if (k == 2) {
    const double phi = 2.0 * std::numbers::pi * h.at(i, off);
    out[0] = std::cos(phi);
    out[1] = std::sin(phi);
    return;
  }
  if (k == 3) {
    const double z = 1.0 - 2.0 * h.at(i, off);
    const double phi = 2.0 * std::numbers::pi * h.at(i, off + 1);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    out[0] = s * std::cos(phi);
    out[1] = s * std::sin(phi);
    out[2] = z;
    return;
  }
  // Box-Muller on pairs of coordinates, then normalize.
  double n2 = 0.0;
  for (std::size_t j = 0; j < k; j += 2) {
    const double u1 = std::max(h.at(i, off + static_cast<unsigned>(j)), 1e-300);
    const double u2 = h.at(i, off + static_cast<unsigned>(j) + 1);
    const double rad = std::sqrt(-2.0 * std::log(u1));
    out[j] = rad * std::cos(2.0 * std::numbers::pi * u2);
    if (j + 1 < k) out[j + 1] = rad * std::sin(2.0 * std::numbers::pi * u2);
  }
  for (std::size_t j = 0; j < k; ++j) n2 += out[j] * out[j];
  const double nn = std::sqrt(n2);
  for (std::size_t j = 0; j < k; ++j) out[j] /= nn;
}

void push_normalized(std::vector<double>& rows, std::vector<double> x) {
  const double n = norm(x);
  if (n == 0.0) return;
  for (double v : x) rows.push_back(v / n);
}

void sample_full(std::size_t d, std::size_t count, const Halton& h, std::vector<double>& rows) {
  std::vector<double> x(d);
  for (std::size_t i = 0; i < count; ++i) {
    sphere_point(h, i, d, 0, x.data());
    rows.insert(rows.end(), x.begin(), x.end());
  }
}

void sample_orthant(std::size_t d, std::size_t count, const Halton& h, std::vector<double>& rows) {
  // Every coordinate face is a stratum; the axes are single points.
  const std::size_t cap = std::min<std::size_t>(d, 16);
  std::vector<std::vector<std::size_t>> faces;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cap); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < cap; ++j) {
      if (mask & (std::uint64_t{1} << j)) s.push_back(j);
    }
    if (s.size() == 1) {
      std::vector<double> e(d, 0.0);
      e[s[0]] = 1.0;
      rows.insert(rows.end(), e.begin(), e.end());
    } else {
      faces.push_back(std::move(s));
    }
  }
  if (faces.empty()) return;
  const std::size_t share = std::max<std::size_t>(1, count / faces.size());
  std::vector<double> buf(d);
  for (const auto& s : faces) {
    for (std::size_t i = 0; i < share; ++i) {
      sphere_point(h, i, s.size(), 0, buf.data());
      std::vector<double> x(d, 0.0);
      for (std::size_t j = 0; j < s.size(); ++j) x[s[j]] = std::abs(buf[j]);
      rows.insert(rows.end(), x.begin(), x.end());
    }
  }
}

void sample_light(const LightCone& lc, std::size_t count, const Halton& h, std::vector<double>& rows) {
  const std::size_t s = static_cast<std::size_t>(lc.spatial_dim);
  const double theta_max = std::atan(lc.speed.get_d());
  std::vector<double> dir(s), x(s + 1);
  auto emit = [&](double theta) {
    for (std::size_t j = 0; j < s; ++j) x[j] = std::sin(theta) * dir[j];
    x[s] = std::cos(theta);
    rows.insert(rows.end(), x.begin(), x.end());
  };
  // The boundary of a planar cone is two rays; the arc takes the budget.
  const std::size_t half = s == 1 ? count : count / 2;
  // Interior cap.
  for (std::size_t i = 0; i < half; ++i) {
    if (s == 1) {
      dir[0] = 1.0;
      emit((2.0 * h.at(i, 0) - 1.0) * theta_max);
    } else {
      const double ct = 1.0 - h.at(i, 0) * (1.0 - std::cos(theta_max));
      sphere_point(h, i, s, 1, dir.data());
      emit(std::acos(ct));
    }
  }
  // Boundary surface.
  const std::size_t edge = s == 1 ? 2 : count - half;
  for (std::size_t i = 0; i < edge; ++i) {
    if (s == 1) {
      dir[0] = (i % 2 == 0) ? 1.0 : -1.0;
    } else {
      sphere_point(h, i, s, 3, dir.data());
    }
    emit(theta_max);
  }
}

void sample_polyhedral(const Polyhedral& p, std::size_t count, const Halton& h, std::vector<double>& rows) {
  const std::size_t d = static_cast<std::size_t>(p.dim);
  std::vector<std::vector<double>> g;
  for (const auto& gen : p.generators) {
    std::vector<double> x = to_doubles(gen);
    const double n = norm(x);
    for (double& v : x) v /= n;
    g.push_back(std::move(x));
  }
  const std::size_t m = g.size();
  for (const auto& x : g) rows.insert(rows.end(), x.begin(), x.end());
  if (m < 2) return;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
  }
  std::vector<std::array<std::size_t, 3>> triples;
  if (d >= 3) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        for (std::size_t c = b + 1; c < m; ++c) triples.push_back({a, b, c});
      }
    }
  }
  const bool generic = d > 3;
  const std::size_t strata = pairs.size() + triples.size() + (generic ? 1 : 0);
  const std::size_t share = std::max<std::size_t>(1, count / strata);

  std::vector<double> x(d);
  for (const auto& [a, b] : pairs) {
    double cosw = 0.0;
    for (std::size_t j = 0; j < d; ++j) cosw += g[a][j] * g[b][j];
    const double omega = std::acos(std::clamp(cosw, -1.0, 1.0));
    for (std::size_t i = 0; i < share; ++i) {
      const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(share);
      double wa = 1.0 - u, wb = u;
      if (omega > 1e-9 && omega < std::numbers::pi - 1e-6) {
        wa = std::sin((1.0 - u) * omega) / std::sin(omega);
        wb = std::sin(u * omega) / std::sin(omega);
      }
      for (std::size_t j = 0; j < d; ++j) x[j] = wa * g[a][j] + wb * g[b][j];
      push_normalized(rows, x);
    }
  }
  for (const auto& t : triples) {
    for (std::size_t i = 0; i < share; ++i) {
      double u = h.at(i, 0), v = h.at(i, 1);
      if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
      }
      const double w = 1.0 - u - v;
      for (std::size_t j = 0; j < d; ++j) x[j] = w * g[t[0]][j] + u * g[t[1]][j] + v * g[t[2]][j];
      push_normalized(rows, x);
    }
  }
  if (generic) {
    for (std::size_t i = 0; i < share; ++i) {
      std::fill(x.begin(), x.end(), 0.0);
      for (std::size_t k = 0; k < m; ++k) {
        const double w = -std::log(std::max(h.at(i, static_cast<unsigned>(k)), 1e-300));
        for (std::size_t j = 0; j < d; ++j) x[j] += w * g[k][j];
      }
      push_normalized(rows, x);
    }
  }
}

}  // namespace

std::vector<double> nnls(std::span<const double> a_data, std::size_t rows, std::size_t cols,
                         std::span<const double> b_data) {
  if (a_data.size() != rows * cols || b_data.size() != rows) throw InputError("nnls: inconsistent shapes");
  using Mat = Eigen::MatrixXd;
  using Vec = Eigen::VectorXd;
  const Eigen::Map<const Mat> a(a_data.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  const Eigen::Map<const Vec> b(b_data.data(), static_cast<Eigen::Index>(rows));
  const Eigen::Index n = a.cols();

  const double tol = 1e-13 * std::max(1.0, a.norm()) * std::max(1.0, b.norm()) * static_cast<double>(n + 1);
  std::vector<bool> active(static_cast<std::size_t>(n), false);  // true = passive set P (free)
  Vec x = Vec::Zero(n);
  std::vector<std::string> trace;

  auto solve_on_passive = [&]() {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (active[static_cast<std::size_t>(j)]) idx.push_back(j);
    }
    Mat sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
    const Vec sol = sub.colPivHouseholderQr().solve(b);
    Vec z = Vec::Zero(n);
    for (std::size_t k = 0; k < idx.size(); ++k) z(idx[k]) = sol(static_cast<Eigen::Index>(k));
    return z;
  };

  const std::size_t max_outer = 3 * static_cast<std::size_t>(n) + 10;
  for (std::size_t outer = 0;; ++outer) {
    if (outer >= max_outer) {
      std::ostringstream msg;
      msg << "active-set projection did not converge after " << outer << " iterations";
      throw ConvergenceError(msg.str(), trace);
    }
    const Vec w = a.transpose() * (b - a * x);
    Eigen::Index best = -1;
    double best_w = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!active[static_cast<std::size_t>(j)] && w(j) > best_w) {
        best_w = w(j);
        best = j;
      }
    }
    if (best < 0) break;
    active[static_cast<std::size_t>(best)] = true;
    trace.push_back("add " + std::to_string(best) + " (w=" + std::to_string(best_w) + ")");

    for (std::size_t inner = 0;; ++inner) {
      if (inner > static_cast<std::size_t>(n) + 2) {
        throw ConvergenceError("active-set inner loop did not terminate", trace);
      }
      const Vec z = solve_on_passive();
      bool feasible = true;
      double alpha = 1.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (active[static_cast<std::size_t>(j)] && z(j) <= 0.0) {
          feasible = false;
          const double denom = x(j) - z(j);
          if (denom > 0.0) alpha = std::min(alpha, x(j) / denom);
        }
      }
      if (feasible) {
        x = z;
        break;
      }
      x += alpha * (z - x);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (active[static_cast<std::size_t>(j)] && x(j) <= 1e-15) {
          active[static_cast<std::size_t>(j)] = false;
          x(j) = 0.0;
          trace.push_back("drop " + std::to_string(j));
        }
      }
    }
  }
  return std::vector<double>(x.data(), x.data() + n);
}

std::vector<double> project_onto_cone(const Cone& cone, std::span<const double> xi) {
  require_dim(cone, xi.size());
  return std::visit(
      [&](const auto& k) -> std::vector<double> {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FullSpace>) {
          return {xi.begin(), xi.end()};
        } else if constexpr (std::is_same_v<T, Orthant>) {
          std::vector<double> out(xi.begin(), xi.end());
          for (double& v : out) v = std::max(v, 0.0);
          return out;
        } else if constexpr (std::is_same_v<T, LightCone>) {
          return light_projection(k, xi);
        } else {
          const std::size_t d = static_cast<std::size_t>(k.dim);
          const std::vector<double> a = generator_matrix(k);
          const std::vector<double> lambda = nnls(a, d, k.generators.size(), xi);
          std::vector<double> out(d, 0.0);
          for (std::size_t g = 0; g < lambda.size(); ++g) {
            for (std::size_t j = 0; j < d; ++j) out[j] += lambda[g] * a[g * d + j];
          }
          return out;
        }
      },
      cone.kind());
}

double support_function(const Cone& cone, std::span<const double> xi) {
  require_dim(cone, xi.size());
  if (cone.is<FullSpace>()) return norm(xi);
  if (cone.is<Orthant>()) {
    double s = 0.0;
    for (double v : xi) {
      if (v > 0.0) s += v * v;
    }
    return std::sqrt(s);
  }
  if (cone.is<LightCone>()) return light_support(cone.as<LightCone>(), xi);
  return norm(project_onto_cone(cone, xi));
}

Ball support_function(const Cone& cone, const std::vector<Ball>& xi) {
  require_dim(cone, xi.size());
  const mpfr_prec_t prec = xi.empty() ? kDefaultPrecision : xi.front().precision();
  if (cone.is<FullSpace>()) return norm_ball(xi, 0, xi.size(), prec);
  if (cone.is<Orthant>()) {
    Ball s = Ball::exact(0.0, prec);
    const Ball zero = Ball::exact(0.0, prec);
    for (const auto& v : xi) s = s + sqr(max(v, zero));
    return sqrt(s);
  }
  if (cone.is<LightCone>()) return light_support_ball(cone.as<LightCone>(), xi, prec);

  // Evaluate at the midpoints exactly, then widen by the 1-Lipschitz bound.
  std::vector<Rational> mids;
  Real lip(kRadiusPrecision);
  for (const auto& v : xi) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v.mid().raw());
    mids.push_back(q);
    mpfr_fma(lip.raw(), v.rad().raw(), v.rad().raw(), lip.raw(), MPFR_RNDU);
  }
  mpfr_sqrt(lip.raw(), lip.raw(), MPFR_RNDU);
  Ball out = polyhedral_support_exact(cone.as<Polyhedral>(), mids, prec);
  out.add_error(lip);
  return out;
}

Ball weight_p(const Cone& cone, const ComplexPoint& z) {
  require_dim(cone, z.dimension());
  const mpfr_prec_t prec = z.precision();
  return log(Ball::exact(1.0, prec) + z.norm2()) + support_function(cone, z.imag_part());
}

LocalityReport check_weight_locality(const Cone& cone, const std::vector<LocalityPair>& pairs,
                                     const LocalityOptions& opts) {
  if (opts.k1 < 0 || opts.k2 < 0) throw InputError("locality constants must be nonnegative");
  LocalityReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [z, zeta] = pairs[i];
    if (z.dimension() != zeta.dimension()) throw InputError("locality pair dimension mismatch");
    const mpfr_prec_t prec = z.precision();
    const Ball pz = weight_p(cone, z);
    const Ball pzeta = weight_p(cone, zeta);

    Ball dist2 = Ball::exact(0.0, prec);
    for (std::size_t j = 0; j < z.dimension(); ++j) dist2 = dist2 + (z.coords[j] - zeta.coords[j]).norm2();
    const Ball radius = exp(-(pz * rational_from_double(opts.k1)) - Ball::exact(opts.k2, prec));
    if (certainly_less(sqr(radius), dist2)) {
      throw InputError("pair " + std::to_string(i) + " is farther apart than exp(-k1 p(z) - k2)");
    }

    const Ball slack = pz + Ball::log_of_rational(Rational(8), prec) + Ball::exact(1.0, prec) - pzeta;
    const double lo = slack.lower_double();
    report.worst_slack = std::min(report.worst_slack, lo);
    ++report.checked;
    if (!slack.certainly_nonnegative()) {
      report.all_pass = false;
      report.violations.push_back({i, pz, pzeta});
    }
  }
  return report;
}

Ball hessian_quad_form(const ComplexPoint& z, const std::vector<ComplexBall>& w) {
  if (w.size() != z.dimension()) throw InputError("hessian form: dimension mismatch");
  const mpfr_prec_t prec = z.precision();
  const Ball zz = z.norm2();
  Ball ww = Ball::exact(0.0, prec);
  ComplexBall wz = ComplexBall::exact(0.0, 0.0, prec);
  for (std::size_t j = 0; j < w.size(); ++j) {
    ww = ww + w[j].norm2();
    wz = wz + w[j].conj() * z.coords[j];
  }
  const Ball one = Ball::exact(1.0, prec);
  return (ww + ww * zz - wz.norm2()) / sqr(one + zz);
}

AxiomReport check_support_fn_axioms(const Cone& cone, const std::vector<AxiomSample>& samples, double tolerance) {
  AxiomReport report;
  report.tolerance = tolerance;
  for (const auto& s : samples) {
    if (s.t < 0) throw InputError("homogeneity factor must be nonnegative");
    require_dim(cone, s.xi.size());
    require_dim(cone, s.eta.size());
    std::vector<double> sum(s.xi.size()), scaled(s.xi.size());
    for (std::size_t j = 0; j < sum.size(); ++j) {
      sum[j] = s.xi[j] + s.eta[j];
      scaled[j] = s.t * s.xi[j];
    }
    const double hx = support_function(cone, s.xi);
    const double he = support_function(cone, s.eta);
    const double hs = support_function(cone, sum);
    const double ht = support_function(cone, scaled);

    double scale = norm(s.xi) + norm(s.eta);
    if (scale == 0.0) scale = 1.0;
    const double sub = (hs - hx - he) / scale;
    double hscale = s.t * norm(s.xi);
    if (hscale == 0.0) hscale = 1.0;
    const double hom = std::abs(ht - s.t * hx) / hscale;

    report.worst_subadditivity = std::max(report.worst_subadditivity, sub);
    report.worst_homogeneity = std::max(report.worst_homogeneity, hom);
    report.all_pass = report.all_pass && sub <= tolerance && hom <= tolerance;
    ++report.checked;
  }
  return report;
}

simd::PointCloud sample_cone_ball(const Cone& cone, std::size_t count, std::uint64_t seed) {
  const std::size_t d = static_cast<std::size_t>(cone.dimension());
  const Halton h(static_cast<unsigned>(std::size(kPrimes)), seed);
  std::vector<double> rows(d, 0.0);  // origin
  rows.reserve((count + 1) * d);
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FullSpace>) {
          sample_full(d, count, h, rows);
        } else if constexpr (std::is_same_v<T, Orthant>) {
          sample_orthant(d, count, h, rows);
        } else if constexpr (std::is_same_v<T, LightCone>) {
          sample_light(k, count, h, rows);
        } else {
          sample_polyhedral(k, count, h, rows);
        }
      },
      cone.kind());
  return simd::PointCloud::from_rows(d, rows);
}

double sampled_support(const simd::PointCloud& cloud, std::span<const double> xi) {
  return std::max(0.0, simd::max_dot(cloud, xi));
}

}  // namespace corona
