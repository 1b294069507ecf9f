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

#include "corona/cli.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "corona/convex_geometry.hpp"
#include "corona/corona.hpp"
#include "corona/fourier_laplace.hpp"
#include "corona/json_io.hpp"
#include "corona/liouville.hpp"
#include "corona/simd/kernels.hpp"

namespace corona::cli {

namespace {

using json_io::Json;

struct Options {
  std::string cone;
  std::string speed = "1";
  int dimension = 0;
  std::string c = "1";
  std::string n = "1";
  std::string m = "1";
  int precision = static_cast<int>(kDefaultPrecision);
  std::uint64_t seed = 1;
  std::size_t budget = 2000;
  std::string format = "json";
  std::string out;
  std::vector<std::string> fs;
  std::vector<std::string> gs;
  std::string points;
  std::vector<std::string> z;
  std::vector<std::string> xi;
  std::vector<std::string> box;
  unsigned kmax = liouville::kDefaultCap;
  std::size_t samples = 0;
  double re_radius = 20.0;
  double im_radius = 10.0;
  std::string branch = "auto";
};

mpfr_prec_t precision_of(const Options& o) {
  if (o.precision < kMinPrecision) throw InputError("--precision must be at least 53");
  return static_cast<mpfr_prec_t>(o.precision);
}

Cone make_cone(const Options& o, int inferred_dim) {
  if (o.cone.empty()) throw InputError("--cone is required");
  if (o.cone.size() > 5 && o.cone.substr(o.cone.size() - 5) == ".json") {
    return json_io::cone_from_json(json_io::read_file(o.cone));
  }
  std::string name = o.cone;
  std::string digits;
  while (!name.empty() && std::isdigit(static_cast<unsigned char>(name.back()))) {
    digits.insert(digits.begin(), name.back());
    name.pop_back();
  }
  int dim = !digits.empty() ? std::stoi(digits) : (o.dimension > 0 ? o.dimension : inferred_dim);
  if (dim < 1) throw InputError("cannot infer the cone dimension; pass --dimension");
  if (name == "full") return Cone::full(dim);
  if (name == "orthant") return Cone::orthant(dim);
  if (name == "lightcone") {
    if (dim < 2) throw InputError("a light cone needs ambient dimension at least 2");
    return Cone::light(dim - 1, parse_rational(o.speed));
  }
  if (name == "polyhedral") throw InputError("polyhedral cones are given as a JSON file: --cone path.json");
  throw InputError("unknown cone '" + o.cone + "'");
}

CoronaParams make_params(const Options& o) {
  CoronaParams p{parse_rational(o.c), parse_rational(o.n), parse_rational(o.m)};
  p.validate();
  return p;
}

std::vector<Distribution> load_all(const std::vector<std::string>& paths, const char* flag) {
  if (paths.empty()) throw InputError(std::string("at least one ") + flag + " file is required");
  std::vector<Distribution> out;
  for (const auto& p : paths) out.push_back(json_io::distribution_from_json(json_io::read_file(p)));
  return out;
}

PointSpec inline_point(const std::vector<std::string>& coords) {
  Json j = Json::array();
  for (const auto& c : coords) {
    // "re,im" for a complex coordinate, otherwise real.
    const auto comma = c.find(',');
    if (comma == std::string::npos) {
      j.push_back(c);
    } else {
      j.push_back(Json::array({c.substr(0, comma), c.substr(comma + 1)}));
    }
  }
  return json_io::point_from_json(j);
}

std::vector<PointSpec> load_points(const Options& o, int dim, std::size_t default_count) {
  if (!o.points.empty()) return json_io::points_from_json(json_io::read_file(o.points));
  if (!o.z.empty()) return {inline_point(o.z)};
  SearchBox box;
  for (int j = 0; j < dim; ++j) {
    box.re.push_back({-o.re_radius, o.re_radius});
    box.im.push_back({-o.im_radius, o.im_radius});
  }
  return sample_box(box, o.samples > 0 ? o.samples : default_count, o.seed);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit(const Options& o, const Json& j, std::ostream& out) {
  if (o.format != "json") throw InputError("this subcommand only supports --format json");
  emit(o, j.dump(2), out);
}

int verdict_code(const CoronaVerdict& v) {
  switch (v.status) {
    case CoronaVerdict::Status::kNoViolationFound: return kPass;
    case CoronaVerdict::Status::kViolation: return kViolation;
    case CoronaVerdict::Status::kInconclusive: return kInconclusive;
  }
  return kInconclusive;
}

// ---------------------------------------------------------------------------

int cmd_transform(const Options& o, std::ostream& out) {
  const auto fs = load_all(o.fs, "--f");
  const auto pts = load_points(o, fs.front().dimension(), 8);
  TransformOptions topts;
  if (o.branch == "series") {
    topts.branch = TransformOptions::DensityBranch::kSeries;
  } else if (o.branch == "closed") {
    topts.branch = TransformOptions::DensityBranch::kClosedForm;
  } else if (o.branch != "auto") {
    throw InputError("--branch must be auto, series or closed");
  }
  const mpfr_prec_t prec = precision_of(o);
  Json results = Json::array();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (const auto& p : pts) {
      const ComplexBall v = fl_transform(fs[i], p.at(prec), topts);
      results.push_back({{"f", i}, {"point", json_io::to_json(p)}, {"value", json_io::to_json(v)},
                         {"abs", json_io::to_json(v.abs())}});
    }
  }
  emit(o, Json{{"precision", prec}, {"seed", o.seed}, {"results", results}}, out);
  return kPass;
}

int cmd_support_fn(const Options& o, std::ostream& out) {
  if (o.xi.empty()) throw InputError("--xi is required");
  const Cone cone = make_cone(o, static_cast<int>(o.xi.size()));
  const mpfr_prec_t prec = precision_of(o);
  std::vector<double> xi;
  std::vector<Ball> xb;
  for (const auto& s : o.xi) {
    const Rational q = parse_rational(s);
    xi.push_back(q.get_d());
    xb.push_back(Ball::from_rational(q, prec));
  }
  const double h = support_function(cone, xi);
  const Ball enclosure = support_function(cone, xb);
  emit(o,
       Json{{"cone", json_io::to_json(cone)},
            {"xi", xi},
            {"H", h},
            {"enclosure", json_io::to_json(enclosure)},
            {"projection", project_onto_cone(cone, xi)}},
       out);
  return kPass;
}

Json weight_suite(const Cone& cone, const Options& o, bool& ok) {
  const mpfr_prec_t prec = precision_of(o);
  const std::size_t d = static_cast<std::size_t>(cone.dimension());
  const std::size_t count = o.samples > 0 ? o.samples : 10000;
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto random_ball_point = [&](double radius) {
    std::vector<std::complex<double>> z(d);
    for (;;) {
      double n2 = 0.0;
      for (auto& c : z) {
        c = {radius * u(rng), radius * u(rng)};
        n2 += std::norm(c);
      }
      if (n2 <= radius * radius) return z;
    }
  };

  // Locality pairs with |z - zeta| <= 1.
  std::vector<LocalityPair> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto z = random_ball_point(100.0);
    auto step = random_ball_point(1.0);
    std::vector<std::complex<double>> zeta(d);
    for (std::size_t j = 0; j < d; ++j) zeta[j] = z[j] + step[j];
    pairs.push_back({ComplexPoint::from_doubles(z, prec), ComplexPoint::from_doubles(zeta, prec)});
  }
  const LocalityReport locality = check_weight_locality(cone, pairs);

  // Hessian form, rigorous and batched.
  simd::HessianBatch batch(d, count);
  double worst_scaled = std::numeric_limits<double>::infinity();
  bool hessian_ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    const auto z = random_ball_point(10.0);
    std::vector<ComplexBall> w;
    std::vector<std::complex<double>> wd(d);
    for (std::size_t j = 0; j < d; ++j) {
      wd[j] = {gauss(rng), gauss(rng)};
      w.push_back(ComplexBall::exact(wd[j].real(), wd[j].imag(), prec));
      batch.z_re[j * count + i] = z[j].real();
      batch.z_im[j * count + i] = z[j].imag();
      batch.w_re[j * count + i] = wd[j].real();
      batch.w_im[j * count + i] = wd[j].imag();
    }
    const Ball q = hessian_quad_form(ComplexPoint::from_doubles(z, prec), w);
    double zz = 0.0, ww = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      zz += std::norm(z[j]);
      ww += std::norm(wd[j]);
    }
    const double scale = ww / (1.0 + zz);
    const double scaled = q.lower_double() / scale;
    worst_scaled = std::min(worst_scaled, scaled);
    hessian_ok = hessian_ok && q.lower_double() >= -1e-14 * scale;
  }
  std::vector<double> batched(count);
  simd::hessian_quad_batch(batch, batched);
  double batch_min = std::numeric_limits<double>::infinity();
  for (double v : batched) batch_min = std::min(batch_min, v);

  // Supporting-function axioms.
  std::vector<AxiomSample> axioms;
  const double ts[] = {0.0, 0.5, 2.0};
  for (std::size_t i = 0; i < std::min<std::size_t>(count, 2000); ++i) {
    AxiomSample s;
    for (std::size_t j = 0; j < d; ++j) {
      s.xi.push_back(u(rng));
      s.eta.push_back(u(rng));
    }
    s.t = ts[i % 3];
    axioms.push_back(std::move(s));
  }
  const AxiomReport axiom = check_support_fn_axioms(cone, axioms);

  ok = ok && locality.all_pass && hessian_ok && axiom.all_pass;
  return {{"cone", json_io::to_json(cone)},
          {"locality", json_io::to_json(locality)},
          {"hessian", {{"checked", count}, {"worstLowerOverScale", worst_scaled}, {"allPass", hessian_ok},
                       {"batchMin", batch_min}, {"isa", std::string(simd::isa_name(simd::active_isa()))}}},
          {"axioms", json_io::to_json(axiom)}};
}

int cmd_weight_check(const Options& o, std::ostream& out) {
  std::vector<Cone> cones;
  if (o.cone.empty()) {
    const int d = o.dimension > 0 ? o.dimension : 2;
    cones = {Cone::full(d), Cone::orthant(d)};
    if (d >= 2) cones.push_back(Cone::light(d - 1, parse_rational(o.speed)));
  } else {
    cones.push_back(make_cone(o, 2));
  }
  bool ok = true;
  Json suites = Json::array();
  for (const auto& c : cones) suites.push_back(weight_suite(c, o, ok));
  emit(o, Json{{"seed", o.seed}, {"allPass", ok}, {"suites", suites}}, out);
  return ok ? kPass : kViolation;
}

int cmd_pws(const Options& o, std::ostream& out) {
  const auto fs = load_all(o.fs, "--f");
  const mpfr_prec_t prec = precision_of(o);
  bool ok = true;
  Json reports = Json::array();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto pts = load_points(o, fs[i].dimension(), 500);
    std::vector<ComplexPoint> zs;
    for (const auto& p : pts) zs.push_back(p.at(prec));
    const PwsBound bound = pws_bound_for(fs[i]);
    const PwsReport report = verify_pws_on_samples(fs[i], bound, zs);
    ok = ok && report.all_pass;
    Json r = json_io::to_json(report);
    if (r["samples"].size() > 20) {
      // Keep the report readable: summary plus the worst sample.
      std::size_t worst = 0;
      for (std::size_t k = 0; k < report.samples.size(); ++k) {
        if (report.samples[k].margin < report.samples[worst].margin) worst = k;
      }
      Json w = r["samples"][worst];
      r.erase("samples");
      r["worstSample"] = w;
      r["sampleCount"] = report.samples.size();
    }
    reports.push_back({{"f", i}, {"bound", json_io::to_json(bound)}, {"verification", r}});
  }
  emit(o, Json{{"seed", o.seed}, {"precision", prec}, {"allPass", ok}, {"reports", reports}}, out);
  return ok ? kPass : kViolation;
}

int cmd_corona_check(const Options& o, std::ostream& out) {
  const auto fs = load_all(o.fs, "--f");
  const Cone cone = make_cone(o, fs.front().dimension());
  const CoronaParams params = make_params(o);
  const auto pts = load_points(o, cone.dimension(), 1000);
  CheckOptions copts;
  copts.precision = precision_of(o);
  const CoronaVerdict v = check_corona(fs, params, cone, pts, copts);
  Json j = json_io::to_json(v);
  j["seed"] = o.seed;
  j["params"] = json_io::to_json(params);
  emit(o, j, out);
  return verdict_code(v);
}

SearchBox parse_box(const std::vector<std::string>& specs, int dim) {
  if (specs.size() != static_cast<std::size_t>(dim)) {
    throw InputError("--box needs one 're_lo:re_hi:im_lo:im_hi' entry per coordinate");
  }
  SearchBox box;
  for (const auto& s : specs) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ':')) v.push_back(parse_rational(part).get_d());
    if (v.size() != 4) throw InputError("malformed --box entry '" + s + "'");
    box.re.push_back({v[0], v[1]});
    box.im.push_back({v[2], v[3]});
  }
  return box;
}

int cmd_corona_search(const Options& o, std::ostream& out) {
  const auto fs = load_all(o.fs, "--f");
  const Cone cone = make_cone(o, fs.front().dimension());
  const CoronaParams params = make_params(o);
  SearchOptions sopts;
  sopts.budget = o.budget;
  sopts.seed = o.seed;
  sopts.precision = precision_of(o);
  const CoronaVerdict v = search_violation(fs, params, cone, parse_box(o.box, cone.dimension()), sopts);
  Json j = json_io::to_json(v);
  j["seed"] = o.seed;
  j["budget"] = o.budget;
  j["params"] = json_io::to_json(params);
  emit(o, j, out);
  return verdict_code(v);
}

int cmd_bezout(const Options& o, std::ostream& out) {
  const auto fs = load_all(o.fs, "--f");
  const auto gs = load_all(o.gs, "--g");
  const BezoutReport r = verify_bezout(fs, gs, o.samples > 0 ? o.samples : 32, o.seed);
  Json j = json_io::to_json(r);
  j["seed"] = o.seed;
  int code = r.representable ? (r.exact_identity ? kPass : kViolation) : kInconclusive;
  if (r.exact_identity && !o.cone.empty()) {
    // Necessity chain: the cofactors certify a corona bound for fs.
    const Cone cone = make_cone(o, fs.front().dimension());
    const NecessityResult nb = necessity_bound(gs, cone);
    const auto pts = load_points(o, cone.dimension(), 1000);
    CheckOptions copts;
    copts.precision = precision_of(o);
    const CoronaVerdict v = check_corona(fs, nb.params, cone, pts, copts);
    j["necessity"] = json_io::to_json(nb);
    j["coronaCheck"] = json_io::to_json(v);
    code = verdict_code(v);
  }
  emit(o, j, out);
  return code;
}

int cmd_liouville_report(const Options& o, std::ostream& out) {
  const CoronaParams params = make_params(o);
  const auto rows = liouville::report(o.kmax, params);
  if (o.format == "csv") {
    emit(o, json_io::liouville_csv(rows), out);
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(json_io::to_json(r));
    emit(o, Json{{"params", json_io::to_json(params)}, {"rows", arr}}, out);
  }
  return kPass;
}

int cmd_liouville_refute(const Options& o, std::ostream& out) {
  const CoronaParams params = make_params(o);
  Options oo = o;
  if (oo.cone.empty()) oo.cone = "orthant1";
  const Cone cone = make_cone(oo, 1);
  const liouville::Refutation r = liouville::refute_params(params, cone);
  Json j = json_io::to_json(r);
  j["params"] = json_io::to_json(params);
  j["cone"] = json_io::to_json(cone);
  emit(o, j, out);
  return r.success ? kViolation : kInconclusive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corona bounds for rings of compactly supported distributions", "corona"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--cone", o.cone, "full|orthant|lightcone with optional dimension suffix, or a JSON file");
    s->add_option("--speed", o.speed, "light-cone speed (rational)");
    s->add_option("--dimension", o.dimension, "ambient dimension");
    s->add_option("--precision", o.precision, "working precision in bits (>= 53)");
    s->add_option("--seed", o.seed, "seed for every random scan");
    s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--out", o.out, "write the report here instead of stdout");
  };
  auto params = [&](CLI::App* s) {
    s->add_option("--C", o.c, "constant C");
    s->add_option("--N", o.n, "exponent N");
    s->add_option("--M", o.m, "cone scale M");
  };
  auto sampling = [&](CLI::App* s) {
    s->add_option("--points", o.points, "JSON array of sample points");
    s->add_option("--z", o.z, "one inline point; complex coordinates as re,im");
    s->add_option("--samples", o.samples, "number of random sample points");
    s->add_option("--re-radius", o.re_radius, "random samples: |Re z_j| bound");
    s->add_option("--im-radius", o.im_radius, "random samples: |Im z_j| bound");
  };

  auto* transform = app.add_subcommand("transform", "evaluate Fourier-Laplace transforms");
  common(transform);
  sampling(transform);
  transform->add_option("--f", o.fs, "distribution JSON (repeatable)");
  transform->add_option("--branch", o.branch, "auto|series|closed for density pieces");

  auto* support = app.add_subcommand("support-fn", "supporting function of the cone's unit-ball section");
  common(support);
  support->add_option("--xi", o.xi, "vector xi")->expected(1, -1);

  auto* weight = app.add_subcommand("weight-check", "locality, Hessian and axiom suites for the weight p");
  common(weight);
  weight->add_option("--samples", o.samples, "pairs per suite (default 10000)");

  auto* pws = app.add_subcommand("pws", "derive and verify growth bounds");
  common(pws);
  sampling(pws);
  pws->add_option("--f", o.fs, "distribution JSON (repeatable)");

  auto* check = app.add_subcommand("corona-check", "check the corona bound on samples");
  common(check);
  params(check);
  sampling(check);
  check->add_option("--f", o.fs, "distribution JSON (repeatable)");

  auto* search = app.add_subcommand("corona-search", "search a box for violations of the corona bound");
  common(search);
  params(search);
  search->add_option("--f", o.fs, "distribution JSON (repeatable)");
  search->add_option("--box", o.box, "re_lo:re_hi:im_lo:im_hi per coordinate")->expected(1, -1);
  search->add_option("--budget", o.budget, "transform evaluations");

  auto* bezout = app.add_subcommand("bezout-verify", "verify f1*g1 + ... + fn*gn = delta");
  common(bezout);
  sampling(bezout);
  bezout->add_option("--f", o.fs, "f_i JSON (repeatable)");
  bezout->add_option("--g", o.gs, "g_i JSON (repeatable)");

  auto* report = app.add_subcommand("liouville-report", "rows of exact bounds for K = 1..kmax");
  common(report);
  params(report);
  report->add_option("--kmax", o.kmax, "largest K (<= 6)");

  auto* refute = app.add_subcommand("liouville-refute", "find K refuting the given (C, N, M)");
  common(refute);
  params(refute);

  std::vector<std::string> argv_store{"corona"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (transform->parsed()) return cmd_transform(o, out);
    if (support->parsed()) return cmd_support_fn(o, out);
    if (weight->parsed()) return cmd_weight_check(o, out);
    if (pws->parsed()) return cmd_pws(o, out);
    if (check->parsed()) return cmd_corona_check(o, out);
    if (search->parsed()) return cmd_corona_search(o, out);
    if (bezout->parsed()) return cmd_bezout(o, out);
    if (report->parsed()) return cmd_liouville_report(o, out);
    if (refute->parsed()) return cmd_liouville_refute(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PrecisionExhausted& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace corona::cli
