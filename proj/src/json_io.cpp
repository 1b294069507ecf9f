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

#include "corona/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace corona::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || v > std::numeric_limits<int>::max()) fail(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

// Decimal approximation of a rational whose size may exceed double range.
std::string approx_text(const Rational& q) {
  Real r(kRadiusPrecision);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r.to_string(6);
}

Json finite_or_string(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

SymReal sym_from_json(const Json& j) {
  if (j.is_string()) return SymReal::parse(j.get<std::string>());
  if (j.is_number_integer()) return SymReal{Rational(BigInt(j.dump())), {}};
  if (j.is_number()) return SymReal{rational_from_double(j.get<double>()), {}};
  fail("coordinate must be a number or a string");
}

}  // namespace

Json parse(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::ostringstream msg;
    msg << "malformed JSON in " << source << " at byte " << e.byte << ": " << e.what();
    throw InputError(msg.str());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

Json big_int_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

BigInt big_int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.dump());
  if (j.is_string()) {
    BigInt n;
    if (n.set_str(j.get<std::string>(), 10) != 0) fail("invalid integer string '" + j.get<std::string>() + "'");
    return n;
  }
  fail("expected an integer or a decimal string");
}

Json rational_to_json(const Rational& q) {
  return Json::array({big_int_to_json(q.get_num()), big_int_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) fail("a rational is a [num, den] pair");
    const BigInt den = big_int_from_json(j[1]);
    if (sgn(den) == 0) fail("zero denominator");
    Rational q(big_int_from_json(j[0]), den);
    q.canonicalize();
    return q;
  }
  if (j.is_number_integer()) return Rational(BigInt(j.dump()));
  if (j.is_number()) return rational_from_double(j.get<double>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("expected a rational");
}

Json complex_to_json(const ExactComplex& z) {
  return Json::array({big_int_to_json(z.re.get_num()), big_int_to_json(z.re.get_den()),
                      big_int_to_json(z.im.get_num()), big_int_to_json(z.im.get_den())});
}

ExactComplex complex_from_json(const Json& j) {
  if (j.is_array() && j.size() == 4) {
    return {rational_from_json(Json::array({j[0], j[1]})), rational_from_json(Json::array({j[2], j[3]}))};
  }
  return ExactComplex(rational_from_json(j));
}

Json to_json(const Distribution& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json loc = Json::array();
    for (const auto& x : t.location) loc.push_back(rational_to_json(x));
    terms.push_back({{"coeff", complex_to_json(t.coeff)}, {"location", loc}, {"deriv", t.deriv.entries}});
  }
  Json out = {{"dimension", f.dimension()}, {"terms", terms}};
  if (f.density()) {
    Json bps = Json::array(), pieces = Json::array();
    for (const auto& b : f.density()->breakpoints()) bps.push_back(rational_to_json(b));
    for (const auto& p : f.density()->pieces()) {
      Json coeffs = Json::array();
      for (const auto& c : p.coeffs()) coeffs.push_back(sgn(c.im) == 0 ? rational_to_json(c.re) : complex_to_json(c));
      pieces.push_back(coeffs);
    }
    out["density"] = {{"breakpoints", bps}, {"pieces", pieces}};
  }
  return out;
}

Distribution distribution_from_json(const Json& j) {
  const int d = int_from_json(field(j, "dimension"), "dimension");
  if (d < 1) fail("dimension must be at least 1");
  std::vector<PointMassTerm> terms;
  if (j.contains("terms")) {
    const Json& ts = j["terms"];
    if (!ts.is_array()) fail("'terms' must be an array");
    for (const auto& t : ts) {
      PointMassTerm term;
      term.coeff = complex_from_json(field(t, "coeff"));
      const Json& loc = field(t, "location");
      if (!loc.is_array() || loc.size() != static_cast<std::size_t>(d)) fail("term location has the wrong length");
      for (const auto& x : loc) term.location.push_back(rational_from_json(x));
      if (t.contains("deriv")) {
        const Json& k = t["deriv"];
        if (!k.is_array() || k.size() != static_cast<std::size_t>(d)) fail("term deriv has the wrong length");
        for (const auto& e : k) term.deriv.entries.push_back(static_cast<unsigned>(int_from_json(e, "deriv entry")));
      } else {
        term.deriv = MultiIndex::zero(d);
      }
      terms.push_back(std::move(term));
    }
  }
  std::optional<PiecewisePolyDensity> density;
  if (j.contains("density") && !j["density"].is_null()) {
    if (d != 1) fail("densities are supported in dimension 1 only");
    const Json& dj = j["density"];
    std::vector<Rational> bps;
    for (const auto& b : field(dj, "breakpoints")) bps.push_back(rational_from_json(b));
    std::vector<Poly> pieces;
    for (const auto& p : field(dj, "pieces")) {
      if (!p.is_array()) fail("each density piece is an array of coefficients");
      std::vector<ExactComplex> coeffs;
      for (const auto& c : p) coeffs.push_back(complex_from_json(c));
      pieces.emplace_back(std::move(coeffs));
    }
    density = PiecewisePolyDensity::make(std::move(bps), std::move(pieces));
  }
  return Distribution(d, std::move(terms), std::move(density));
}

Json to_json(const Cone& cone) {
  Json out = {{"kind", cone.name()}, {"dimension", cone.dimension()}};
  if (cone.is<LightCone>()) out["speed"] = rational_to_json(cone.as<LightCone>().speed);
  if (cone.is<Polyhedral>()) {
    Json gens = Json::array();
    for (const auto& g : cone.as<Polyhedral>().generators) {
      Json row = Json::array();
      for (const auto& x : g) row.push_back(rational_to_json(x));
      gens.push_back(row);
    }
    out["generators"] = gens;
  }
  return out;
}

Cone cone_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail("cone kind must be a string");
  const std::string k = kind.get<std::string>();
  const int d = int_from_json(field(j, "dimension"), "dimension");
  if (k == "full") return Cone::full(d);
  if (k == "orthant") return Cone::orthant(d);
  if (k == "lightcone") {
    const Rational speed = j.contains("speed") ? rational_from_json(j["speed"]) : Rational(1);
    return Cone::light(d - 1, speed);
  }
  if (k == "polyhedral") {
    std::vector<std::vector<Rational>> gens;
    for (const auto& g : field(j, "generators")) {
      std::vector<Rational> row;
      for (const auto& x : g) row.push_back(rational_from_json(x));
      gens.push_back(std::move(row));
    }
    return Cone::polyhedral(d, std::move(gens));
  }
  fail("unknown cone kind '" + k + "'");
}

PointSpec point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("a point is a nonempty array of coordinates");
  PointSpec p;
  for (const auto& c : j) {
    if (c.is_array()) {
      if (c.size() != 2) fail("a complex coordinate is [re, im]");
      p.coords.push_back({sym_from_json(c[0]), sym_from_json(c[1])});
    } else {
      p.coords.push_back({sym_from_json(c), SymReal{}});
    }
  }
  return p;
}

Json to_json(const PointSpec& p) {
  Json out = Json::array();
  for (const auto& c : p.coords) out.push_back(Json::array({c.re.to_string(), c.im.to_string()}));
  return out;
}

std::vector<PointSpec> points_from_json(const Json& j) {
  if (!j.is_array()) fail("a sample set is an array of points");
  std::vector<PointSpec> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Json to_json(const Ball& b) {
  return {{"mid", b.mid().to_string(25)},
          {"radius", finite_or_string(b.rad_double())},
          {"lower", finite_or_string(b.lower_double())},
          {"upper", finite_or_string(b.upper_double())}};
}

Json to_json(const ComplexBall& z) { return {{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

Json to_json(const PwsBound& b) {
  Json lo = Json::array(), hi = Json::array();
  for (const auto& x : b.support_box.lo) lo.push_back(rational_to_json(x));
  for (const auto& x : b.support_box.hi) hi.push_back(rational_to_json(x));
  return {{"constC", b.const_c}, {"exponentN", b.exponent_n}, {"supportBox", {{"lo", lo}, {"hi", hi}}}};
}

Json to_json(const PwsReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json point = Json::array();
    for (const auto& c : s.point.coords) {
      point.push_back(Json::array({c.re().mid().to_string(20), c.im().mid().to_string(20)}));
    }
    samples.push_back({{"point", point},
                       {"value", to_json(s.value)},
                       {"bound", to_json(s.bound)},
                       {"margin", finite_or_string(s.margin)},
                       {"pass", s.pass}});
  }
  return {{"samples", samples}, {"worstMargin", finite_or_string(r.worst_margin)}, {"allPass", r.all_pass}};
}

Json to_json(const CoronaParams& p) {
  return {{"C", rational_to_json(p.const_c)}, {"N", rational_to_json(p.exponent_n)}, {"M", rational_to_json(p.cone_scale_m)},
          {"approx", {{"C", p.const_c.get_d()}, {"N", p.exponent_n.get_d()}, {"M", p.cone_scale_m.get_d()}}}};
}

Json to_json(const CoronaVerdict& v) {
  Json out = {{"status", status_name(v.status)},
              {"minRatio", finite_or_string(v.min_ratio)},
              {"evaluated", v.evaluated},
              {"unresolved", v.unresolved},
              {"precision", v.precision},
              {"notes", v.notes}};
  out["point"] = v.point ? to_json(*v.point) : Json(nullptr);
  out["lhs"] = v.lhs ? to_json(*v.lhs) : Json(nullptr);
  out["rhs"] = v.rhs ? to_json(*v.rhs) : Json(nullptr);
  return out;
}

Json to_json(const BezoutReport& r) {
  Json out = {{"representable", r.representable},
              {"exactIdentity", r.exact_identity},
              {"samples", r.samples},
              {"maxResidualUpper", finite_or_string(r.max_residual_upper)},
              {"transformConsistent", r.transform_consistent}};
  out["residual"] = r.residual ? to_json(*r.residual) : Json(nullptr);
  return out;
}

Json to_json(const NecessityResult& r) { return {{"params", to_json(r.params)}, {"notes", r.notes}}; }

Json to_json(const LocalityReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"index", v.index}, {"pZ", to_json(v.p_z)}, {"pZeta", to_json(v.p_zeta)}});
  }
  return {{"checked", r.checked},
          {"worstSlack", finite_or_string(r.worst_slack)},
          {"allPass", r.all_pass},
          {"violations", violations}};
}

Json to_json(const AxiomReport& r) {
  return {{"checked", r.checked},
          {"worstSubadditivity", r.worst_subadditivity},
          {"worstHomogeneity", r.worst_homogeneity},
          {"tolerance", r.tolerance},
          {"allPass", r.all_pass}};
}

Json to_json(const liouville::LiouvilleRow& r) {
  return {{"K", r.k},
          {"pK", r.p.get_str()},
          {"qK", r.q.get_str()},
          {"gapLower", rational_to_json(r.gap.lower)},
          {"gapUpper", rational_to_json(r.gap.upper)},
          {"gapPowerBound", rational_to_json(r.gap.power_bound)},
          {"sinArgUpper", rational_to_json(r.transform.sin_arg_upper)},
          {"transformUpper", rational_to_json(r.transform.transform_upper)},
          {"f2Vanishes", r.transform.f2_vanishes},
          {"coronaBound", {rational_to_json(r.corona_lower), rational_to_json(r.corona_upper)}},
          {"ratioUpper", rational_to_json(r.ratio_upper)},
          {"ratioUpperApprox", approx_text(r.ratio_upper)}};
}

Json to_json(const liouville::Refutation& r) {
  Json out = {{"success", r.success}};
  if (r.success) {
    out["K"] = r.k;
    out["ratioUpper"] = rational_to_json(r.ratio_upper);
    out["ratioUpperApprox"] = approx_text(r.ratio_upper);
  } else {
    out["requiredKEstimate"] = r.required_k_estimate;
    out["message"] = r.message;
  }
  return out;
}

std::string liouville_csv(const std::vector<liouville::LiouvilleRow>& rows) {
  std::ostringstream out;
  out << "K,pK,qK,gapUpper,sinArgUpper,transformUpper,coronaLower,coronaUpper,ratioUpper,ratioUpperApprox\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.p.get_str() << ',' << r.q.get_str() << ',' << to_string(r.gap.upper) << ','
        << to_string(r.transform.sin_arg_upper) << ',' << to_string(r.transform.transform_upper) << ','
        << to_string(r.corona_lower) << ',' << to_string(r.corona_upper) << ',' << to_string(r.ratio_upper) << ','
        << approx_text(r.ratio_upper) << '\n';
  }
  return out.str();
}

}  // namespace corona::json_io
