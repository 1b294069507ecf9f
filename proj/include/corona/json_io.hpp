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

// JSON schemas for distributions, cones, points and reports.
//
// Rationals are [num, den] pairs. Integers that do not fit in 64 bits are
// written as decimal strings; readers accept either form. A complex
// coefficient is [num_re, den_re, num_im, den_im]; a density coefficient is
// written as [num, den] when real and as the 4-tuple otherwise.

#ifndef CORONA_JSON_IO_HPP_
#define CORONA_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "corona/ball.hpp"
#include "corona/cone.hpp"
#include "corona/convex_geometry.hpp"
#include "corona/corona.hpp"
#include "corona/distribution.hpp"
#include "corona/fourier_laplace.hpp"
#include "corona/liouville.hpp"
#include "corona/point.hpp"

namespace corona::json_io {

using Json = nlohmann::json;

// Parses text; malformed input raises InputError with the byte offset.
Json parse(std::string_view text, std::string_view source = "input");
Json read_file(const std::string& path);

Json big_int_to_json(const BigInt& n);
BigInt big_int_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json complex_to_json(const ExactComplex& z);
ExactComplex complex_from_json(const Json& j);

Json to_json(const Distribution& f);
Distribution distribution_from_json(const Json& j);

Json to_json(const Cone& cone);
Cone cone_from_json(const Json& j);

// A point is an array of coordinates; each coordinate is a number or string
// (real) or a two-element array [re, im]. Strings may carry multiples of pi
// ("200pi").
PointSpec point_from_json(const Json& j);
Json to_json(const PointSpec& p);
std::vector<PointSpec> points_from_json(const Json& j);

Json to_json(const Ball& b);
Json to_json(const ComplexBall& z);

Json to_json(const PwsBound& b);
Json to_json(const PwsReport& r);
Json to_json(const CoronaParams& p);
Json to_json(const CoronaVerdict& v);
Json to_json(const BezoutReport& r);
Json to_json(const NecessityResult& r);
Json to_json(const LocalityReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const liouville::LiouvilleRow& r);
Json to_json(const liouville::Refutation& r);

// CSV with one line per row; big integers and rationals as exact strings.
std::string liouville_csv(const std::vector<liouville::LiouvilleRow>& rows);

}  // namespace corona::json_io

#endif  // CORONA_JSON_IO_HPP_
