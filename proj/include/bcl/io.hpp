// Copyright (c) 2026 The bcl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "bcl/bloch.hpp"
#include "bcl/bounds.hpp"
#include "bcl/cesaro.hpp"
#include "bcl/compactness.hpp"
#include "bcl/series.hpp"

// JSON and CSV forms of the lab's values and reports.
//
//   series:  {"coeffs": [[re, im], ...]}  (plain numbers accepted on input)
//   symbol:  {"terms": [{"a": [re, im], "b_angle": theta}], "beta": b,
//             "h": {"coeffs": [...]}}     ("h" optional on input)
namespace bcl::io {

using Json = nlohmann::json;

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

Json to_json(const PowerSeries& f);
/// Accepts {"coeffs": [...]} or a bare array. Throws FormatError.
PowerSeries series_from_json(const Json& j);
PowerSeries parse_series(std::string_view text);

Json to_json(const SymbolGBeta& s);
SymbolGBeta symbol_from_json(const Json& j);
SymbolGBeta parse_symbol(std::string_view text);

Json to_json(const SeminormEstimate& e);
Json to_json(const GrowthVerdict& v);
Json to_json(const SpectrumReport& r, std::size_t count);
Json to_json(const Classification& c);
Json to_json(const BoundConstant& b);
Json to_json(const ProbeReport& r);
Json to_json(const NullFamily& f);
/// Essential-norm form: [{"dilation", "max_distance", "argmax_member"}, ...]
/// plus verdict; compactness form uses "m" / "norm".
Json trend_to_json(const TrendReport& r, bool essential_norm);

std::string records_to_csv(const std::vector<GridRecord>& records);
std::string matrix_to_csv(const OperatorMatrix& m);
std::string samples_to_csv(const std::vector<std::pair<double, double>>& samples,
                           std::string_view x_name, std::string_view y_name);
std::string series_to_csv(const PowerSeries& f);

}  // namespace bcl::io
