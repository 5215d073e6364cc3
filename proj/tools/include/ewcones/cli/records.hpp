// Copyright 2026 The ewcones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EWCONES_CLI_RECORDS_HPP_
#define EWCONES_CLI_RECORDS_HPP_

#include <string>
#include <vector>

#include "ewcones/certify.hpp"
#include "ewcones/cone_geometry.hpp"
#include "ewcones/errata.hpp"
#include "ewcones/matrix.hpp"
#include "ewcones/so3_family.hpp"
#include "ewcones/spa.hpp"
#include "json.hpp"

namespace ewcones::cli {

using Json = nlohmann::ordered_json;

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json matrix_to_json(const Matrix& m);

/// Accepts the object form above, a flat row-major list of dim*dim
/// [re, im] pairs, or dim nested rows of pairs. Throws ValidationError on
/// any other layout.
Matrix matrix_from_json(const Json& j, std::size_t dim);

Json params_to_json(const WitnessParams& p);
Json provenance_to_json(const WitnessParams& p);
Json cone_report_to_json(const ConeReport& r);
Json certificate_to_json(const Certificate& c);
Json spa_result_to_json(const SpaResult& r);
Json erratum_to_json(const Erratum& e);

/// Shortest decimal string that reads back to the same double.
std::string format_number(double v);

/// One CSV row "b,c,d,tag" without the line terminator.
std::string csv_row(const Point3& p, const std::string& tag);

}  // namespace ewcones::cli

#endif  // EWCONES_CLI_RECORDS_HPP_
