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

#ifndef EWCONES_ERRATA_HPP_
#define EWCONES_ERRATA_HPP_

#include <string>

namespace ewcones {

/// A published formula or coefficient replaced by a recomputed one.
struct Erratum {
  std::string id;        // stable identifier, e.g. "appendix.a2.R23"
  std::string location;  // human-readable position
  std::string printed;
  std::string corrected;
  double printed_value = 0.0;  // numeric value where one exists, else NaN
  double corrected_value = 0.0;
  std::string evidence;
};

}  // namespace ewcones

#endif  // EWCONES_ERRATA_HPP_
