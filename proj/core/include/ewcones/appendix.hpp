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

#ifndef EWCONES_APPENDIX_HPP_
#define EWCONES_APPENDIX_HPP_

#include <string>
#include <vector>

#include "ewcones/errata.hpp"
#include "ewcones/matrix.hpp"
#include "ewcones/so3_family.hpp"

namespace ewcones {

/// numerator / (denominator * sqrt(radicand)).
struct Surd {
  int numerator = 0;
  int denominator = 1;
  int radicand = 1;

  double value() const;
  /// e.g. "-1/(6*sqrt(2))", "9/12", "1/sqrt(3)".
  std::string to_string() const;
};

/// Coefficient of R_{row col} (1-based) in one entry.
struct AppendixTerm {
  int row = 0;
  int col = 0;
  Surd coefficient;
};

/// One entry of the pre-twirl 3*Phi: 3/4 + sum of terms.
struct AppendixFormula {
  char letter = 'a';  // a, b, c or d
  int index = 1;      // 1..4, the row
  std::vector<AppendixTerm> terms;

  /// e.g. "a2".
  std::string name() const;
  /// Column of the entry in 3*Phi, 1-based.
  int column() const;
  double evaluate(const RealMatrix& r) const;
  /// Coefficient of R_{row col}; zero Surd if absent.
  Surd coefficient(int row, int col) const;
};

/// The sixteen entries as they were typeset, transcribed coefficient by
/// coefficient. Known to contain a misprint; use corrected_appendix().
const std::vector<AppendixFormula>& printed_appendix();

/// Exact coefficient of r_kl in 3*Phi_ij from the defining sum
/// 3 Phi_ij = 3/4 + sum_kl <i|d_k|i> r_kl <j|d_l|j> (n = 4, all 1-based).
Surd derived_coefficient(int i, int j, int k, int l);

/// Compares every printed coefficient (16 entries x 9 terms) with its
/// derived value and reports each mismatch as an Erratum.
std::vector<Erratum> audit_appendix();

/// printed_appendix() with every audited coefficient replaced.
const std::vector<AppendixFormula>& corrected_appendix();

AppendixEntries appendix_entries(const RealMatrix& r);
AppendixEntries appendix_entries_as_printed(const RealMatrix& r);

}  // namespace ewcones

#endif  // EWCONES_APPENDIX_HPP_
