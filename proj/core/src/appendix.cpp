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

#include "ewcones/appendix.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ewcones/error.hpp"

namespace ewcones {
namespace {

constexpr double kCoefficientMatchTol = 1e-14;

Surd s(int num, int den, int rad = 1) { return Surd{num, den, rad}; }

AppendixFormula formula(char letter, int index, std::vector<AppendixTerm> terms) {
  return AppendixFormula{letter, index, std::move(terms)};
}

// Transcription of the typeset table; term order follows the source.
std::vector<AppendixFormula> make_printed() {
  std::vector<AppendixFormula> f;
  f.push_back(formula('a', 1, {{1, 1, s(1, 2)}, {1, 2, s(1, 2, 3)}, {1, 3, s(1, 2, 6)},
                               {2, 1, s(1, 2, 3)}, {2, 2, s(1, 6)}, {2, 3, s(1, 6, 2)},
                               {3, 1, s(1, 2, 6)}, {3, 2, s(1, 6, 2)}, {3, 3, s(1, 12)}}));
  f.push_back(formula('a', 2, {{2, 1, s(-1, 2, 3)}, {2, 2, s(1, 6)}, {2, 3, s(1, 6, 3)},
                               {1, 1, s(1, 2)}, {1, 2, s(-1, 2, 3)}, {1, 3, s(-1, 2, 6)},
                               {3, 1, s(-1, 2, 6)}, {3, 2, s(1, 6, 2)}, {3, 3, s(1, 12)}}));
  f.push_back(formula('a', 3, {{3, 2, s(-1, 3, 2)}, {3, 3, s(1, 12)}, {2, 2, s(2, 3)},
                               {2, 3, s(-1, 3, 2)}}));
  f.push_back(formula('a', 4, {{3, 3, s(9, 12)}}));
  f.push_back(formula('b', 1, {{1, 1, s(-1, 2)}, {1, 2, s(1, 2, 3)}, {1, 3, s(1, 2, 6)},
                               {2, 1, s(-1, 2, 3)}, {2, 2, s(1, 6)}, {2, 3, s(1, 6, 2)},
                               {3, 1, s(-1, 2, 6)}, {3, 2, s(1, 6, 2)}, {3, 3, s(1, 12)}}));
  f.push_back(formula('b', 2, {{1, 2, s(1, 1, 3)}, {1, 3, s(-1, 2, 6)}, {2, 2, s(-1, 3)},
                               {2, 3, s(1, 6, 2)}, {3, 2, s(-1, 3, 2)}, {3, 3, s(1, 12)}}));
  f.push_back(formula('b', 3, {{3, 3, s(-3, 12)}, {2, 3, s(1, 1, 2)}}));
  f.push_back(formula('b', 4, {{3, 1, s(-3, 2, 6)}, {3, 2, s(-1, 2, 2)}, {3, 3, s(-3, 12)}}));
  f.push_back(formula('c', 1, {{1, 2, s(-1, 1, 3)}, {1, 3, s(1, 2, 6)}, {2, 2, s(-1, 3)},
                               {2, 3, s(1, 6, 2)}, {3, 2, s(-1, 3, 2)}, {3, 3, s(1, 12)}}));
  f.push_back(formula('c', 2, {{2, 3, s(-1, 2, 2)}, {1, 3, s(3, 2, 6)}, {3, 3, s(-3, 12)}}));
  f.push_back(formula('c', 3, {{3, 1, s(1, 2, 6)}, {3, 2, s(1, 6, 2)}, {3, 3, s(1, 12)},
                               {2, 1, s(-1, 1, 3)}, {2, 2, s(-1, 3)}, {2, 3, s(-1, 3, 2)}}));
  f.push_back(formula('c', 4, {{3, 1, s(3, 2, 6)}, {3, 2, s(-1, 2, 2)}, {3, 3, s(-3, 12)}}));
  f.push_back(formula('d', 1, {{1, 3, s(-3, 2, 6)}, {2, 3, s(-1, 2, 2)}, {3, 3, s(-1, 4)}}));
  f.push_back(formula('d', 2, {{2, 1, s(1, 2, 3)}, {2, 2, s(1, 6)}, {2, 3, s(1, 6, 2)},
                               {1, 1, s(-1, 2)}, {1, 2, s(-1, 2, 3)}, {1, 3, s(-1, 2, 6)},
                               {3, 1, s(1, 2, 6)}, {3, 2, s(1, 6, 2)}, {3, 3, s(1, 12)}}));
  f.push_back(formula('d', 3, {{3, 1, s(-1, 2, 6)}, {3, 2, s(1, 6, 2)}, {3, 3, s(1, 12)},
                               {2, 1, s(1, 1, 3)}, {2, 2, s(-1, 3)}, {2, 3, s(-1, 3, 2)}}));
  f.push_back(formula('d', 4, {{3, 2, s(1, 1, 2)}, {3, 3, s(-3, 12)}}));
  return f;
}

// <i|d_k|i> * sqrt(k(k+1)) for n = 4, 1-based.
int scaled_diagonal(int k, int i) {
  if (i <= k) return 1;
  if (i == k + 1) return -k;
  return 0;
}

void replace_coefficient(AppendixFormula& f, int row, int col, Surd value) {
  for (AppendixTerm& t : f.terms) {
    if (t.row == row && t.col == col) {
      t.coefficient = value;
      return;
    }
  }
  f.terms.push_back(AppendixTerm{row, col, value});
}

std::vector<AppendixFormula> make_corrected() {
  std::vector<AppendixFormula> table = printed_appendix();
  for (AppendixFormula& f : table) {
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        const Surd want = derived_coefficient(f.index, f.column(), k, l);
        if (std::abs(f.coefficient(k, l).value() - want.value()) > kCoefficientMatchTol) {
          replace_coefficient(f, k, l, want);
        }
      }
  }
  return table;
}

AppendixEntries evaluate_table(const std::vector<AppendixFormula>& table,
                               const RealMatrix& r) {
  if (r.rows() != 3 || r.cols() != 3) throw ShapeError("appendix entries need a 3x3 matrix");
  AppendixEntries e;
  for (const AppendixFormula& f : table) {
    const auto i = static_cast<std::size_t>(f.index - 1);
    const double v = f.evaluate(r);
    switch (f.letter) {
      case 'a': e.a[i] = v; break;
      case 'b': e.b[i] = v; break;
      case 'c': e.c[i] = v; break;
      default: e.d[i] = v; break;
    }
  }
  return e;
}

}  // namespace

double Surd::value() const {
  return double(numerator) / (double(denominator) * std::sqrt(double(radicand)));
}

std::string Surd::to_string() const {
  if (numerator == 0) return "0";
  std::string out = std::to_string(numerator);
  if (radicand == 1) {
    if (denominator != 1) out += "/" + std::to_string(denominator);
    return out;
  }
  const std::string root = "sqrt(" + std::to_string(radicand) + ")";
  if (denominator == 1) return out + "/" + root;
  return out + "/(" + std::to_string(denominator) + "*" + root + ")";
}

std::string AppendixFormula::name() const {
  return std::string(1, letter) + std::to_string(index);
}

int AppendixFormula::column() const {
  const int offset = letter - 'a';
  return (index - 1 + offset) % 4 + 1;
}

double AppendixFormula::evaluate(const RealMatrix& r) const {
  double v = 0.75;
  for (const AppendixTerm& t : terms)
    v += t.coefficient.value() * r(static_cast<std::size_t>(t.row - 1),
                                   static_cast<std::size_t>(t.col - 1));
  return v;
}

Surd AppendixFormula::coefficient(int row, int col) const {
  for (const AppendixTerm& t : terms)
    if (t.row == row && t.col == col) return t.coefficient;
  return Surd{0, 1, 1};
}

const std::vector<AppendixFormula>& printed_appendix() {
  static const std::vector<AppendixFormula> table = make_printed();
  return table;
}

Surd derived_coefficient(int i, int j, int k, int l) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || k < 1 || k > 3 || l < 1 || l > 3) {
    throw DomainError("derived_coefficient: index out of range");
  }
  int num = scaled_diagonal(k, i) * scaled_diagonal(l, j);
  if (num == 0) return Surd{0, 1, 1};
  // 1/sqrt(k(k+1) l(l+1)) = 1/(f sqrt(r)) with r squarefree.
  int m = k * (k + 1) * l * (l + 1);
  int f = 1;
  for (int p = 2; p * p <= m; ++p)
    while (m % (p * p) == 0) {
      m /= p * p;
      f *= p;
    }
  const int g = std::gcd(std::abs(num), f);
  return Surd{num / g, f / g, m};
}

std::vector<Erratum> audit_appendix() {
  std::vector<Erratum> out;
  for (const AppendixFormula& f : printed_appendix()) {
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) {
        const Surd printed = f.coefficient(k, l);
        const Surd want = derived_coefficient(f.index, f.column(), k, l);
        if (std::abs(printed.value() - want.value()) <= kCoefficientMatchTol) continue;
        const std::string rkl = "R" + std::to_string(k) + std::to_string(l);
        Erratum e;
        e.id = "appendix." + f.name() + "." + rkl;
        e.location = "entry " + f.name() + " (3*Phi_" + std::to_string(f.index) +
                     std::to_string(f.column()) + "), coefficient of " + rkl;
        e.printed = printed.to_string();
        e.corrected = want.to_string();
        e.printed_value = printed.value();
        e.corrected_value = want.value();
        e.evidence = "3*Phi_ij = 3/4 + sum_kl <i|d_k|i> R_kl <j|d_l|j>; term " + rkl +
                     " evaluates to " + want.to_string();
        out.push_back(std::move(e));
      }
  }
  return out;
}

const std::vector<AppendixFormula>& corrected_appendix() {
  static const std::vector<AppendixFormula> table = make_corrected();
  return table;
}

AppendixEntries appendix_entries(const RealMatrix& r) {
  return evaluate_table(corrected_appendix(), r);
}

AppendixEntries appendix_entries_as_printed(const RealMatrix& r) {
  return evaluate_table(printed_appendix(), r);
}

}  // namespace ewcones
