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

#include "ewcones/cli/records.hpp"

#include <charconv>
#include <cmath>

#include "ewcones/error.hpp"

namespace ewcones::cli {
namespace {

// JSON has no infinities; an unbounded end is written as null.
Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Complex pair_to_complex(const Json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw ValidationError("matrix entry must be a [re, im] pair of numbers");
  }
  return {pair[0].get<double>(), pair[1].get<double>()};
}

template <std::size_t N>
Json array_json(const std::array<double, N>& a) {
  Json out = Json::array();
  for (double v : a) out.push_back(v);
  return out;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json data = Json::array();
  for (const Complex& z : m.data()) data.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j, std::size_t dim) {
  const Json* flat = &j;
  if (j.is_object()) {
    if (!j.contains("data")) throw ValidationError("matrix object has no \"data\" field");
    if (j.value("rows", dim) != dim || j.value("cols", dim) != dim) {
      throw ValidationError("matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    flat = &j.at("data");
  }
  if (!flat->is_array()) throw ValidationError("matrix must be a JSON array of [re, im] pairs");

  Matrix m(dim, dim);
  if (flat->size() == dim * dim) {
    for (std::size_t k = 0; k < dim * dim; ++k) m.data()[k] = pair_to_complex((*flat)[k]);
    return m;
  }
  if (flat->size() == dim) {
    for (std::size_t r = 0; r < dim; ++r) {
      const Json& row = (*flat)[r];
      if (!row.is_array() || row.size() != dim) {
        throw ValidationError("row " + std::to_string(r) + " must hold " + std::to_string(dim) +
                              " pairs");
      }
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = pair_to_complex(row[c]);
    }
    return m;
  }
  throw ValidationError("expected " + std::to_string(dim * dim) + " [re, im] pairs, got " +
                        std::to_string(flat->size()) + " entries");
}

Json params_to_json(const WitnessParams& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

Json provenance_to_json(const WitnessParams& p) {
  if (!p.provenance) return Json{{"source", "manual"}};
  const Provenance& pr = *p.provenance;
  return Json{{"source", "euler"},
              {"euler", Json::array({pr.angles.alpha, pr.angles.beta, pr.angles.gamma})},
              {"parity", pr.parity == Parity::proper ? "proper" : "improper"}};
}

Json cone_report_to_json(const ConeReport& r) {
  return Json{{"residual_I", r.residual_i},
              {"residual_II", r.residual_ii},
              {"plane_coordinate", r.plane_coordinate},
              {"on_cone_I", r.on_cone_i},
              {"on_cone_II", r.on_cone_ii},
              {"on_intersection", r.on_intersection},
              {"on_ellipse_I", r.on_ellipse_i},
              {"on_ellipse_II", r.on_ellipse_ii},
              {"tolerance", r.tolerance}};
}

Json certificate_to_json(const Certificate& c) {
  Json out{{"verdict", c.verdict == Verdict::decomposable ? "decomposable" : "indecomposable"},
           {"witness_params", params_to_json(c.params)},
           {"tolerance", c.tolerance},
           {"on_cone", c.on_cone},
           {"warnings", c.warnings}};
  if (const auto* ev = std::get_if<IndecomposabilityEvidence>(&c.evidence)) {
    out["evidence"] = Json{
        {"kind", "ppt-probe"},
        {"epsilon", ev->epsilon},
        {"epsilon_rule", ev->epsilon_rule},
        {"pairing_value", ev->pairing_value},
        {"epsilon_interval", Json::array({ev->epsilon_minus, number_or_null(ev->epsilon_plus)})},
        {"probe_min_eigenvalue", ev->probe_min_eigenvalue},
        {"probe_pt_min_eigenvalue", ev->probe_pt_min_eigenvalue}};
  } else {
    const auto& dv = std::get<DecomposabilityEvidence>(c.evidence);
    out["evidence"] = Json{{"kind", "p-plus-q-gamma"},
                           {"A_eigenvalues", array_json(dv.a_eigenvalues)},
                           {"A_eigenvalues_expected", array_json(dv.a_eigenvalues_expected)},
                           {"P_min_eigenvalue", dv.p_min_eigenvalue},
                           {"Q_min_eigenvalue", dv.q_min_eigenvalue},
                           {"reconstruction_residual", dv.reconstruction_residual},
                           {"P", matrix_to_json(dv.p)},
                           {"Q", matrix_to_json(dv.q)}};
  }
  out["recheck_failures"] = check_certificate(c);
  return out;
}

Json spa_result_to_json(const SpaResult& r) {
  Json pairs = Json::array();
  for (const SigmaPair& s : r.sigma_pairs) {
    pairs.push_back(Json{{"i", s.i}, {"j", s.j}, {"separable", s.separable}});
  }
  return Json{{"p_star", r.p_star},
              {"spa3_slacks", array_json(r.slacks)},
              {"spa3_satisfied", r.spa3_satisfied},
              {"normalization", r.normalization},
              {"reconstruction_residual", r.reconstruction_residual},
              {"mixed_min_eigenvalue", r.mixed_min_eigenvalue},
              {"sigma_pairs", std::move(pairs)},
              {"separable", r.separable}};
}

Json erratum_to_json(const Erratum& e) {
  return Json{{"id", e.id},
              {"location", e.location},
              {"printed", e.printed},
              {"corrected", e.corrected},
              {"printed_value", number_or_null(e.printed_value)},
              {"corrected_value", number_or_null(e.corrected_value)},
              {"evidence", e.evidence}};
}

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_row(const Point3& p, const std::string& tag) {
  return format_number(p[0]) + "," + format_number(p[1]) + "," + format_number(p[2]) + "," + tag;
}

}  // namespace ewcones::cli
