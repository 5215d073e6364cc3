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

#include "ewcones/cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "ewcones/appendix.hpp"
#include "ewcones/certify.hpp"
#include "ewcones/cli/records.hpp"
#include "ewcones/cone_geometry.hpp"
#include "ewcones/error.hpp"
#include "ewcones/linalg.hpp"
#include "ewcones/random.hpp"
#include "ewcones/so3_family.hpp"
#include "ewcones/spa.hpp"

#ifndef EWCONES_VERSION
#define EWCONES_VERSION "0.0.0"
#endif

namespace ewcones::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultRestarts = 64;
constexpr std::size_t kStateDim = 16;

struct WitnessArgs {
  std::string euler;
  std::string params;
  std::optional<std::string> parity;  // proper when unset
  double tol = kDecisionTol;
  bool degrees = false;
};

struct SeedArgs {
  int restarts = kDefaultRestarts;
  std::optional<std::uint64_t> seed;
};

struct GeometryArgs {
  std::string cone = "both";
  int resolution = 32;
  std::string format = "json";
  std::string out;
};

std::vector<double> parse_list(const std::string& text, std::size_t count,
                               std::string_view flag) {
  std::vector<double> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size() ||
        !std::isfinite(v)) {
      throw UsageError(std::string(flag) + ": '" + std::string(item) +
                       "' is not a finite number");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (values.size() != count) {
    throw UsageError(std::string(flag) + " expects " + std::to_string(count) +
                     " comma-separated values, got " + std::to_string(values.size()));
  }
  return values;
}

std::uint64_t parse_seed(const std::string& text, std::string_view source) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UsageError(std::string(source) + ": '" + text + "' is not an unsigned 64-bit integer");
  }
  return v;
}

void add_witness_options(CLI::App* sub, WitnessArgs& a) {
  sub->add_option("--euler", a.euler, "Euler angles alpha,beta,gamma (radians unless --degrees)");
  sub->add_option("--params", a.params, "Circulant parameters a,b,c,d with a+b+c+d = 3");
  sub->add_option("--parity", a.parity, "Rotation parity for --euler (default proper)")
      ->check(CLI::IsMember({"proper", "improper"}));
  sub->add_option("--tol", a.tol, "Decision tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_flag("--degrees", a.degrees, "Read --euler in degrees");
}

void add_seed_options(CLI::App* sub, SeedArgs& s) {
  sub->add_option("--restarts", s.restarts, "See-saw restarts")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  sub->add_option("--seed", s.seed, "Optimizer seed (overrides EWCONES_SEED)");
}

WitnessParams resolve_witness(const WitnessArgs& a, Json& inputs) {
  const bool has_euler = !a.euler.empty();
  const bool has_params = !a.params.empty();
  if (has_euler == has_params) {
    throw UsageError("exactly one of --euler or --params is required");
  }
  if (has_params && a.parity) {
    throw UsageError("--parity applies to --euler only");
  }
  WitnessParams p;
  if (has_euler) {
    const auto v = parse_list(a.euler, 3, "--euler");
    inputs["euler"] = v;
    inputs["degrees"] = a.degrees;
    const std::string parity = a.parity.value_or("proper");
    inputs["parity"] = parity;
    const double scale = a.degrees ? std::numbers::pi / 180.0 : 1.0;
    const EulerAngles angles{v[0] * scale, v[1] * scale, v[2] * scale};
    p = abcd_from_euler(angles, parity == "proper" ? Parity::proper : Parity::improper);
    validate(p, a.tol);
  } else {
    const auto v = parse_list(a.params, 4, "--params");
    inputs["params"] = v;
    p = make_params(v[0], v[1], v[2], v[3], a.tol);
  }
  inputs["tol"] = a.tol;
  return p;
}

std::uint64_t resolve_seed(const SeedArgs& s, const Environment& env, Json& inputs) {
  inputs["restarts"] = s.restarts;
  if (s.seed) {
    inputs["seed_source"] = "flag";
    return *s.seed;
  }
  if (env.seed) {
    inputs["seed_source"] = "EWCONES_SEED";
    return parse_seed(*env.seed, "EWCONES_SEED");
  }
  inputs["seed_source"] = "default";
  return kDefaultSeed;
}

Json make_record(std::string_view command, Json inputs, Json outputs,
                 std::vector<std::string> errata, std::optional<std::uint64_t> seed) {
  Json record{{"command", command},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"errata_applied", std::move(errata)},
              {"tool_version", tool_version()}};
  if (seed) record["seed"] = *seed;
  return record;
}

std::vector<std::string> errata_ids(const std::vector<Erratum>& errata) {
  std::vector<std::string> ids;
  for (const Erratum& e : errata) ids.push_back(e.id);
  return ids;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

void finish_output(std::ofstream& file, const std::string& path) {
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

Json cmd_classify(const WitnessArgs& w, const SeedArgs& s, const Environment& env,
                  std::uint64_t& seed_out) {
  Json inputs = Json::object();
  const WitnessParams p = resolve_witness(w, inputs);
  seed_out = resolve_seed(s, env, inputs);

  const ConeReport cones = cone_residuals(p, w.tol);
  const ProductResiduals products = product_relations(p);
  const Certificate cert = certify_decomposability(p, w.tol);
  const double bp = block_positivity_min(witness_from_params(p, w.tol), s.restarts, seed_out);

  Json outputs{{"params", params_to_json(p)},
               {"provenance", provenance_to_json(p)},
               {"cone", cone_report_to_json(cones)},
               {"product_relations", Json{{"bd", products.bd}, {"ac", products.ac}}},
               {"certificate", certificate_to_json(cert)},
               {"block_positivity",
                Json{{"minimum", bp},
                     {"restarts", s.restarts},
                     {"seed", seed_out},
                     {"nonnegative_within_tolerance", bp >= -w.tol},
                     {"semantics", "numerical evidence from see-saw minimization, not a proof"}}},
               {"warnings", cert.warnings}};
  return make_record("classify", std::move(inputs), std::move(outputs), {}, seed_out);
}

Json cmd_spa(const WitnessArgs& w) {
  Json inputs = Json::object();
  const WitnessParams p = resolve_witness(w, inputs);
  const SpaResult r = spa_decompose(p);
  Json outputs{{"params", params_to_json(p)}, {"provenance", provenance_to_json(p)}};
  outputs.update(spa_result_to_json(r));
  outputs["p_star_closed_form"] = critical_p_closed_form(p.a);
  outputs["p_star_bisection"] = critical_p_bisection(witness_from_params(p, w.tol).op());
  return make_record("spa", std::move(inputs), std::move(outputs), errata_ids(spa_errata()),
                     std::nullopt);
}

struct TaggedPoint {
  Point3 bcd;
  std::string tag;
};

std::vector<TaggedPoint> geometry_points(ConeSelection selection, int resolution) {
  std::vector<TaggedPoint> rows;
  for (const CloudPoint& c : sample_cloud(selection, resolution)) {
    rows.push_back({c.bcd, std::string(to_string(c.cone))});
  }
  // An odd sample count puts a sample at the middle of each generator,
  // where the b = d line crosses the intersection ellipse.
  const int curve_samples = resolution % 2 == 1 ? resolution : resolution + 1;
  for (ConeId cone : {ConeId::I, ConeId::II}) {
    if (selection == ConeSelection::I && cone != ConeId::I) continue;
    if (selection == ConeSelection::II && cone != ConeId::II) continue;
    for (const CloudPoint& c : decomposable_curve(cone, curve_samples)) {
      rows.push_back({c.bcd, "b=d:" + std::string(to_string(cone))});
    }
  }
  const Point3 v = cone_vertex(ConeId::I);
  for (int k = 0; k < resolution; ++k) {
    const Point3 e = base_ellipse_point(ConeId::I, 2.0 * std::numbers::pi * k / resolution);
    rows.push_back({{0.5 * (v[0] + e[0]), 0.5 * (v[1] + e[1]), 0.5 * (v[2] + e[2])},
                    "intersection"});
  }
  for (const SpecialPoint& s : special_points()) {
    if (selection == ConeSelection::I && s.ellipse != ConeId::I) continue;
    if (selection == ConeSelection::II && s.ellipse != ConeId::II) continue;
    rows.push_back({{s.params.b, s.params.c, s.params.d}, "special" + s.label});
  }
  return rows;
}

std::string geometry_csv(const std::vector<TaggedPoint>& rows) {
  std::string text = "b,c,d,tag\n";
  for (const TaggedPoint& r : rows) text += csv_row(r.bcd, r.tag) + "\n";
  return text;
}

void cmd_geometry(const GeometryArgs& g, std::ostream& out) {
  const ConeSelection selection = g.cone == "I"    ? ConeSelection::I
                                  : g.cone == "II" ? ConeSelection::II
                                                   : ConeSelection::both;
  const auto rows = geometry_points(selection, g.resolution);
  Json inputs{{"cone", g.cone}, {"resolution", g.resolution}, {"format", g.format}};
  if (!g.out.empty()) inputs["out"] = g.out;

  Json counts = Json::object();
  for (const TaggedPoint& r : rows) {
    counts[r.tag] = counts.value(r.tag, 0) + 1;
  }
  Json summary{{"rows", rows.size()},
               {"counts", counts},
               {"axis", Json{{"origin", axis_origin()}, {"direction", axis_direction()}}},
               {"vertices", Json{{"I", cone_vertex(ConeId::I)}, {"II", cone_vertex(ConeId::II)}}}};

  if (g.format == "csv") {
    const std::string text = geometry_csv(rows);
    if (g.out.empty()) {
      out << text;
      return;
    }
    std::ofstream file = open_output(g.out);
    file << text;
    finish_output(file, g.out);
    summary["path"] = g.out;
    out << make_record("geometry", inputs, summary, {}, std::nullopt).dump(2) << "\n";
    return;
  }

  Json points = Json::array();
  for (const TaggedPoint& r : rows) {
    points.push_back(Json{{"b", r.bcd[0]}, {"c", r.bcd[1]}, {"d", r.bcd[2]}, {"tag", r.tag}});
  }
  Json full = summary;
  full["points"] = std::move(points);
  if (g.out.empty()) {
    out << make_record("geometry", inputs, full, {}, std::nullopt).dump(2) << "\n";
    return;
  }
  std::ofstream file = open_output(g.out);
  file << make_record("geometry", inputs, full, {}, std::nullopt).dump(2) << "\n";
  finish_output(file, g.out);
  summary["path"] = g.out;
  out << make_record("geometry", inputs, summary, {}, std::nullopt).dump(2) << "\n";
}

Json cmd_detect(const WitnessArgs& w, const std::string& state_path) {
  Json inputs = Json::object();
  const WitnessParams p = resolve_witness(w, inputs);
  inputs["state"] = state_path;

  std::ifstream file(state_path, std::ios::binary);
  if (!file) throw IoError("cannot read state file '" + state_path + "'");
  const std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  if (file.bad()) throw IoError("failed reading '" + state_path + "'");
  const Json parsed = Json::parse(text);
  const Matrix rho = matrix_from_json(parsed, kStateDim);

  const Witness witness = witness_from_params(p, w.tol);
  const double value = detect(witness, rho, w.tol);
  const double trace = rho.trace().real();
  const bool ppt = is_psd(partial_transpose(rho, {4, 4}), w.tol);
  const bool detected = value < -w.tol;
  Json outputs{{"params", params_to_json(p)},
               {"provenance", provenance_to_json(p)},
               {"value", value},
               {"normalized_value", value / trace},
               {"detected", detected},
               {"state_trace", trace},
               {"state_min_eigenvalue", min_eigenvalue(rho, w.tol)},
               {"state_ppt", ppt},
               {"ppt_entangled", detected && ppt}};
  return make_record("detect", std::move(inputs), std::move(outputs), {}, std::nullopt);
}

Json cmd_errata() {
  Json appendix = Json::array();
  Json spa = Json::array();
  std::vector<std::string> ids;
  for (const Erratum& e : audit_appendix()) {
    appendix.push_back(erratum_to_json(e));
    ids.push_back(e.id);
  }
  for (const Erratum& e : spa_errata()) {
    spa.push_back(erratum_to_json(e));
    ids.push_back(e.id);
  }
  return make_record("errata", Json::object(),
                     Json{{"appendix", std::move(appendix)}, {"spa", std::move(spa)}},
                     std::move(ids), std::nullopt);
}

}  // namespace

const char* tool_version() { return EWCONES_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Circulant entanglement witnesses from SO(3) rotations", "ewcones"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1, 1);

  WitnessArgs witness;
  SeedArgs seed;
  GeometryArgs geometry;
  std::string state_path;

  CLI::App* classify = app.add_subcommand("classify", "Cone membership and decomposability");
  add_witness_options(classify, witness);
  add_seed_options(classify, seed);

  CLI::App* spa = app.add_subcommand("spa", "Structural physical approximation");
  add_witness_options(spa, witness);

  CLI::App* geom = app.add_subcommand("geometry", "Cone point clouds");
  geom->add_option("--cone", geometry.cone, "I, II or both")
      ->check(CLI::IsMember({"I", "II", "both"}))
      ->capture_default_str();
  geom->add_option("--resolution", geometry.resolution, "Generators and samples per generator")
      ->check(CLI::Range(2, 2048))
      ->capture_default_str();
  geom->add_option("--format", geometry.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  geom->add_option("--out", geometry.out, "Output file (stdout if absent)");

  CLI::App* det = app.add_subcommand("detect", "Evaluate Tr(W rho) for a 16x16 state");
  add_witness_options(det, witness);
  det->add_option("--state", state_path, "JSON file with the state")->required();

  CLI::App* errata = app.add_subcommand("errata", "Corrected published formulas");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) {
      std::uint64_t used = 0;
      out << cmd_classify(witness, seed, env, used).dump(2) << "\n";
    } else if (spa->parsed()) {
      out << cmd_spa(witness).dump(2) << "\n";
    } else if (geom->parsed()) {
      cmd_geometry(geometry, out);
    } else if (det->parsed()) {
      out << cmd_detect(witness, state_path).dump(2) << "\n";
    } else if (errata->parsed()) {
      out << cmd_errata().dump(2) << "\n";
    }
  } catch (const UsageError& e) {
    err << "ewcones: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "ewcones: I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "ewcones: validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "ewcones: validation error: malformed JSON: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace ewcones::cli
