// Copyright 2026 The tallone Authors
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
//
// tallone: exact classification data of tall complexity-one torus actions.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 input
// error.  Output is byte-deterministic for fixed input and written only
// when complete.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tallone/error.hpp"
#include "tallone/json_io.hpp"
#include "tallone/toric_projection.hpp"

namespace {

constexpr const char* kSchemaVersion = "tallone schema 1";

using nlohmann::json;
using namespace tallone;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Output is assembled fully before any byte is written, so error paths
// never leave a partial result file.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + out_path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json embed(const std::string& serialized) { return json::parse(serialized); }

int cmd_check_polytope(const std::string& input, const std::string& out_path) {
  HPolyhedron p = parse_hpolyhedron(read_file(input));
  LatticeBasis lattice = LatticeBasis::standard(p.dim);
  json result;
  bool all = true;
  json cones = json::array();
  PolyData pd = canonicalize(p);
  bool bounded = !pd.empty && pd.v.rays.empty() && pd.v.lineality.empty();
  if (!bounded || pd.dim != p.dim) {
    all = false;
    result["reason"] = pd.empty         ? "empty polytope"
                       : !bounded       ? "unbounded input"
                                        : "not full dimensional";
  } else {
    for (const RatVec& v : pd.v.vertices) {
      HPolyhedron tc = tangent_cone(pd.h, v);
      bool ok = is_delzant_cone(tc, v, lattice);
      json jc;
      jc["vertex"] = json::array();
      for (const Rat& x : v) jc["vertex"].push_back(rat_to_string(x));
      jc["delzant"] = ok;
      cones.push_back(std::move(jc));
      if (!ok) all = false;
    }
  }
  result["delzant"] = all;
  result["vertex_cones"] = cones;
  emit(dump(result), out_path);
  return all ? 0 : 1;
}

int cmd_analyze_model(const std::string& input, const std::string& out_path) {
  ComplexityOneModel m = parse_model(read_file(input));
  json result;
  ModelReport rep = validate(m);
  result["valid"] = rep.ok();
  json problems = json::array();
  for (const std::string& p : rep.problems) problems.push_back(p);
  result["problems"] = problems;
  if (rep.ok()) {
    bool tall = is_tall(m);
    result["tall"] = tall;
    result["exceptional"] = is_center_exceptional(m);
    result["moment_cone"] = embed(to_json(moment_cone(m)));
    if (tall) {
      json xi = json::array();
      for (const Int& x : defining_exponents(m)) xi.push_back(x.str());
      result["xi"] = xi;
      json jj = json::array();
      for (const Int& x : complementary_circle(m)) jj.push_back(x.str());
      result["j"] = jj;
    }
  }
  emit(dump(result), out_path);
  return rep.ok() ? 0 : 1;
}

int cmd_truncate_dh(const std::string& input, const std::string& out_path) {
  json j = json::parse(read_file(input), nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON");
  if (!j.is_object() || !j.contains("model"))
    fail(ErrorKind::SchemaError, "expected {\"model\": ..., \"truncation\"?: ...}");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "model" && it.key() != "truncation")
      fail(ErrorKind::SchemaError, "unknown field \"" + it.key() + "\"");
  ComplexityOneModel m = parse_model(j.at("model").dump());
  TruncationSpec spec = j.contains("truncation")
                            ? parse_truncation(j.at("truncation").dump())
                            : default_truncation(m);
  PiecewiseAffineFn rho = dh_truncation(m, spec);
  emit(to_json(rho), out_path);
  return 0;
}

std::string describe_skeleton(const ComplexityOneBundle& b) {
  std::ostringstream os;
  os << "skeleton with " << b.skeleton.cells.size() << " cells\n";
  for (std::size_t i = 0; i < b.skeleton.cells.size(); ++i) {
    const SkeletonCell& c = b.skeleton.cells[i];
    PolyData pd = canonicalize(c.carrier);
    os << "  cell " << i << " (dim " << pd.dim << ", h = " << c.label.h()
       << "): image vertices";
    for (const RatVec& v : pd.v.vertices) {
      RatVec img = c.pi.apply(v);
      os << " (";
      for (std::size_t k = 0; k < img.size(); ++k)
        os << (k ? "," : "") << rat_to_string(img[k]);
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

int cmd_project(const std::string& input, const std::string& out_path,
                bool report) {
  HPolyhedron p = parse_hpolyhedron(read_file(input));
  ComplexityOneBundle b = build_projection(p, LatticeBasis::standard(p.dim));
  if (report) {
    std::ostringstream os;
    os << "projection of a " << p.dim << "-dimensional Delzant polytope\n";
    os << "tall: " << (b.tall ? "yes" : "no") << "\n";
    os << "moment image: " << to_string(b.delta) << "\n";
    os << "genus: " << b.genus << "\n";
    os << describe_skeleton(b);
    BettiNumbers bn = betti(b.skeleton);
    os << "betti: b0 = " << bn.b0 << ", b1 = " << bn.b1
       << ", b2 mod 2 = " << bn.b2_mod2 << "\n";
    emit(os.str(), out_path);
  } else {
    emit(to_json(b), out_path);
  }
  return b.tall ? 0 : 1;
}

int cmd_check_compat(const std::string& input, const std::string& out_path,
                     bool print_checkpoints) {
  json j = json::parse(read_file(input), nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON");
  if (!j.is_object() || !j.contains("skeleton") || !j.contains("delta") ||
      !j.contains("rho"))
    fail(ErrorKind::SchemaError,
         "expected {\"skeleton\": ..., \"delta\": ..., \"rho\": ...}");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "skeleton" && it.key() != "delta" && it.key() != "rho")
      fail(ErrorKind::SchemaError, "unknown field \"" + it.key() + "\"");
  SkeletonComplex s = parse_skeleton(j.at("skeleton").dump());
  HPolyhedron delta = parse_hpolyhedron(j.at("delta").dump());
  PiecewiseAffineFn rho = parse_pwaffine(j.at("rho").dump());
  LatticeBasis lattice = LatticeBasis::standard(s.ambient_dim);

  CompatReport dc = check_delta_compat(s, delta);
  CompatReport rc = check_rho_compat(s, delta, rho, lattice);
  json result;
  result["delta_compat"] = embed(to_json(dc));
  result["rho_compat"] = embed(to_json(rc));
  if (print_checkpoints) {
    json cps = json::array();
    for (const RefinedPiece& piece : rho_checkpoints(s, delta, rho)) {
      json jp;
      jp["dim"] = piece.dim;
      json rep = json::array();
      for (const Rat& x : piece.rep) rep.push_back(rat_to_string(x));
      jp["rep"] = rep;
      cps.push_back(std::move(jp));
    }
    result["checkpoints"] = cps;
  }
  emit(dump(result), out_path);
  return dc.all_pass() && rc.all_pass() ? 0 : 1;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& out_path) {
  ClassificationRecord a = parse_record(read_file(a_path));
  ClassificationRecord b = parse_record(read_file(b_path));
  RecordComparison cmp = compare_records(a, b);
  json result;
  switch (cmp.verdict) {
    case RecordVerdict::IsomorphicData: result["verdict"] = "IsomorphicData"; break;
    case RecordVerdict::NotIsomorphic: result["verdict"] = "NotIsomorphic"; break;
    case RecordVerdict::Indeterminate: result["verdict"] = "Indeterminate"; break;
  }
  result["delta_equal"] = cmp.delta_equal;
  result["dh_equal"] = cmp.rho_equal;
  result["genus_equal"] = cmp.genus_equal;
  if (cmp.paintings_equivalent)
    result["paintings_equivalent"] = *cmp.paintings_equivalent;
  result["detail"] = cmp.detail;
  emit(dump(result), out_path);
  return cmp.verdict == RecordVerdict::IsomorphicData ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification data of tall complexity-one torus actions"};
  app.set_version_flag("--version", std::string(kSchemaVersion));
  app.require_subcommand(1);

  std::string input, input_b, output;
  bool report = false, checkpoints = false;

  auto add_io = [&](CLI::App* cmd, bool second_input = false) {
    cmd->add_option("input", input, "input JSON file")->required();
    if (second_input)
      cmd->add_option("input_b", input_b, "second input JSON file")->required();
    cmd->add_option("-o,--output", output, "output file (default stdout)");
  };

  CLI::App* check_polytope =
      app.add_subcommand("check-polytope", "Delzant verdict with vertex cone diagnostics");
  add_io(check_polytope);

  CLI::App* analyze = app.add_subcommand(
      "analyze-model", "validity, tallness, defining exponents, moment cone");
  add_io(analyze);

  CLI::App* truncate = app.add_subcommand(
      "truncate-dh", "Duistermaat-Heckman function of a model truncation");
  add_io(truncate);

  CLI::App* project = app.add_subcommand(
      "project", "classification data of a projected Delzant polytope");
  add_io(project);
  project->add_flag("--report", report, "human-readable summary instead of JSON");

  CLI::App* compat = app.add_subcommand(
      "check-compat", "compatibility of a skeleton and a candidate DH function");
  add_io(compat);
  compat->add_flag("--checkpoints", checkpoints,
                   "include the finite checkpoint set in the output");

  CLI::App* compare = app.add_subcommand(
      "compare", "compare two classification records");
  add_io(compare, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check_polytope->parsed()) return cmd_check_polytope(input, output);
    if (analyze->parsed()) return cmd_analyze_model(input, output);
    if (truncate->parsed()) return cmd_truncate_dh(input, output);
    if (project->parsed()) return cmd_project(input, output, report);
    if (compat->parsed()) return cmd_check_compat(input, output, checkpoints);
    if (compare->parsed()) return cmd_compare(input, input_b, output);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::SchemaError:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
