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

#include "tallone/json_io.hpp"

#include <json.hpp>

#include "tallone/error.hpp"

namespace tallone {

namespace {

using nlohmann::json;

constexpr std::int64_t kNumberLimit = ((std::int64_t)1 << 53);

json int_to_json(const Int& v) {
  if (v < kNumberLimit && v > -kNumberLimit) return json((std::int64_t)v);
  return json(v.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::runtime_error&) {
      fail(ErrorKind::SchemaError, "malformed integer string: " + j.dump());
    }
  }
  fail(ErrorKind::SchemaError, "expected an integer, got " + j.dump());
}

json rat_to_json(const Rat& v) { return json(rat_to_string(v)); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(ErrorKind::SchemaError, e.what());
    }
  }
  fail(ErrorKind::SchemaError, "expected a rational \"p/q\", got " + j.dump());
}

json intvec_to_json(const IntVec& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

IntVec intvec_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::SchemaError, "expected an array of integers");
  IntVec out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

json ratvec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_json(x));
  return out;
}

RatVec ratvec_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::SchemaError, "expected an array of rationals");
  RatVec out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

json intmatrix_rows_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(intvec_to_json(m.row(i)));
  return out;
}

std::vector<IntVec> introws_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::SchemaError, "expected an array of rows");
  std::vector<IntVec> rows;
  for (const auto& r : j) rows.push_back(intvec_from_json(r));
  return rows;
}

void check_keys(const json& j, const std::vector<std::string>& required,
                const std::vector<std::string>& optional = {}) {
  if (!j.is_object()) fail(ErrorKind::SchemaError, "expected an object");
  for (const std::string& k : required)
    if (!j.contains(k)) fail(ErrorKind::SchemaError, "missing field \"" + k + "\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                 std::find(optional.begin(), optional.end(), k) != optional.end();
    if (!known) fail(ErrorKind::SchemaError, "unknown field \"" + k + "\"");
  }
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON");
  return j;
}

json hpoly_to_json(const HPolyhedron& p) {
  json out;
  out["dim"] = p.dim;
  json ineqs = json::array();
  for (const Constraint& c : p.ineqs)
    ineqs.push_back(json{{"a", intvec_to_json(c.normal)}, {"b", rat_to_json(c.rhs)}});
  out["ineqs"] = ineqs;
  json eqs = json::array();
  for (const Constraint& c : p.eqs)
    eqs.push_back(json{{"a", intvec_to_json(c.normal)}, {"b", rat_to_json(c.rhs)}});
  out["eqs"] = eqs;
  return out;
}

HPolyhedron hpoly_from_json(const json& j) {
  check_keys(j, {"dim", "ineqs"}, {"eqs"});
  HPolyhedron p;
  p.dim = j.at("dim").get<std::size_t>();
  auto read = [&](const json& arr, bool eq) {
    if (!arr.is_array()) fail(ErrorKind::SchemaError, "constraints must be an array");
    for (const auto& c : arr) {
      check_keys(c, {"a", "b"});
      IntVec a = intvec_from_json(c.at("a"));
      if (a.size() != p.dim)
        fail(ErrorKind::SchemaError, "constraint normal of wrong dimension");
      Rat b = rat_from_json(c.at("b"));
      if (eq) p.add_eq(to_rat(a), b);
      else p.add_ineq(to_rat(a), b);
    }
  };
  read(j.at("ineqs"), false);
  if (j.contains("eqs")) read(j.at("eqs"), true);
  return p;
}

json pwaffine_to_json(const PiecewiseAffineFn& f) {
  json out;
  out["dim"] = f.ambient_dim;
  json cells = json::array();
  for (const AffineCell& c : f.cells)
    cells.push_back(json{{"carrier", hpoly_to_json(c.carrier)},
                         {"slope", ratvec_to_json(c.slope)},
                         {"const", rat_to_json(c.constant)}});
  out["cells"] = cells;
  out["domain"] = hpoly_to_json(f.domain);
  return out;
}

PiecewiseAffineFn pwaffine_from_json(const json& j) {
  check_keys(j, {"dim", "cells"}, {"domain"});
  PiecewiseAffineFn f;
  f.ambient_dim = j.at("dim").get<std::size_t>();
  if (!j.at("cells").is_array() || j.at("cells").empty())
    fail(ErrorKind::SchemaError, "piecewise function needs at least one cell");
  for (const auto& c : j.at("cells")) {
    check_keys(c, {"carrier", "slope", "const"});
    AffineCell cell;
    cell.carrier = hpoly_from_json(c.at("carrier"));
    cell.slope = ratvec_from_json(c.at("slope"));
    cell.constant = rat_from_json(c.at("const"));
    if (cell.carrier.dim != f.ambient_dim || cell.slope.size() != f.ambient_dim)
      fail(ErrorKind::SchemaError, "cell dimension mismatch");
    f.cells.push_back(std::move(cell));
  }
  if (j.contains("domain")) {
    f.domain = hpoly_from_json(j.at("domain"));
    if (f.domain.dim != f.ambient_dim)
      fail(ErrorKind::SchemaError, "domain dimension mismatch");
  } else {
    // convex hull of the carriers
    VPolyhedron hull;
    hull.dim = f.ambient_dim;
    for (const AffineCell& c : f.cells) {
      VPolyhedron v = hv_convert(c.carrier);
      hull.vertices.insert(hull.vertices.end(), v.vertices.begin(), v.vertices.end());
      hull.rays.insert(hull.rays.end(), v.rays.begin(), v.rays.end());
      hull.lineality.insert(hull.lineality.end(), v.lineality.begin(),
                            v.lineality.end());
    }
    f.domain = vh_convert(hull);
  }
  validate(f);
  return f;
}

json model_to_json(const ComplexityOneModel& m) {
  json out;
  out["rank"] = m.torus_rank;
  json gens = json::array();
  for (std::size_t c = 0; c < m.subtorus.rank(); ++c)
    gens.push_back(intvec_to_json(m.subtorus.column(c)));
  out["subtorus"] = gens;
  json ws = json::array();
  for (const IntVec& w : m.weights) ws.push_back(intvec_to_json(w));
  out["weights"] = ws;
  out["base"] = ratvec_to_json(m.base_point);
  return out;
}

ComplexityOneModel model_from_json(const json& j) {
  check_keys(j, {"rank", "subtorus", "weights"}, {"base"});
  ComplexityOneModel m;
  m.torus_rank = j.at("rank").get<std::size_t>();
  std::vector<IntVec> gens = introws_from_json(j.at("subtorus"));
  for (const IntVec& g : gens)
    if (g.size() != m.torus_rank)
      fail(ErrorKind::SchemaError, "subtorus generator of wrong rank");
  m.subtorus = gens.empty() ? LatticeBasis{m.torus_rank, IntMatrix(m.torus_rank, 0)}
                            : LatticeBasis::from_columns(m.torus_rank, gens);
  std::vector<IntVec> ws = introws_from_json(j.at("weights"));
  for (const IntVec& w : ws)
    if (w.size() != m.subtorus.rank())
      fail(ErrorKind::SchemaError, "weight covector of wrong rank");
  m.weights = std::move(ws);
  if (j.contains("base")) {
    m.base_point = ratvec_from_json(j.at("base"));
    if (m.base_point.size() != m.torus_rank)
      fail(ErrorKind::SchemaError, "base point of wrong dimension");
  } else {
    m.base_point = RatVec(m.torus_rank, Rat(0));
  }
  return m;
}

json truncation_to_json(const TruncationSpec& t) {
  return json{{"j", intvec_to_json(t.j)}, {"kappa", rat_to_json(t.kappa)}};
}

TruncationSpec truncation_from_json(const json& j) {
  check_keys(j, {"j", "kappa"});
  TruncationSpec t;
  t.j = intvec_from_json(j.at("j"));
  t.kappa = rat_from_json(j.at("kappa"));
  return t;
}

json skeleton_to_json(const SkeletonComplex& s) {
  json out;
  out["dim"] = s.ambient_dim;
  json cells = json::array();
  for (const SkeletonCell& c : s.cells) {
    json jc;
    jc["carrier"] = hpoly_to_json(c.carrier);
    jc["pi_linear"] = intmatrix_rows_to_json(c.pi.linear);
    jc["pi_offset"] = ratvec_to_json(c.pi.offset);
    json label = model_to_json(c.label);
    label.erase("base");  // labels are stored without a base point
    jc["label"] = label;
    cells.push_back(std::move(jc));
  }
  out["cells"] = cells;
  json incs = json::array();
  for (const Incidence& inc : s.incidences) {
    json ji;
    ji["cell"] = inc.cell;
    json face = json::array();
    for (auto k : inc.face_ineqs) face.push_back(k);
    ji["face"] = face;
    ji["with"] = inc.other;
    incs.push_back(std::move(ji));
  }
  out["incidences"] = incs;
  return out;
}

SkeletonComplex skeleton_from_json(const json& j) {
  check_keys(j, {"dim", "cells"}, {"incidences"});
  SkeletonComplex s;
  s.ambient_dim = j.at("dim").get<std::size_t>();
  if (!j.at("cells").is_array())
    fail(ErrorKind::SchemaError, "cells must be an array");
  for (const auto& jc : j.at("cells")) {
    check_keys(jc, {"carrier", "pi_linear", "pi_offset", "label"});
    SkeletonCell c;
    c.carrier = hpoly_from_json(jc.at("carrier"));
    std::vector<IntVec> rows = introws_from_json(jc.at("pi_linear"));
    if (rows.size() != s.ambient_dim)
      fail(ErrorKind::SchemaError, "pi_linear must have one row per ambient dim");
    c.pi.linear = IntMatrix::from_rows(rows, c.carrier.dim);
    c.pi.offset = ratvec_from_json(jc.at("pi_offset"));
    if (c.pi.offset.size() != s.ambient_dim)
      fail(ErrorKind::SchemaError, "pi_offset of wrong dimension");
    c.label = model_from_json(jc.at("label"));
    if (c.label.torus_rank != s.ambient_dim)
      fail(ErrorKind::SchemaError, "label torus rank mismatch");
    s.cells.push_back(std::move(c));
  }
  if (j.contains("incidences")) {
    for (const auto& ji : j.at("incidences")) {
      check_keys(ji, {"cell", "face", "with"});
      Incidence inc;
      inc.cell = ji.at("cell").get<std::size_t>();
      for (const auto& k : ji.at("face")) inc.face_ineqs.push_back(k.get<std::size_t>());
      inc.other = ji.at("with").get<std::size_t>();
      if (inc.cell >= s.cells.size() || inc.other >= s.cells.size())
        fail(ErrorKind::SchemaError, "incidence cell index out of range");
      s.incidences.push_back(std::move(inc));
    }
  }
  return s;
}

json painting_to_json(const PaintingData& p) {
  json out;
  out["genus"] = p.genus;
  out["h1_map"] = intmatrix_rows_to_json(p.h1_map);
  if (p.degree) out["degree"] = int_to_json(*p.degree);
  return out;
}

PaintingData painting_from_json(const json& j) {
  check_keys(j, {"genus"}, {"h1_map", "degree"});
  PaintingData p;
  p.genus = j.at("genus").get<std::size_t>();
  if (j.contains("h1_map")) {
    std::vector<IntVec> rows = introws_from_json(j.at("h1_map"));
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    p.h1_map = IntMatrix::from_rows(rows, cols);
  }
  if (j.contains("degree")) p.degree = int_from_json(j.at("degree"));
  return p;
}

json record_to_json(const ClassificationRecord& r) {
  json out;
  out["delta"] = hpoly_to_json(r.delta);
  out["rho"] = pwaffine_to_json(r.rho);
  out["genus"] = r.genus;
  out["skeleton"] = skeleton_to_json(r.skeleton);
  out["painting"] = painting_to_json(r.painting);
  return out;
}

ClassificationRecord record_from_json(const json& j) {
  check_keys(j, {"delta", "rho", "genus", "skeleton", "painting"});
  ClassificationRecord r;
  r.delta = hpoly_from_json(j.at("delta"));
  r.rho = pwaffine_from_json(j.at("rho"));
  r.genus = j.at("genus").get<std::size_t>();
  r.skeleton = skeleton_from_json(j.at("skeleton"));
  r.painting = painting_from_json(j.at("painting"));
  return r;
}

json bundle_to_json(const ComplexityOneBundle& b) {
  json out;
  out["delta"] = hpoly_to_json(b.delta);
  out["tall"] = b.tall;
  out["skeleton"] = skeleton_to_json(b.skeleton);
  out["rho"] = pwaffine_to_json(b.rho);
  out["genus"] = b.genus;
  return out;
}

ComplexityOneBundle bundle_from_json(const json& j) {
  check_keys(j, {"delta", "tall", "skeleton", "rho", "genus"});
  ComplexityOneBundle b;
  b.delta = hpoly_from_json(j.at("delta"));
  b.tall = j.at("tall").get<bool>();
  b.skeleton = skeleton_from_json(j.at("skeleton"));
  b.rho = pwaffine_from_json(j.at("rho"));
  b.genus = j.at("genus").get<std::size_t>();
  return b;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const HPolyhedron& p) { return dump(hpoly_to_json(p)); }
std::string to_json(const PiecewiseAffineFn& f) { return dump(pwaffine_to_json(f)); }
std::string to_json(const ComplexityOneModel& m) { return dump(model_to_json(m)); }
std::string to_json(const TruncationSpec& t) { return dump(truncation_to_json(t)); }
std::string to_json(const SkeletonComplex& s) { return dump(skeleton_to_json(s)); }
std::string to_json(const PaintingData& p) { return dump(painting_to_json(p)); }
std::string to_json(const ClassificationRecord& r) { return dump(record_to_json(r)); }
std::string to_json(const ComplexityOneBundle& b) { return dump(bundle_to_json(b)); }

std::string to_json(const CompatReport& r) {
  json out;
  out["all_pass"] = r.all_pass();
  json cps = json::array();
  for (const CompatCheckpoint& c : r.checkpoints) {
    json jc;
    jc["point"] = ratvec_to_json(c.point);
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    if (c.germ) {
      jc["germ"] = json{{"slope", intvec_to_json(c.germ->slope)},
                        {"const", rat_to_json(c.germ->constant)}};
    }
    cps.push_back(std::move(jc));
  }
  out["checkpoints"] = cps;
  return dump(out);
}

std::string to_json(const BettiNumbers& b) {
  return dump(json{{"b0", b.b0}, {"b1", b.b1}, {"b2_mod2", b.b2_mod2}});
}

HPolyhedron parse_hpolyhedron(const std::string& text) {
  return hpoly_from_json(parse_text(text));
}
PiecewiseAffineFn parse_pwaffine(const std::string& text) {
  return pwaffine_from_json(parse_text(text));
}
ComplexityOneModel parse_model(const std::string& text) {
  return model_from_json(parse_text(text));
}
TruncationSpec parse_truncation(const std::string& text) {
  return truncation_from_json(parse_text(text));
}
SkeletonComplex parse_skeleton(const std::string& text) {
  return skeleton_from_json(parse_text(text));
}
PaintingData parse_painting(const std::string& text) {
  return painting_from_json(parse_text(text));
}
ClassificationRecord parse_record(const std::string& text) {
  return record_from_json(parse_text(text));
}
ComplexityOneBundle parse_bundle(const std::string& text) {
  return bundle_from_json(parse_text(text));
}

}  // namespace tallone
