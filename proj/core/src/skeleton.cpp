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

#include "tallone/skeleton.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "tallone/error.hpp"

namespace tallone {

RatVec AffineMap::apply(const RatVec& x) const {
  RatVec out = RatMatrix::from_int(linear).apply(x);
  return add(out, offset);
}

namespace {

std::size_t thread_cap() {
  const char* env = std::getenv("TALLONE_THREADS");
  if (env) {
    long v = std::atol(env);
    if (v >= 1) return (std::size_t)v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(4u, hw);
}

// Deterministic parallel map: results indexed, exceptions rethrown.
template <typename Fn>
void run_parallel(std::size_t count, Fn&& fn) {
  std::size_t threads = std::min(thread_cap(), count == 0 ? (std::size_t)1 : count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < count; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Cached per-cell geometry for fiber solves and image refinements.
struct CellGeom {
  PolyData carrier;
  RatVec base;                 // a vertex of the carrier
  std::vector<RatVec> dirs;    // affine-hull direction basis
  RatMatrix pi_dirs;           // pi.linear applied to dirs, columns
  HPolyhedron image;           // pi(carrier), canonical
  RatVec image_base;           // pi(base)
};

struct ComplexGeom {
  std::vector<CellGeom> cells;
};

CellGeom build_cell_geom(const SkeletonCell& c) {
  CellGeom g;
  g.carrier = canonicalize(c.carrier);
  if (g.carrier.empty) fail(ErrorKind::Internal, "empty skeleton carrier");
  if (!g.carrier.v.rays.empty() || !g.carrier.v.lineality.empty())
    fail(ErrorKind::Internal, "skeleton carrier must be bounded");
  g.base = g.carrier.v.vertices.front();
  // direction basis from vertex differences
  std::vector<RatVec> all;
  for (std::size_t i = 1; i < g.carrier.v.vertices.size(); ++i)
    all.push_back(sub(g.carrier.v.vertices[i], g.base));
  if (!all.empty()) {
    std::vector<RatVec> basis;
    for (const RatVec& row : all) {
      basis.push_back(row);
      if (rank(RatMatrix::from_rows(basis, c.carrier.dim)) != basis.size())
        basis.pop_back();
    }
    g.dirs = std::move(basis);
  }
  RatMatrix lin = RatMatrix::from_int(c.pi.linear);
  std::vector<RatVec> cols;
  for (const RatVec& d : g.dirs) cols.push_back(lin.apply(d));
  g.pi_dirs = RatMatrix::from_columns(cols, c.pi.target_dim());
  g.image_base = c.pi.apply(g.base);
  {
    VPolyhedron v;
    v.dim = c.pi.target_dim();
    for (const RatVec& x : g.carrier.v.vertices) v.vertices.push_back(c.pi.apply(x));
    std::sort(v.vertices.begin(), v.vertices.end());
    v.vertices.erase(std::unique(v.vertices.begin(), v.vertices.end()),
                     v.vertices.end());
    g.image = vh_convert(v);
  }
  return g;
}

ComplexGeom build_geom(const SkeletonComplex& s) {
  ComplexGeom g;
  for (const SkeletonCell& c : s.cells) g.cells.push_back(build_cell_geom(c));
  return g;
}

// Unique carrier point with pi(x) = target, if it exists.
std::optional<RatVec> preimage_in_cell(const SkeletonCell& c, const CellGeom& g,
                                       const RatVec& target) {
  RatVec rhs = sub(target, g.image_base);
  auto u = solve(g.pi_dirs, rhs);
  if (!u) return std::nullopt;
  RatVec x = g.base;
  for (std::size_t i = 0; i < g.dirs.size(); ++i)
    x = add(x, scale((*u)[i], g.dirs[i]));
  if (!g.carrier.h.contains(x)) return std::nullopt;
  if (c.pi.apply(x) != target) return std::nullopt;
  return x;
}

SkeletonPoint canonical_point_impl(const SkeletonComplex& s, const ComplexGeom& g,
                                   std::size_t cell, const RatVec& x) {
  SkeletonPoint cur{cell, x, s.cells[cell].pi.apply(x)};
  std::set<std::pair<std::size_t, RatVec>> seen;
  bool moved = true;
  while (moved) {
    moved = false;
    if (!seen.insert({cur.cell, cur.point}).second) break;
    SkeletonPoint best = cur;
    std::size_t best_dim = g.cells[cur.cell].carrier.dim;
    for (const Incidence& inc : s.incidences) {
      if (inc.cell != cur.cell) continue;
      bool on_face = true;
      for (auto idx : inc.face_ineqs) {
        const Constraint& con = s.cells[inc.cell].carrier.ineqs[idx];
        if (dot(con.normal, cur.point) != con.rhs) { on_face = false; break; }
      }
      if (!on_face) continue;
      auto y = preimage_in_cell(s.cells[inc.other], g.cells[inc.other], cur.image);
      if (!y) continue;
      std::size_t other_dim = g.cells[inc.other].carrier.dim;
      SkeletonPoint cand{inc.other, *y, cur.image};
      if (other_dim < best_dim ||
          (other_dim == best_dim && cand < best)) {
        best = cand;
        best_dim = other_dim;
      }
    }
    if (!(best == cur)) {
      cur = best;
      moved = true;
    }
  }
  return cur;
}

}  // namespace

SkeletonReport validate(const SkeletonComplex& s) {
  SkeletonReport rep;
  auto problem = [&](const std::string& p) {
    rep.ok = false;
    rep.problems.push_back(p);
  };
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const SkeletonCell& c = s.cells[i];
    std::ostringstream tag;
    tag << "cell " << i << ": ";
    if (c.pi.target_dim() != s.ambient_dim || c.pi.source_dim() != c.carrier.dim) {
      problem(tag.str() + "NonInjectivePi: pi has wrong shape");
      continue;
    }
    PolyData pd = canonicalize(c.carrier);
    if (pd.empty) {
      problem(tag.str() + "NonInjectivePi: empty carrier");
      continue;
    }
    if (!pd.v.rays.empty() || !pd.v.lineality.empty()) {
      problem(tag.str() + "NonInjectivePi: carrier unbounded");
      continue;
    }
    // injectivity of pi on the carrier direction space
    std::vector<RatVec> dirs;
    RatMatrix lin = RatMatrix::from_int(c.pi.linear);
    for (std::size_t k = 1; k < pd.v.vertices.size(); ++k)
      dirs.push_back(lin.apply(sub(pd.v.vertices[k], pd.v.vertices[0])));
    if (!dirs.empty() &&
        rank(RatMatrix::from_rows(dirs, s.ambient_dim)) != pd.dim)
      problem(tag.str() + "NonInjectivePi: pi collapses the carrier");

    ComplexityOneModel label = c.label;
    label.base_point = RatVec(s.ambient_dim, Rat(0));
    if (label.torus_rank != s.ambient_dim) {
      problem(tag.str() + "LabelNotTall: label torus rank mismatch");
      continue;
    }
    ModelReport mr = validate(label);
    if (!mr.ok()) {
      problem(tag.str() + "LabelNotTall: invalid label (" + mr.problems.front() + ")");
      continue;
    }
    if (!is_tall(label)) {
      problem(tag.str() + "LabelNotTall: label model is short");
      continue;
    }
    if (!is_center_exceptional(label))
      problem(tag.str() + "LabelNotExceptional: label has a zero weight or h=0");
  }
  if (!rep.ok) return rep;

  for (std::size_t k = 0; k < s.incidences.size(); ++k) {
    const Incidence& inc = s.incidences[k];
    std::ostringstream tag;
    tag << "incidence " << k << ": ";
    if (inc.cell >= s.cells.size() || inc.other >= s.cells.size()) {
      problem(tag.str() + "IncidenceMismatch: cell index out of range");
      continue;
    }
    const SkeletonCell& big = s.cells[inc.cell];
    HPolyhedron face = big.carrier;
    bool bad_idx = false;
    for (auto idx : inc.face_ineqs) {
      if (idx >= big.carrier.ineqs.size()) { bad_idx = true; break; }
      const Constraint& con = big.carrier.ineqs[idx];
      face.add_eq(to_rat(con.normal), con.rhs);
    }
    if (bad_idx) {
      problem(tag.str() + "IncidenceMismatch: inequality index out of range");
      continue;
    }
    PolyData fd = canonicalize(face);
    if (fd.empty) {
      problem(tag.str() + "IncidenceMismatch: empty face");
      continue;
    }
    // pi images must match exactly
    VPolyhedron fimg;
    fimg.dim = s.ambient_dim;
    for (const RatVec& x : fd.v.vertices) fimg.vertices.push_back(big.pi.apply(x));
    std::sort(fimg.vertices.begin(), fimg.vertices.end());
    fimg.vertices.erase(std::unique(fimg.vertices.begin(), fimg.vertices.end()),
                        fimg.vertices.end());
    HPolyhedron fimg_h = vh_convert(fimg);

    const SkeletonCell& other = s.cells[inc.other];
    PolyData od = canonicalize(other.carrier);
    VPolyhedron oimg;
    oimg.dim = s.ambient_dim;
    for (const RatVec& x : od.v.vertices) oimg.vertices.push_back(other.pi.apply(x));
    std::sort(oimg.vertices.begin(), oimg.vertices.end());
    oimg.vertices.erase(std::unique(oimg.vertices.begin(), oimg.vertices.end()),
                        oimg.vertices.end());
    if (!poly_equal(fimg_h, vh_convert(oimg)))
      problem(tag.str() + "IncidenceMismatch: pi images of identified faces differ");
  }
  return rep;
}

void require_valid(const SkeletonComplex& s) {
  SkeletonReport rep = validate(s);
  if (rep.ok) return;
  const std::string& p = rep.problems.front();
  ErrorKind kind = ErrorKind::Internal;
  if (p.find("NonInjectivePi") != std::string::npos) kind = ErrorKind::NonInjectivePi;
  else if (p.find("LabelNotTall") != std::string::npos) kind = ErrorKind::LabelNotTall;
  else if (p.find("LabelNotExceptional") != std::string::npos)
    kind = ErrorKind::LabelNotExceptional;
  else if (p.find("IncidenceMismatch") != std::string::npos)
    kind = ErrorKind::IncidenceMismatch;
  fail(kind, p);
}

SkeletonPoint canonical_point(const SkeletonComplex& s, std::size_t cell,
                              const RatVec& x) {
  ComplexGeom g = build_geom(s);
  return canonical_point_impl(s, g, cell, x);
}

namespace {

std::vector<SkeletonPoint> fiber_impl(const SkeletonComplex& s,
                                      const ComplexGeom& g, const RatVec& alpha) {
  std::vector<SkeletonPoint> out;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    auto x = preimage_in_cell(s.cells[i], g.cells[i], alpha);
    if (!x) continue;
    out.push_back(canonical_point_impl(s, g, i, *x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<SkeletonPoint> fiber(const SkeletonComplex& s, const RatVec& alpha) {
  ComplexGeom g = build_geom(s);
  return fiber_impl(s, g, alpha);
}

ComplexityOneModel label_at(const SkeletonComplex& s, const SkeletonPoint& pt) {
  return s.cells[pt.cell].label.with_base(pt.image);
}

CompatReport check_delta_compat(const SkeletonComplex& s, const HPolyhedron& delta) {
  require_valid(s);
  CompatReport rep;
  PolyData dd = canonicalize(delta);
  if (dd.empty) fail(ErrorKind::Internal, "empty delta");
  std::vector<Hyperplane> cuts = cut_hyperplanes(dd.h);
  ComplexGeom g = build_geom(s);

  std::set<SkeletonPoint> visited;
  std::vector<std::pair<SkeletonPoint, RatVec>> points;
  for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
    for (const RefinedPiece& piece : refine_region(g.cells[ci].image, cuts)) {
      auto x = preimage_in_cell(s.cells[ci], g.cells[ci], piece.rep);
      if (!x) fail(ErrorKind::Internal, "image point without carrier preimage");
      SkeletonPoint cp = canonical_point_impl(s, g, ci, *x);
      if (visited.insert(cp).second) points.push_back({cp, piece.rep});
    }
  }
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<CompatCheckpoint> entries(points.size());
  run_parallel(points.size(), [&](std::size_t i) {
    const SkeletonPoint& cp = points[i].first;
    const RatVec& t = points[i].second;
    CompatCheckpoint entry;
    entry.point = t;
    std::ostringstream detail;
    detail << "cell " << cp.cell;
    if (!dd.h.contains(t)) {
      entry.pass = false;
      detail << ": skeleton image outside delta";
    } else {
      ComplexityOneModel model = s.cells[cp.cell].label.with_base(t);
      HPolyhedron tc = tangent_cone(dd.h, t);
      HPolyhedron mc = moment_cone(model);
      entry.pass = cone_equal(tc, mc);
      if (!entry.pass) detail << ": tangent cone differs from the moment cone";
    }
    entry.detail = detail.str();
    entries[i] = std::move(entry);
  });
  rep.checkpoints = std::move(entries);
  return rep;
}

std::vector<RefinedPiece> rho_checkpoints(const SkeletonComplex& s,
                                          const HPolyhedron& delta,
                                          const PiecewiseAffineFn& rho) {
  PolyData dd = canonicalize(delta);
  if (dd.empty) fail(ErrorKind::Internal, "empty delta");
  std::vector<Hyperplane> cuts = cut_hyperplanes(dd.h);
  for (const AffineCell& c : rho.cells) add_cuts(cuts, cut_hyperplanes(c.carrier));
  ComplexGeom g = build_geom(s);
  for (const CellGeom& cg : g.cells) add_cuts(cuts, cut_hyperplanes(cg.image));
  return refine_region(dd.h, cuts);
}

CompatReport check_rho_compat(const SkeletonComplex& s, const HPolyhedron& delta,
                              const PiecewiseAffineFn& rho,
                              const LatticeBasis& lattice) {
  require_valid(s);
  PolyData dd = canonicalize(delta);
  if (dd.empty) fail(ErrorKind::Internal, "empty delta");
  if (!poly_contains(rho.domain, dd.v))
    fail(ErrorKind::DomainMismatch, "rho is not defined on all of delta");

  std::vector<RefinedPiece> pieces = rho_checkpoints(s, delta, rho);
  ComplexGeom g = build_geom(s);

  std::vector<CompatCheckpoint> entries(pieces.size());
  run_parallel(pieces.size(), [&](std::size_t i) {
    const RatVec& alpha = pieces[i].rep;
    CompatCheckpoint entry;
    entry.point = alpha;
    std::ostringstream detail;
    try {
      std::vector<SkeletonPoint> fib = fiber_impl(s, g, alpha);
      detail << "fiber size " << fib.size();
      PiecewiseAffineFn f = rho;
      for (const SkeletonPoint& pt : fib) {
        ComplexityOneModel model = label_at(s, pt);
        PiecewiseAffineFn rho_s = dh_truncation(model, default_truncation(model));
        f = combine(f, rho_s, Rat(1), Rat(-1));
      }
      GermResult germ = is_integral_affine_near(f, alpha, lattice);
      switch (germ.status) {
        case GermStatus::Affine:
          entry.pass = true;
          entry.germ = germ.germ;
          break;
        case GermStatus::NotAffineNearPoint:
          entry.pass = false;
          detail << "; NotAffineNearPoint";
          break;
        case GermStatus::SlopeNotIntegral:
          entry.pass = false;
          detail << "; SlopeNotIntegral";
          break;
        case GermStatus::OutsideDomain:
          entry.pass = false;
          detail << "; checkpoint outside the function domain";
          break;
      }
    } catch (const Error& e) {
      entry.pass = false;
      detail << "; " << e.what();
    }
    entry.detail = detail.str();
    entries[i] = std::move(entry);
  });
  CompatReport rep;
  rep.checkpoints = std::move(entries);
  return rep;
}

namespace {

std::size_t gf2_rank(std::vector<std::vector<unsigned char>> m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] ^= m[r][j];
    }
    ++r;
  }
  return r;
}

// Cyclic (counterclockwise in local coordinates) vertex order of a convex
// polygon given in arbitrary ambient dimension.
std::vector<RatVec> polygon_cycle(const std::vector<RatVec>& pts) {
  // local 2d coordinates
  RatVec d1, d2;
  for (std::size_t i = 1; i < pts.size() && d2.empty(); ++i) {
    RatVec d = sub(pts[i], pts[0]);
    if (is_zero(d)) continue;
    if (d1.empty()) { d1 = d; continue; }
    std::vector<RatVec> rows{d1, d};
    if (rank(RatMatrix::from_rows(rows, d.size())) == 2) d2 = d;
  }
  if (d2.empty()) fail(ErrorKind::Internal, "polygon is degenerate");
  RatMatrix basis = RatMatrix::from_columns({d1, d2}, d1.size());
  std::vector<std::pair<RatVec, RatVec>> local;  // (2d coords, original)
  for (const RatVec& p : pts) {
    auto uv = solve(basis, sub(p, pts[0]));
    if (!uv) fail(ErrorKind::Internal, "polygon vertex outside its plane");
    local.push_back({*uv, p});
  }
  std::sort(local.begin(), local.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto cross = [](const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  // monotone chain; all points are extreme, so the hull is the cycle
  std::vector<std::pair<RatVec, RatVec>> lower, upper;
  for (const auto& p : local) {
    while (lower.size() >= 2 &&
           cross(lower[lower.size() - 2].first, lower.back().first, p.first) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = local.rbegin(); it != local.rend(); ++it) {
    while (upper.size() >= 2 &&
           cross(upper[upper.size() - 2].first, upper.back().first, it->first) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  std::vector<RatVec> cycle;
  for (std::size_t i = 0; i + 1 < lower.size(); ++i) cycle.push_back(lower[i].second);
  for (std::size_t i = 0; i + 1 < upper.size(); ++i) cycle.push_back(upper[i].second);
  return cycle;
}

}  // namespace

BettiNumbers betti(const SkeletonComplex& s) {
  require_valid(s);
  ComplexGeom g = build_geom(s);
  for (const CellGeom& cg : g.cells)
    if (cg.carrier.dim > 2)
      fail(ErrorKind::DimensionTooLarge, "betti needs cells of dimension <= 2");

  // quotient complex elements keyed by the canonical class of a relative
  // interior point
  std::map<SkeletonPoint, std::size_t> ids[3];
  struct FaceRef {
    std::size_t cell;
    std::size_t face;  // index into the cell's face lattice
  };
  std::vector<FaceRef> reps[3];
  std::vector<FaceLattice> lattices;
  for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
    lattices.push_back(face_lattice(s.cells[ci].carrier));
    const FaceLattice& fl = lattices.back();
    for (std::size_t fi = 0; fi < fl.faces.size(); ++fi) {
      const Face& f = fl.faces[fi];
      SkeletonPoint cp = canonical_point_impl(s, g, ci, f.relint_point);
      if (f.dim > 2) fail(ErrorKind::DimensionTooLarge, "cell of dimension > 2");
      if (!ids[f.dim].count(cp)) {
        ids[f.dim][cp] = reps[f.dim].size();
        reps[f.dim].push_back({ci, fi});
      }
    }
  }
  std::size_t nv = reps[0].size(), ne = reps[1].size(), nf = reps[2].size();

  auto vertex_class = [&](std::size_t ci, const RatVec& x) {
    SkeletonPoint cp = canonical_point_impl(s, g, ci, x);
    auto it = ids[0].find(cp);
    if (it == ids[0].end()) fail(ErrorKind::Internal, "unregistered vertex class");
    return it->second;
  };

  // oriented boundary of the 1-cells: head - tail by lex order of pi images
  RatMatrix d1(nv, ne);
  struct EdgeInfo {
    std::size_t head, tail;
    RatVec head_img, tail_img;
  };
  std::vector<EdgeInfo> edges(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    const FaceRef& fr = reps[1][e];
    const FaceLattice& fl = lattices[fr.cell];
    const Face& f = fl.faces[fr.face];
    if (f.vertex_indices.size() != 2)
      fail(ErrorKind::Internal, "1-face without two endpoints");
    RatVec a = fl.poly.v.vertices[f.vertex_indices[0]];
    RatVec b = fl.poly.v.vertices[f.vertex_indices[1]];
    RatVec ia = s.cells[fr.cell].pi.apply(a);
    RatVec ib = s.cells[fr.cell].pi.apply(b);
    if (ib < ia) { std::swap(a, b); std::swap(ia, ib); }
    EdgeInfo info;
    info.tail = vertex_class(fr.cell, a);
    info.head = vertex_class(fr.cell, b);
    info.tail_img = ia;
    info.head_img = ib;
    if (info.head != info.tail) {
      d1.at(info.head, e) += 1;
      d1.at(info.tail, e) -= 1;
    }
    edges[e] = std::move(info);
  }

  // oriented boundary of the 2-cells by walking each polygon
  RatMatrix d2(ne, nf);
  for (std::size_t fcl = 0; fcl < nf; ++fcl) {
    const FaceRef& fr = reps[2][fcl];
    const FaceLattice& fl = lattices[fr.cell];
    const Face& f = fl.faces[fr.face];
    std::vector<RatVec> pts;
    for (auto vi : f.vertex_indices) pts.push_back(fl.poly.v.vertices[vi]);
    std::vector<RatVec> cycle = polygon_cycle(pts);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const RatVec& p = cycle[i];
      const RatVec& q = cycle[(i + 1) % cycle.size()];
      // locate the carrier's edge face with these endpoints
      RatVec mid = scale(Rat(1, 2), add(p, q));
      SkeletonPoint cp = canonical_point_impl(s, g, fr.cell, mid);
      auto it = ids[1].find(cp);
      if (it == ids[1].end()) fail(ErrorKind::Internal, "unregistered edge class");
      std::size_t e = it->second;
      RatVec ip = s.cells[fr.cell].pi.apply(p);
      RatVec iq = s.cells[fr.cell].pi.apply(q);
      // compare traversal direction with the canonical edge direction
      Rat sign = 0;
      if (edges[e].head == edges[e].tail) {
        // loop edge: compare pi directions componentwise
        RatVec canon = sub(edges[e].head_img, edges[e].tail_img);
        RatVec trav = sub(iq, ip);
        for (std::size_t k = 0; k < canon.size(); ++k) {
          if (canon[k] == 0 && trav[k] == 0) continue;
          sign = (canon[k] > 0) == (trav[k] > 0) ? Rat(1) : Rat(-1);
          break;
        }
      } else {
        std::size_t head_cls = vertex_class(fr.cell, q);
        sign = head_cls == edges[e].head ? Rat(1) : Rat(-1);
      }
      d2.at(e, fcl) += sign;
    }
  }

  std::size_t rank_d1 = rank(d1);
  std::size_t rank_d2_q = rank(d2);
  std::vector<std::vector<unsigned char>> d2_mod2(ne,
                                                  std::vector<unsigned char>(nf, 0));
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < nf; ++j) {
      Rat v = d2.at(i, j);
      Int num = numerator(v);
      d2_mod2[i][j] = (unsigned char)((num % 2 != 0) ? 1 : 0);
    }
  std::size_t rank_d2_f2 = gf2_rank(std::move(d2_mod2));

  BettiNumbers b;
  b.b0 = nv - rank_d1;
  b.b1 = (ne - rank_d1) - rank_d2_q;
  b.b2_mod2 = nf - rank_d2_f2;
  return b;
}

}  // namespace tallone
