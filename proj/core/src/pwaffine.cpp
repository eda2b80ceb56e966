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

#include "tallone/pwaffine.hpp"

#include <algorithm>

#include "tallone/error.hpp"

namespace tallone {

PiecewiseAffineFn PiecewiseAffineFn::constant(const HPolyhedron& domain, const Rat& c) {
  return affine(domain, RatVec(domain.dim, Rat(0)), c);
}

PiecewiseAffineFn PiecewiseAffineFn::affine(const HPolyhedron& domain,
                                            const RatVec& slope, const Rat& c) {
  PiecewiseAffineFn f;
  f.ambient_dim = domain.dim;
  f.domain = domain;
  f.cells.push_back(AffineCell{domain, slope, c});
  return f;
}

void validate(const PiecewiseAffineFn& f) {
  if (f.cells.empty()) fail(ErrorKind::Internal, "piecewise function with no cells");
  std::size_t dom_dim = poly_dim(f.domain);
  std::vector<PolyData> data;
  for (const AffineCell& c : f.cells) {
    PolyData pd = canonicalize(c.carrier);
    if (pd.empty) fail(ErrorKind::Internal, "empty carrier");
    if (pd.dim != dom_dim)
      fail(ErrorKind::Internal, "carrier not full-dimensional in the domain");
    if (!poly_contains(f.domain, pd.v))
      fail(ErrorKind::Internal, "carrier outside the domain");
    data.push_back(std::move(pd));
  }
  for (std::size_t i = 0; i < f.cells.size(); ++i)
    for (std::size_t j = i + 1; j < f.cells.size(); ++j) {
      HPolyhedron meet = intersect(f.cells[i].carrier, f.cells[j].carrier);
      PolyData md = canonicalize(meet);
      if (md.empty) continue;
      if (md.dim == dom_dim)
        fail(ErrorKind::Internal, "carriers overlap full-dimensionally");
      // continuity: affine data must agree on the shared face
      RatVec diff_slope = sub(f.cells[i].slope, f.cells[j].slope);
      Rat diff_const = f.cells[i].constant - f.cells[j].constant;
      RatVec pt = relint_point(meet);
      if (dot(diff_slope, pt) + diff_const != 0)
        fail(ErrorKind::Internal, "discontinuity across a shared face");
      for (const RatVec& vtx : md.v.vertices)
        if (dot(diff_slope, vtx) + diff_const != 0)
          fail(ErrorKind::Internal, "discontinuity across a shared face");
    }
  // coverage, decided by volume when the domain is bounded
  if (is_bounded(f.domain) && dom_dim == f.ambient_dim) {
    Rat total = 0;
    for (const AffineCell& c : f.cells) total += volume(c.carrier);
    if (total != volume(f.domain))
      fail(ErrorKind::Internal, "carriers do not cover the domain");
  }
}

Rat evaluate(const PiecewiseAffineFn& f, const RatVec& x) {
  for (const AffineCell& c : f.cells)
    if (c.carrier.contains(x)) return c.value(x);
  fail(ErrorKind::OutsideDomain, "evaluation point outside every cell");
}

PiecewiseAffineFn combine(const PiecewiseAffineFn& f, const PiecewiseAffineFn& g,
                          const Rat& cf, const Rat& cg) {
  if (f.ambient_dim != g.ambient_dim)
    fail(ErrorKind::DomainMismatch, "ambient dimensions differ");
  HPolyhedron dom = intersect(f.domain, g.domain);
  PolyData dd = canonicalize(dom);
  if (dd.empty) fail(ErrorKind::EmptyIntersection, "domains do not meet");
  std::size_t ddim = dd.dim;
  // The overlap must be full-dimensional relative to one of the inputs.
  if (ddim != poly_dim(f.domain) && ddim != poly_dim(g.domain))
    fail(ErrorKind::EmptyIntersection,
         "domains overlap only in lower dimension");

  PiecewiseAffineFn out;
  out.ambient_dim = f.ambient_dim;
  out.domain = dd.h;
  for (const AffineCell& a : f.cells)
    for (const AffineCell& b : g.cells) {
      HPolyhedron meet = intersect(intersect(a.carrier, b.carrier), dd.h);
      PolyData md = canonicalize(meet);
      if (md.empty || md.dim != ddim) continue;
      AffineCell cell;
      cell.carrier = md.h;
      cell.slope = add(scale(cf, a.slope), scale(cg, b.slope));
      cell.constant = cf * a.constant + cg * b.constant;
      out.cells.push_back(std::move(cell));
    }
  if (out.cells.empty())
    fail(ErrorKind::EmptyIntersection, "no full-dimensional common cells");
  return out;
}

GermResult is_integral_affine_near(const PiecewiseAffineFn& f, const RatVec& alpha,
                                   const LatticeBasis& lattice) {
  GermResult res;
  bool found = false;
  RatVec slope;
  Rat constant;
  for (const AffineCell& c : f.cells) {
    if (!c.carrier.contains(alpha)) continue;
    if (!found) {
      slope = c.slope;
      constant = c.constant;
      found = true;
      continue;
    }
    if (c.slope != slope || c.constant != constant) {
      res.status = GermStatus::NotAffineNearPoint;
      return res;
    }
  }
  if (!found) {
    res.status = GermStatus::OutsideDomain;
    return res;
  }
  res.found_slope = slope;
  res.found_constant = constant;
  // slope integral in the lattice?
  auto coords = solve(RatMatrix::from_int(lattice.generators), slope);
  bool integral = coords.has_value();
  if (integral)
    for (const Rat& c : *coords)
      if (denominator(c) != 1) { integral = false; break; }
  if (integral) {
    // also require exactness: generators * coords == slope
    RatVec back = RatMatrix::from_int(lattice.generators).apply(*coords);
    if (back != slope) integral = false;
  }
  if (!integral) {
    res.status = GermStatus::SlopeNotIntegral;
    return res;
  }
  IntVec islope(slope.size());
  for (std::size_t i = 0; i < slope.size(); ++i) islope[i] = numerator(slope[i]);
  res.status = GermStatus::Affine;
  res.germ = AffineGerm{std::move(islope), constant};
  return res;
}

bool ae_equal(const PiecewiseAffineFn& f, const PiecewiseAffineFn& g) {
  if (f.ambient_dim != g.ambient_dim)
    fail(ErrorKind::DomainMismatch, "ambient dimensions differ");
  if (!poly_equal(f.domain, g.domain))
    fail(ErrorKind::DomainMismatch, "domains differ");
  std::size_t dom_dim = poly_dim(f.domain);
  for (const AffineCell& a : f.cells)
    for (const AffineCell& b : g.cells) {
      HPolyhedron meet = intersect(a.carrier, b.carrier);
      PolyData md = canonicalize(meet);
      if (md.empty || md.dim != dom_dim) continue;
      if (a.slope != b.slope || a.constant != b.constant) return false;
    }
  return true;
}

Rat integrate(const PiecewiseAffineFn& f) {
  Rat total = 0;
  for (const AffineCell& c : f.cells) {
    FaceLattice fl = face_lattice(c.carrier);
    if (fl.poly.empty) continue;
    if (!fl.poly.v.rays.empty() || !fl.poly.v.lineality.empty())
      fail(ErrorKind::Unbounded, "integration over an unbounded cell");
    if (fl.poly.dim < f.ambient_dim) continue;
    for (const auto& simplex : triangulate(fl)) {
      // the exact integral of an affine function over a simplex is the
      // volume times the average of the vertex values
      Rat avg = 0;
      for (const RatVec& pt : simplex) avg += c.value(pt);
      avg /= Rat((long)simplex.size());
      total += simplex_volume(simplex, f.ambient_dim) * avg;
    }
  }
  return total;
}

}  // namespace tallone
