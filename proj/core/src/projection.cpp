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

#include "tallone/projection.hpp"

#include <algorithm>

#include "tallone/error.hpp"

namespace tallone {

RatVec project_point(const RatVec& x) { return RatVec(x.begin(), x.end() - 1); }

HPolyhedron project_face(const FaceLattice& fl, const Face& f) {
  VPolyhedron v;
  v.dim = fl.poly.h.dim - 1;
  std::vector<RatVec> pts;
  for (auto idx : f.vertex_indices)
    pts.push_back(project_point(fl.poly.v.vertices[idx]));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  v.vertices = std::move(pts);
  return vh_convert(v);
}

ProjectionResult project_drop_last(const HPolyhedron& p) {
  ProjectionResult pr;
  pr.lattice = face_lattice(p);
  const PolyData& pd = pr.lattice.poly;
  if (pd.empty) fail(ErrorKind::Internal, "projection of empty polytope");
  if (!pd.v.rays.empty() || !pd.v.lineality.empty())
    fail(ErrorKind::Unbounded, "projection needs a bounded polytope");
  std::size_t n = p.dim;

  // image = convex hull of projected vertices
  {
    VPolyhedron v;
    v.dim = n - 1;
    std::vector<RatVec> pts;
    for (const RatVec& x : pd.v.vertices) pts.push_back(project_point(x));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    v.vertices = std::move(pts);
    pr.image = vh_convert(v);
  }

  // Lower-dimensional polytopes inside a slanted hyperplane have
  // degenerate fibers; fiber_length is identically zero then.
  if (pd.dim < n) {
    pr.fiber_length = PiecewiseAffineFn::constant(pr.image, Rat(0));
    return pr;
  }

  for (std::size_t i = 0; i < pd.h.ineqs.size(); ++i) {
    const Int& last = pd.h.ineqs[i].normal[n - 1];
    if (last < 0) pr.ceiling_ineqs.push_back(i);
    if (last > 0) pr.floor_ineqs.push_back(i);
  }
  auto facet_face = [&](std::size_t ineq_idx) -> const Face& {
    for (const Face& f : pr.lattice.faces) {
      if (f.dim != n - 1) continue;
      if (std::find(f.active_inequalities.begin(), f.active_inequalities.end(),
                    ineq_idx) != f.active_inequalities.end())
        return f;
    }
    fail(ErrorKind::Internal, "irredundant inequality without a facet");
  };
  for (auto i : pr.ceiling_ineqs) pr.ceiling.push_back(facet_face(i));
  for (auto i : pr.floor_ineqs) pr.floor.push_back(facet_face(i));

  // height of the facet over its projection: x_n = (b - a'.beta) / a_n
  auto height = [&](std::size_t ineq_idx) {
    const Constraint& c = pd.h.ineqs[ineq_idx];
    Rat an(c.normal[n - 1]);
    RatVec slope(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) slope[k] = Rat(-c.normal[k]) / an;
    Rat constant = c.rhs / an;
    return std::make_pair(slope, constant);
  };

  PiecewiseAffineFn fn;
  fn.ambient_dim = n - 1;
  fn.domain = pr.image;
  for (std::size_t ci = 0; ci < pr.ceiling.size(); ++ci) {
    HPolyhedron up = project_face(pr.lattice, pr.ceiling[ci]);
    auto [us, uc] = height(pr.ceiling_ineqs[ci]);
    for (std::size_t fi = 0; fi < pr.floor.size(); ++fi) {
      HPolyhedron lo = project_face(pr.lattice, pr.floor[fi]);
      auto [ls, lc] = height(pr.floor_ineqs[fi]);
      PolyData meet = canonicalize(intersect(up, lo));
      if (meet.empty || meet.dim != n - 1) continue;
      AffineCell cell;
      cell.carrier = meet.h;
      cell.slope = sub(us, ls);
      cell.constant = uc - lc;
      fn.cells.push_back(std::move(cell));
    }
  }
  if (fn.cells.empty())
    fail(ErrorKind::Internal, "projection produced no full-dimensional cells");
  pr.fiber_length = std::move(fn);
  return pr;
}

bool ceiling_meets_floor(const ProjectionResult& pr) {
  for (const Face& c : pr.ceiling)
    for (const Face& f : pr.floor) {
      std::vector<std::size_t> common;
      std::set_intersection(c.vertex_indices.begin(), c.vertex_indices.end(),
                            f.vertex_indices.begin(), f.vertex_indices.end(),
                            std::back_inserter(common));
      if (!common.empty()) return true;
    }
  return false;
}

}  // namespace tallone
