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

#include "tallone/toric_projection.hpp"

#include <algorithm>
#include <map>

#include "tallone/error.hpp"

namespace tallone {

namespace {

// Primitive normal rows cutting out the linear span of the given vectors.
std::vector<IntVec> span_equations(const std::vector<RatVec>& vectors,
                                   std::size_t dim) {
  if (vectors.empty()) {
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim, Int(0));
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    return rows;
  }
  RatMatrix m = RatMatrix::from_rows(vectors, dim);
  std::vector<IntVec> rows;
  for (const RatVec& w : nullspace(m)) rows.push_back(primitive_of_rational(w));
  return rows;
}

// Lattice points of the linear span of `vectors`, saturated.
LatticeBasis span_lattice(const std::vector<RatVec>& vectors, std::size_t dim) {
  std::vector<IntVec> rows = span_equations(vectors, dim);
  if (rows.empty()) return LatticeBasis::standard(dim);
  return equation_sublattice(IntMatrix::from_rows(rows, dim),
                             LatticeBasis::standard(dim));
}

std::vector<RatVec> face_directions(const FaceLattice& fl, const Face& f) {
  std::vector<RatVec> dirs;
  const auto& verts = fl.poly.v.vertices;
  for (std::size_t k = 1; k < f.vertex_indices.size(); ++k)
    dirs.push_back(
        sub(verts[f.vertex_indices[k]], verts[f.vertex_indices[0]]));
  return dirs;
}

}  // namespace

ComplexityOneModel face_model(const FaceLattice& fl, const Face& f,
                              const LatticeBasis& lattice) {
  std::size_t n = fl.poly.h.dim;
  if (lattice.ambient_rank != n || lattice.rank() != n)
    fail(ErrorKind::Internal, "face_model expects a full-rank lattice");

  // active facet normals
  std::vector<IntVec> normals;
  for (auto idx : f.active_inequalities)
    normals.push_back(fl.poly.h.ineqs[idx].normal);
  std::size_t c = normals.size();

  // stabilizer algebra lattice: span(normals) cap Z^n
  std::vector<RatVec> normal_dirs;
  for (const IntVec& u : normals) normal_dirs.push_back(to_rat(u));
  LatticeBasis hx = span_lattice(normal_dirs, n);

  // component group of H_x cap T is Z/d with d the gcd of the last
  // coordinates of the stabilizer lattice
  Int d = 0;
  for (std::size_t j = 0; j < hx.rank(); ++j)
    d = gcd(d, hx.generators.at(n - 1, j));
  if (d < 0) d = -d;
  if (d > 1)
    fail(ErrorKind::DisconnectedStabilizer,
         "face stabilizer meets the subtorus in " + d.str() + " components");

  // h = h_x cap t as a lattice in the first n-1 coordinates
  std::vector<IntVec> cut_rows = span_equations(normal_dirs, n);
  IntVec last(n, Int(0));
  last[n - 1] = 1;
  cut_rows.push_back(last);
  LatticeBasis h_full = equation_sublattice(
      IntMatrix::from_rows(cut_rows, n), LatticeBasis::standard(n));
  std::size_t h = h_full.rank();
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < h; ++j) {
    IntVec col = h_full.column(j);
    col.pop_back();  // last coordinate is zero
    cols.push_back(std::move(col));
  }
  LatticeBasis subtorus =
      cols.empty() ? LatticeBasis{n - 1, IntMatrix(n - 1, 0)}
                   : LatticeBasis::from_columns(n - 1, cols);

  // weights: expansion of the h_Z basis in the normals, integer for
  // Delzant input
  std::vector<IntVec> weights(c, IntVec(h, Int(0)));
  if (c > 0 && h > 0) {
    RatMatrix u_cols(n, c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t i = 0; i < n; ++i) u_cols.at(i, j) = Rat(normals[j][i]);
    for (std::size_t bcol = 0; bcol < h; ++bcol) {
      auto coeff = solve(u_cols, to_rat(h_full.column(bcol)));
      if (!coeff)
        fail(ErrorKind::Internal, "stabilizer basis outside the normal span");
      for (std::size_t k = 0; k < c; ++k) {
        if (denominator((*coeff)[k]) != 1)
          fail(ErrorKind::Internal,
               "non-integer weight on a Delzant face model");
        weights[k][bcol] = numerator((*coeff)[k]);
      }
    }
  }
  while (weights.size() < h + 1) weights.push_back(IntVec(h, Int(0)));

  ComplexityOneModel m;
  m.torus_rank = n - 1;
  m.subtorus = subtorus;
  m.weights = std::move(weights);
  m.base_point = RatVec(n - 1, Rat(0));
  return m;
}

ComplexityOneModel face_model(const HPolyhedron& p, const Face& f,
                              const LatticeBasis& lattice) {
  return face_model(face_lattice(p), f, lattice);
}

bool face_lattice_exceptional(const FaceLattice& fl, const Face& f) {
  std::size_t n = fl.poly.h.dim;
  LatticeBasis tf = span_lattice(face_directions(fl, f), n);
  // project away the last coordinate and test surjectivity onto Z^{n-1}
  IntMatrix proj(n - 1, tf.rank());
  for (std::size_t j = 0; j < tf.rank(); ++j)
    for (std::size_t i = 0; i + 1 < n; ++i)
      proj.at(i, j) = tf.generators.at(i, j);
  auto d = invariant_factors(proj);
  if (d.size() != n - 1) return true;
  for (const Int& x : d)
    if (x != 1) return true;
  return false;
}

ComplexityOneBundle build_projection(const HPolyhedron& p,
                                     const LatticeBasis& lattice) {
  if (!is_delzant_polytope(p, lattice))
    fail(ErrorKind::NotDelzant, "input is not a Delzant polytope");
  std::size_t n = p.dim;

  ProjectionResult pr = project_drop_last(p);
  ComplexityOneBundle bundle;
  bundle.delta = pr.image;
  bundle.rho = pr.fiber_length;
  bundle.genus = 0;
  bundle.tall = !ceiling_meets_floor(pr);

  const FaceLattice& fl = pr.lattice;
  PolyData image_data = canonicalize(pr.image);

  // A face qualifies when no facet hyperplane of delta contains its
  // projection (relint inside the interior) and the projected tangent
  // lattice is a proper sublattice of Z^{n-1}.
  std::vector<bool> qualifying(fl.faces.size(), false);
  for (std::size_t fi = 0; fi < fl.faces.size(); ++fi) {
    const Face& f = fl.faces[fi];
    if (f.dim == n) continue;  // the polytope itself never qualifies
    bool interior = true;
    for (const Constraint& con : image_data.h.ineqs) {
      bool contained = true;
      for (auto vi : f.vertex_indices) {
        RatVec img = project_point(fl.poly.v.vertices[vi]);
        if (dot(con.normal, img) != con.rhs) { contained = false; break; }
      }
      if (contained) { interior = false; break; }
    }
    if (!interior) continue;
    qualifying[fi] = face_lattice_exceptional(fl, f);
  }

  // cells: all faces of qualifying faces (the closure of the exceptional set)
  std::vector<bool> in_skeleton(fl.faces.size(), false);
  for (std::size_t fi = 0; fi < fl.faces.size(); ++fi) {
    if (!qualifying[fi]) continue;
    for (std::size_t gi = 0; gi < fl.faces.size(); ++gi)
      if (fl.face_subset(gi, fi)) in_skeleton[gi] = true;
  }

  SkeletonComplex skel;
  skel.ambient_dim = n - 1;
  std::map<std::size_t, std::size_t> cell_index;  // face -> cell position
  for (std::size_t fi = 0; fi < fl.faces.size(); ++fi) {
    if (!in_skeleton[fi]) continue;
    SkeletonCell cell;
    cell.carrier = project_face(fl, fl.faces[fi]);
    cell.pi = AffineMap{IntMatrix::identity(n - 1), RatVec(n - 1, Rat(0))};
    cell.label = face_model(fl, fl.faces[fi], lattice);
    cell_index[fi] = skel.cells.size();
    skel.cells.push_back(std::move(cell));
  }

  // incidences: covering pairs in the face order, faces matched by image
  for (auto [fi, ci] : cell_index)
    for (auto [gi, cj] : cell_index) {
      if (fi == gi) continue;
      const Face& small = fl.faces[gi];
      const Face& big = fl.faces[fi];
      if (small.dim + 1 != big.dim || !fl.face_subset(gi, fi)) continue;
      // the projected small face is a face of the projected big carrier;
      // record the carrier inequalities tight on it
      const HPolyhedron& carrier = skel.cells[ci].carrier;
      Incidence inc;
      inc.cell = ci;
      inc.other = cj;
      for (std::size_t k = 0; k < carrier.ineqs.size(); ++k) {
        const Constraint& con = carrier.ineqs[k];
        bool tight = true;
        for (auto vi : small.vertex_indices) {
          RatVec img = project_point(fl.poly.v.vertices[vi]);
          if (dot(con.normal, img) != con.rhs) { tight = false; break; }
        }
        if (tight) inc.face_ineqs.push_back(k);
      }
      skel.incidences.push_back(std::move(inc));
    }
  bundle.skeleton = std::move(skel);
  return bundle;
}

}  // namespace tallone
