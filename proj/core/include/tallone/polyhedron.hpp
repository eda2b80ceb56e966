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
// Exact rational convex polyhedra.  Representation conversion is the
// classic double description method run on the homogenization; everything
// downstream (faces, tangent cones, Delzant tests, volumes) is exact.

#ifndef TALLONE_POLYHEDRON_HPP
#define TALLONE_POLYHEDRON_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tallone/lattice.hpp"
#include "tallone/matrix.hpp"

namespace tallone {

// normal . x >= rhs (or == rhs for equalities); normal is integer primitive.
struct Constraint {
  IntVec normal;
  Rat rhs;

  bool operator==(const Constraint& rhs_c) const = default;
};

Constraint make_constraint(const RatVec& normal, const Rat& rhs);

struct HPolyhedron {
  std::size_t dim = 0;
  std::vector<Constraint> ineqs;
  std::vector<Constraint> eqs;

  static HPolyhedron whole_space(std::size_t n) { return HPolyhedron{n, {}, {}}; }
  static HPolyhedron box(const RatVec& lo, const RatVec& hi);

  void add_ineq(const RatVec& normal, const Rat& rhs);
  void add_eq(const RatVec& normal, const Rat& rhs);

  bool contains(const RatVec& x) const;
  bool recession_contains(const RatVec& r) const;  // a.r >= 0, e.r == 0

  bool operator==(const HPolyhedron& rhs) const = default;
};

struct VPolyhedron {
  std::size_t dim = 0;
  std::vector<RatVec> vertices;
  std::vector<IntVec> rays;       // primitive
  std::vector<IntVec> lineality;  // lattice basis, canonical

  bool empty() const { return vertices.empty() && rays.empty() && lineality.empty(); }
  bool is_cone_at_origin() const { return vertices.empty() && !empty(); }
};

// Representation conversion (exact, double description).  Scale limit per
// design: dimensions above 8 are rejected with DimensionTooLarge.
VPolyhedron hv_convert(const HPolyhedron& p);
HPolyhedron vh_convert(const VPolyhedron& v);

// Both representations plus the irredundant H-form, computed once.
struct PolyData {
  HPolyhedron h;  // irredundant, implied equalities separated, canonical order
  VPolyhedron v;
  bool empty = false;
  std::size_t dim = 0;  // dimension of the set (0 for empty)
};

PolyData canonicalize(const HPolyhedron& p);

bool is_empty(const HPolyhedron& p);
bool is_bounded(const HPolyhedron& p);
std::size_t poly_dim(const HPolyhedron& p);
RatVec relint_point(const HPolyhedron& p);  // requires nonempty

// Set equality / containment via generator membership.
bool poly_contains(const HPolyhedron& outer, const VPolyhedron& inner);
bool poly_equal(const HPolyhedron& a, const HPolyhedron& b);

HPolyhedron intersect(const HPolyhedron& a, const HPolyhedron& b);
HPolyhedron translate(const HPolyhedron& p, const RatVec& offset);

struct Face {
  std::vector<std::size_t> active_inequalities;  // indices into PolyData.h.ineqs
  std::size_t dim = 0;
  RatVec relint_point;
  // bookkeeping used by triangulation, projections and incidence tests
  std::vector<std::size_t> vertex_indices;
  std::vector<std::size_t> ray_indices;
};

struct FaceLattice {
  PolyData poly;
  std::vector<Face> faces;  // sorted by (dim, generator set), includes p itself

  // indices of faces of dimension d
  std::vector<std::size_t> of_dim(std::size_t d) const;
  // face containment via generator sets
  bool face_subset(std::size_t small, std::size_t big) const;
};

FaceLattice face_lattice(const HPolyhedron& p);

// Cone of p at x: inequalities active at x, apex retained.
HPolyhedron tangent_cone(const HPolyhedron& p, const RatVec& x);

// True iff c = apex + A(R+^k x R^{n-k}) with A carrying Z^n onto `lattice`:
// the primitive ray generators together with a basis of the saturated
// lineality lattice extend to a basis, and the cone is simplicial and
// full dimensional.
bool is_delzant_cone(const HPolyhedron& c, const RatVec& apex,
                     const LatticeBasis& lattice);

// Every vertex tangent cone is Delzant.  Unbounded or lower-dimensional
// inputs are not Delzant polytopes.
bool is_delzant_polytope(const HPolyhedron& p, const LatticeBasis& lattice);

// Set equality of two affine cones; ApexMismatch when their apex sets are
// disjoint, NotACone when an input has no apex point.
bool cone_equal(const HPolyhedron& c1, const HPolyhedron& c2);

// Exact volume w.r.t. lattice-normalized Lebesgue measure, by a pulling
// triangulation from the face lattice.  Lower-dimensional sets have
// volume zero; unbounded input throws.
Rat volume(const HPolyhedron& p);

// Simplices (as vertex lists) of a pulling triangulation of the polytope.
std::vector<std::vector<RatVec>> triangulate(const FaceLattice& fl);

// Volume of a full-dimensional simplex given as dim+1 points.
Rat simplex_volume(const std::vector<RatVec>& pts, std::size_t dim);

std::string to_string(const HPolyhedron& p);  // debugging aid

}  // namespace tallone

#endif  // TALLONE_POLYHEDRON_HPP
