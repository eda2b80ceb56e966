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

#ifndef TALLONE_PROJECTION_HPP
#define TALLONE_PROJECTION_HPP

#include "tallone/polyhedron.hpp"
#include "tallone/pwaffine.hpp"

namespace tallone {

// Coordinate projection dropping the last coordinate of a bounded polytope.
// The ceiling (floor) faces realize the fiberwise maximum (minimum) of the
// last coordinate: the closed facets whose outward normal has positive
// (negative) last coordinate.  fiber_length is the exact 1-dimensional
// Lebesgue measure of the fiber, a continuous piecewise affine function on
// the common refinement of the projected upper and lower envelopes.
struct ProjectionResult {
  HPolyhedron image;
  std::vector<Face> ceiling;
  std::vector<Face> floor;
  PiecewiseAffineFn fiber_length;
  // the face lattice of the input, reused by callers
  FaceLattice lattice;
  // indices into lattice.poly.h.ineqs for ceiling / floor facets
  std::vector<std::size_t> ceiling_ineqs;
  std::vector<std::size_t> floor_ineqs;
};

ProjectionResult project_drop_last(const HPolyhedron& p);

// The union of closed ceiling facets meets the union of closed floor
// facets; projections are tall exactly when this is false.
bool ceiling_meets_floor(const ProjectionResult& pr);

RatVec project_point(const RatVec& x);  // drops the last coordinate

HPolyhedron project_face(const FaceLattice& fl, const Face& f);

}  // namespace tallone

#endif  // TALLONE_PROJECTION_HPP
