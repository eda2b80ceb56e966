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
// Continuous piecewise affine functions on polyhedral complexes, exact.
// Cells are closed; the value at a shared face is the common value of the
// incident cells, so every operation is well defined almost everywhere and
// on boundaries by continuity.

#ifndef TALLONE_PWAFFINE_HPP
#define TALLONE_PWAFFINE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tallone/polyhedron.hpp"

namespace tallone {

struct AffineCell {
  HPolyhedron carrier;
  RatVec slope;
  Rat constant;

  Rat value(const RatVec& x) const { return dot(slope, x) + constant; }
};

struct PiecewiseAffineFn {
  std::size_t ambient_dim = 0;
  std::vector<AffineCell> cells;
  HPolyhedron domain;  // convex union of the carriers

  static PiecewiseAffineFn constant(const HPolyhedron& domain, const Rat& c);
  static PiecewiseAffineFn affine(const HPolyhedron& domain, const RatVec& slope,
                                  const Rat& c);
};

// Checks the structural invariants: carriers inside the domain with
// pairwise disjoint interiors, exact continuity across shared faces, and
// (for bounded domains) exact coverage of the domain.
void validate(const PiecewiseAffineFn& f);

Rat evaluate(const PiecewiseAffineFn& f, const RatVec& x);

// cf*f + cg*g on the common refinement, restricted to the intersection of
// the domains.  The domains must overlap full-dimensionally relative to
// the intersection's affine hull, or one must contain the other.
PiecewiseAffineFn combine(const PiecewiseAffineFn& f, const PiecewiseAffineFn& g,
                          const Rat& cf, const Rat& cg);

struct AffineGerm {
  IntVec slope;  // integral in the given lattice
  Rat constant;
};

enum class GermStatus { Affine, NotAffineNearPoint, SlopeNotIntegral, OutsideDomain };

struct GermResult {
  GermStatus status = GermStatus::OutsideDomain;
  std::optional<AffineGerm> germ;      // set when status == Affine
  std::optional<RatVec> found_slope;   // the common slope when one exists
  std::optional<Rat> found_constant;
};

// Succeeds iff every cell incident to alpha carries the same affine data
// and the common slope lies in `lattice`.
GermResult is_integral_affine_near(const PiecewiseAffineFn& f, const RatVec& alpha,
                                   const LatticeBasis& lattice);

// Equality on every full-dimensional cell of the common refinement.
bool ae_equal(const PiecewiseAffineFn& f, const PiecewiseAffineFn& g);

// Exact integral over the (bounded) domain.
Rat integrate(const PiecewiseAffineFn& f);

}  // namespace tallone

#endif  // TALLONE_PWAFFINE_HPP
