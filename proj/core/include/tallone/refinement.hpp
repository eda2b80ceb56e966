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
// Refinement of a polyhedral region by hyperplane cuts.  The resulting
// pieces are the relatively open strata; germ data of the compatibility
// checks is constant on each piece, so one representative point per piece
// decides the pointwise conditions exactly.

#ifndef TALLONE_REFINEMENT_HPP
#define TALLONE_REFINEMENT_HPP

#include <vector>

#include "tallone/polyhedron.hpp"

namespace tallone {

struct Hyperplane {
  IntVec normal;  // primitive, first nonzero entry positive
  Rat rhs;

  bool operator==(const Hyperplane& o) const = default;
  bool operator<(const Hyperplane& o) const;
};

Hyperplane make_hyperplane(const IntVec& normal, const Rat& rhs);

// All constraint hyperplanes (inequality and equality) of the canonical
// irredundant representation.
std::vector<Hyperplane> cut_hyperplanes(const HPolyhedron& p);

void add_cuts(std::vector<Hyperplane>& cuts, const std::vector<Hyperplane>& more);

struct RefinedPiece {
  HPolyhedron closure;
  RatVec rep;  // relative interior point
  std::size_t dim = 0;
};

// Every point of the region lies in the relative interior of exactly one
// returned piece.  Pieces are ordered deterministically.
std::vector<RefinedPiece> refine_region(const HPolyhedron& region,
                                        const std::vector<Hyperplane>& cuts);

}  // namespace tallone

#endif  // TALLONE_REFINEMENT_HPP
