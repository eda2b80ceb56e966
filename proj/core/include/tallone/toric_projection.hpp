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
// From a Delzant polytope and the dropped last coordinate to the full
// classification data of the induced complexity-one space: moment image,
// tallness, labeled skeleton, Duistermaat-Heckman function, genus zero.

#ifndef TALLONE_TORIC_PROJECTION_HPP
#define TALLONE_TORIC_PROJECTION_HPP

#include "tallone/model.hpp"
#include "tallone/projection.hpp"
#include "tallone/skeleton.hpp"

namespace tallone {

struct ComplexityOneBundle {
  HPolyhedron delta;
  bool tall = false;
  SkeletonComplex skeleton;
  PiecewiseAffineFn rho;
  std::size_t genus = 0;
};

// The local model of the subtorus action along a face: H is the identity
// component of the face stabilizer intersected with the first n-1
// coordinate circles, and the weights are the expansion coefficients of
// an h_Z basis in the active facet normals.  Throws DisconnectedStabilizer
// when the intersection has a nontrivial component group.
ComplexityOneModel face_model(const FaceLattice& fl, const Face& f,
                              const LatticeBasis& lattice);
ComplexityOneModel face_model(const HPolyhedron& p, const Face& f,
                              const LatticeBasis& lattice);

// The lattice test of the toric construction: the face is exceptional over
// interior points iff the projected face tangent lattice is a proper
// sublattice of Z^{n-1}.
bool face_lattice_exceptional(const FaceLattice& fl, const Face& f);

// Builds the bundle.  Throws NotDelzant on invalid input; a projection
// that is not tall is returned with tall = false and diagnostic skeleton
// and rho still populated.
ComplexityOneBundle build_projection(const HPolyhedron& p, const LatticeBasis& lattice);

}  // namespace tallone

#endif  // TALLONE_TORIC_PROJECTION_HPP
