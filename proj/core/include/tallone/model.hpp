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
// Complexity-one local models T x_H C^{h+1} x h0: validity, tallness,
// defining exponents, the extended torus G with its lattices, complementary
// circles, the piecewise-linear section sigma, moment cones, and
// Duistermaat-Heckman functions of truncations.

#ifndef TALLONE_MODEL_HPP
#define TALLONE_MODEL_HPP

#include <string>
#include <vector>

#include "tallone/polyhedron.hpp"
#include "tallone/pwaffine.hpp"

namespace tallone {

struct ComplexityOneModel {
  std::size_t torus_rank = 0;      // rank of T
  LatticeBasis subtorus;           // h_Z: primitive columns in l-coordinates
  std::vector<IntVec> weights;     // h+1 isotropy weights, covectors on h_Z
  RatVec base_point;               // alpha in t*

  std::size_t h() const { return subtorus.rank(); }
  ComplexityOneModel with_base(const RatVec& alpha) const {
    ComplexityOneModel m = *this;
    m.base_point = alpha;
    return m;
  }
};

struct ModelReport {
  bool shape_consistent = false;
  bool subtorus_primitive = false;
  bool weights_faithful = false;
  std::vector<std::string> problems;

  bool ok() const { return shape_consistent && subtorus_primitive && weights_faithful; }
};

ModelReport validate(const ComplexityOneModel& m);

// Throws NonPrimitiveSubtorus / NonFaithfulWeights / InvalidModel.
void require_valid(const ComplexityOneModel& m);

// The kernel of the weight relation contains a nonzero nonnegative vector.
bool is_tall(const ComplexityOneModel& m);

// The unique primitive nonnegative generator xi of the weight relation.
IntVec defining_exponents(const ComplexityOneModel& m);

// The central orbit is exceptional: h >= 1 and no weight vanishes.
bool is_center_exceptional(const ComplexityOneModel& m);

// alpha + preimage of cone(eta_0..eta_h) under the restriction map; a
// Delzant cone for tall models (asserted).
HPolyhedron moment_cone(const ComplexityOneModel& m);

// Lattices of G = T x_H (S^1)^{h+1}.  Elements of g* are written in the
// coordinates of gstar_basis; elements of g are coordinate covectors, with
// g_dual holding integer representatives in Z^n x Z^{h+1} that pair to the
// identity against the basis.
struct GLattices {
  LatticeBasis gstar_basis;  // basis of g*_Z inside l* x Z^{h+1}
  IntMatrix g_dual;          // (n+h+1) x (n+1), gstar^T * g_dual = I
  IntVec xi;                 // defining character, gstar coordinates
  IntMatrix i_torus;         // (n+1) x n, cocharacter inclusion l -> g_Z

  // gamma-part of a g* element given in basis coordinates
  RatVec t_star_part(const RatVec& coords) const;
};

GLattices g_lattices(const ComplexityOneModel& m);

// Integer covector j (basis coordinates) with <xi, j> = 1; deterministic.
IntVec complementary_circle(const ComplexityOneModel& m);

struct SigmaPiece {
  HPolyhedron cell;  // full-dimensional piece of the moment cone
  RatMatrix linear;  // (n+1) x n
  RatVec offset;     // (n+1)
};

// The continuous piecewise-linear right inverse of the projection
// g* -> t*, based at alpha: sigma(alpha) = 0 and the t*-component of
// sigma(x) is x - alpha.
struct SigmaSection {
  GLattices lattices;
  std::vector<SigmaPiece> pieces;
  HPolyhedron cone;

  RatVec eval(const RatVec& x) const;  // gstar coordinates
};

SigmaSection sigma_section(const ComplexityOneModel& m);

struct TruncationSpec {
  IntVec j;   // complementary circle, gstar-basis coordinates
  Rat kappa;  // positive truncation height
};

TruncationSpec default_truncation(const ComplexityOneModel& m);

// Duistermaat-Heckman function of the truncation: kappa - <sigma(x), j> on
// the moment cone; value kappa at alpha, concave, piecewise affine.
PiecewiseAffineFn dh_truncation(const ComplexityOneModel& m,
                                const TruncationSpec& spec);

}  // namespace tallone

#endif  // TALLONE_MODEL_HPP
