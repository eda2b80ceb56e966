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
// Finite polyhedral skeleton complexes (S, pi) with model labels, their
// structural validation, finite fibers, and the two compatibility checks
// against a Delzant set and a candidate Duistermaat-Heckman function.

#ifndef TALLONE_SKELETON_HPP
#define TALLONE_SKELETON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tallone/model.hpp"
#include "tallone/polyhedron.hpp"
#include "tallone/pwaffine.hpp"
#include "tallone/refinement.hpp"

namespace tallone {

struct AffineMap {
  IntMatrix linear;  // target_dim x source_dim, integer linear part
  RatVec offset;

  RatVec apply(const RatVec& x) const;
  std::size_t source_dim() const { return linear.cols(); }
  std::size_t target_dim() const { return linear.rows(); }
};

struct SkeletonCell {
  HPolyhedron carrier;       // bounded polytope in abstract coordinates
  AffineMap pi;              // injective on the carrier
  ComplexityOneModel label;  // base point unused (set at evaluation time)
};

// Identifies the face {x in carrier(cell) : listed inequalities tight}
// with the whole carrier of `other`; the pi images must match exactly.
struct Incidence {
  std::size_t cell = 0;
  std::vector<std::size_t> face_ineqs;  // indices into carrier(cell).ineqs
  std::size_t other = 0;
};

struct SkeletonComplex {
  std::size_t ambient_dim = 0;  // dimension of t*
  std::vector<SkeletonCell> cells;
  std::vector<Incidence> incidences;
};

struct SkeletonReport {
  bool ok = true;
  std::vector<std::string> problems;  // prefixed with the failing check
};

// Per-cell injectivity of pi, label validity/tallness/exceptionality,
// incidence consistency.  Problems are reported, not thrown.
SkeletonReport validate(const SkeletonComplex& s);

void require_valid(const SkeletonComplex& s);  // throws on the first problem

// A point of the quotient space: the minimal cell containing it and the
// point in that cell's coordinates.
struct SkeletonPoint {
  std::size_t cell = 0;
  RatVec point;      // carrier coordinates
  RatVec image;      // pi(point)

  bool operator<(const SkeletonPoint& o) const {
    if (cell != o.cell) return cell < o.cell;
    return point < o.point;
  }
  bool operator==(const SkeletonPoint& o) const = default;
};

// Canonical representative of the incidence class of (cell, x).
SkeletonPoint canonical_point(const SkeletonComplex& s, std::size_t cell,
                              const RatVec& x);

// All preimages of alpha, face-identified duplicates merged.  The label of
// an entry is the minimal cell's label, based at alpha.
std::vector<SkeletonPoint> fiber(const SkeletonComplex& s, const RatVec& alpha);

ComplexityOneModel label_at(const SkeletonComplex& s, const SkeletonPoint& pt);

struct CompatCheckpoint {
  RatVec point;
  bool pass = false;
  std::string detail;
  std::optional<AffineGerm> germ;  // rho check: the witness germ
};

struct CompatReport {
  std::vector<CompatCheckpoint> checkpoints;

  bool all_pass() const {
    for (const auto& c : checkpoints)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checkpoints)
      if (!c.pass) ++n;
    return n;
  }
};

// For every skeleton stratum piece (refined against delta's faces): the
// tangent cone of delta at the image equals the moment cone of the label.
CompatReport check_delta_compat(const SkeletonComplex& s, const HPolyhedron& delta);

// For every stratum of delta refined by rho's cells and the skeleton
// images: rho minus the sum of truncation DH functions over the fiber is
// integral affine near the checkpoint.  One truncation choice (the
// deterministic complementary circle, kappa = 1) decides compatibility.
CompatReport check_rho_compat(const SkeletonComplex& s, const HPolyhedron& delta,
                              const PiecewiseAffineFn& rho,
                              const LatticeBasis& lattice);

// The checkpoint set used by check_rho_compat, for auditability.
std::vector<RefinedPiece> rho_checkpoints(const SkeletonComplex& s,
                                          const HPolyhedron& delta,
                                          const PiecewiseAffineFn& rho);

struct BettiNumbers {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  std::size_t b2_mod2 = 0;
};

// Cellular homology of the quotient complex: b0, b1 over Q, b2 over F_2.
// Cells of dimension > 2 are rejected.
BettiNumbers betti(const SkeletonComplex& s);

}  // namespace tallone

#endif  // TALLONE_SKELETON_HPP
