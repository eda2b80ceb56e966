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
// Homology-level painting invariants and the classification-record
// comparator.  Equivalence is decided on homology data: for the supported
// topologies (loop skeletons with genus 0 or 1, sphere-like skeletons with
// genus 0) this matches the classification counts exactly.

#ifndef TALLONE_PAINTING_HPP
#define TALLONE_PAINTING_HPP

#include <optional>
#include <string>

#include "tallone/pwaffine.hpp"
#include "tallone/skeleton.hpp"

namespace tallone {

struct PaintingData {
  std::size_t genus = 0;
  IntMatrix h1_map;           // from H_1(S;Z) to Z^{2g}, fixed symplectic basis
  std::optional<Int> degree;  // sphere-like case, genus 0 only
};

struct PaintingInvariant {
  enum class Kind { TrivialClass, LoopGcd, SphereDegree };
  Kind kind = Kind::TrivialClass;
  Int value = 0;

  bool operator==(const PaintingInvariant& o) const = default;
};

std::string to_string(const PaintingInvariant& inv);

// Throws UnsupportedTopology (with the betti data in the message) when the
// skeleton homotopy type is outside the supported list.
PaintingInvariant painting_invariant(const SkeletonComplex& s, const PaintingData& p);

// Equivalence at homology level; SkeletonMismatch when the skeleton
// homology types differ.
bool equivalent(const SkeletonComplex& s1, const PaintingData& p1,
                const SkeletonComplex& s2, const PaintingData& p2);

struct ClassificationRecord {
  HPolyhedron delta;
  PiecewiseAffineFn rho;
  std::size_t genus = 0;
  SkeletonComplex skeleton;
  PaintingData painting;
};

enum class RecordVerdict { IsomorphicData, NotIsomorphic, Indeterminate };

struct RecordComparison {
  RecordVerdict verdict = RecordVerdict::Indeterminate;
  bool delta_equal = false;
  bool rho_equal = false;
  bool genus_equal = false;
  std::optional<bool> paintings_equivalent;  // absent when undecidable
  std::string detail;
};

RecordComparison compare_records(const ClassificationRecord& a,
                                 const ClassificationRecord& b);

}  // namespace tallone

#endif  // TALLONE_PAINTING_HPP
