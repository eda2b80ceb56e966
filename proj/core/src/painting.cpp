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

#include "tallone/painting.hpp"

#include <sstream>

#include "tallone/error.hpp"

namespace tallone {

namespace {

std::size_t max_cell_dim(const SkeletonComplex& s) {
  std::size_t d = 0;
  for (const SkeletonCell& c : s.cells) d = std::max(d, poly_dim(c.carrier));
  return d;
}

std::string betti_string(const BettiNumbers& b) {
  std::ostringstream os;
  os << "(b0,b1,b2) = (" << b.b0 << "," << b.b1 << "," << b.b2_mod2 << ")";
  return os.str();
}

}  // namespace

std::string to_string(const PaintingInvariant& inv) {
  switch (inv.kind) {
    case PaintingInvariant::Kind::TrivialClass: return "trivial";
    case PaintingInvariant::Kind::LoopGcd: return "loop-gcd " + inv.value.str();
    case PaintingInvariant::Kind::SphereDegree: return "degree " + inv.value.str();
  }
  return "?";
}

PaintingInvariant painting_invariant(const SkeletonComplex& s,
                                     const PaintingData& p) {
  BettiNumbers b = betti(s);
  bool loop = b.b0 == 1 && b.b1 == 1 && b.b2_mod2 == 0 && max_cell_dim(s) <= 1;
  bool sphere = b.b0 == 1 && b.b1 == 0 && b.b2_mod2 == 1;

  if (loop && p.genus == 0)
    return PaintingInvariant{PaintingInvariant::Kind::TrivialClass, Int(0)};
  if (loop && p.genus == 1) {
    if (p.h1_map.rows() != 2 || p.h1_map.cols() != 1)
      fail(ErrorKind::SchemaError,
           "genus-1 loop painting needs a 2x1 h1_map");
    Int g = gcd(p.h1_map.at(0, 0), p.h1_map.at(1, 0));
    if (g < 0) g = -g;
    return PaintingInvariant{PaintingInvariant::Kind::LoopGcd, g};
  }
  if (sphere && p.genus == 0) {
    if (!p.degree)
      fail(ErrorKind::SchemaError, "sphere-like painting needs a degree");
    return PaintingInvariant{PaintingInvariant::Kind::SphereDegree, *p.degree};
  }
  fail(ErrorKind::UnsupportedTopology,
       "unsupported skeleton/genus: " + betti_string(b) + ", genus " +
           std::to_string(p.genus));
}

bool equivalent(const SkeletonComplex& s1, const PaintingData& p1,
                const SkeletonComplex& s2, const PaintingData& p2) {
  BettiNumbers b1 = betti(s1), b2 = betti(s2);
  if (b1.b0 != b2.b0 || b1.b1 != b2.b1 || b1.b2_mod2 != b2.b2_mod2)
    fail(ErrorKind::SkeletonMismatch,
         "skeleton homology differs: " + betti_string(b1) + " vs " +
             betti_string(b2));
  if (p1.genus != p2.genus)
    fail(ErrorKind::SkeletonMismatch, "painting genera differ");
  return painting_invariant(s1, p1) == painting_invariant(s2, p2);
}

RecordComparison compare_records(const ClassificationRecord& a,
                                 const ClassificationRecord& b) {
  RecordComparison cmp;
  std::ostringstream detail;

  cmp.delta_equal = a.delta.dim == b.delta.dim && poly_equal(a.delta, b.delta);
  detail << "delta " << (cmp.delta_equal ? "equal" : "different");

  if (cmp.delta_equal) {
    try {
      cmp.rho_equal = ae_equal(a.rho, b.rho);
    } catch (const Error&) {
      cmp.rho_equal = false;
    }
  } else {
    cmp.rho_equal = false;
  }
  detail << "; dh " << (cmp.rho_equal ? "equal" : "different");

  cmp.genus_equal = a.genus == b.genus;
  detail << "; genus " << (cmp.genus_equal ? "equal" : "different");

  bool unsupported = false;
  try {
    cmp.paintings_equivalent =
        equivalent(a.skeleton, a.painting, b.skeleton, b.painting);
    detail << "; paintings "
           << (*cmp.paintings_equivalent ? "equivalent" : "inequivalent");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SkeletonMismatch) {
      cmp.paintings_equivalent = false;
      detail << "; paintings inequivalent (skeletons differ)";
    } else {
      unsupported = true;
      detail << "; paintings undecided (" << e.what() << ")";
    }
  }

  bool rest = cmp.delta_equal && cmp.rho_equal && cmp.genus_equal;
  if (unsupported) {
    cmp.verdict = rest ? RecordVerdict::Indeterminate : RecordVerdict::NotIsomorphic;
  } else {
    cmp.verdict = rest && *cmp.paintings_equivalent
                      ? RecordVerdict::IsomorphicData
                      : RecordVerdict::NotIsomorphic;
  }
  cmp.detail = detail.str();
  return cmp;
}

}  // namespace tallone
