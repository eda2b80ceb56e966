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
// Exact integer linear algebra: Hermite and Smith normal forms, saturated
// kernels, lattice saturation, basis extension and pairing solvers.  These
// are the primitives behind every lattice test in the library.

#ifndef TALLONE_LATTICE_HPP
#define TALLONE_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "tallone/matrix.hpp"

namespace tallone {

// A sublattice of Z^ambient_rank, generated by the columns of `generators`.
// Columns are always linearly independent.
struct LatticeBasis {
  std::size_t ambient_rank = 0;
  IntMatrix generators;  // ambient_rank x rank

  static LatticeBasis standard(std::size_t n) {
    return LatticeBasis{n, IntMatrix::identity(n)};
  }
  static LatticeBasis from_columns(std::size_t ambient,
                                   const std::vector<IntVec>& cols) {
    return LatticeBasis{ambient, IntMatrix::from_columns(cols, ambient)};
  }

  std::size_t rank() const { return generators.cols(); }
  IntVec column(std::size_t j) const { return generators.column(j); }

  bool operator==(const LatticeBasis& rhs) const = default;
};

struct HnfResult {
  IntMatrix h;  // m * u, column echelon
  IntMatrix u;  // unimodular
};

// Column-style Hermite normal form: h = m * u with u unimodular, pivots
// positive, each pivot strictly below the previous column's pivot, and the
// entries in a pivot row left of the pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix s;  // u * m * v, diagonal with d1 | d2 | ... >= 0
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular
};

SnfResult snf(const IntMatrix& m);

// Invariant factors (the nonzero diagonal of the Smith form).
std::vector<Int> invariant_factors(const IntMatrix& m);

// Basis of the saturated integer kernel {x in Z^cols : m x = 0}.
LatticeBasis kernel_lattice(const IntMatrix& m);

struct SaturationResult {
  LatticeBasis basis;  // primitive, same rational span
  Int index;           // index of the input lattice in its saturation
};

SaturationResult saturate(const LatticeBasis& b);

bool is_primitive(const LatticeBasis& b);

// True iff the given vectors (columns) are part of some basis of `lattice`.
// Throws VectorsNotInLattice when a column is not a lattice element.
bool extends_to_lattice_basis(const IntMatrix& vectors, const LatticeBasis& lattice);

// Solves <xi, j> = 1 with j in `lattice`; xi is a covector on the ambient
// space.  Throws NotPrimitive when gcd of xi's values on the basis is not 1.
IntVec solve_pairing_one(const IntVec& xi, const LatticeBasis& lattice);

// Primitive basis of {v in ambient : m v = 0}.
LatticeBasis equation_sublattice(const IntMatrix& m, const LatticeBasis& ambient);

// Membership of an integer (resp. rational) vector in the lattice.
bool lattice_contains(const LatticeBasis& b, const IntVec& v);

// Integer coordinates of v in the basis, if v lies in the lattice.
std::optional<IntVec> lattice_coordinates(const LatticeBasis& b, const IntVec& v);

}  // namespace tallone

#endif  // TALLONE_LATTICE_HPP
