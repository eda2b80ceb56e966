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

#include "tallone/lattice.hpp"

#include <algorithm>

#include "tallone/error.hpp"

namespace tallone {

namespace {

// floor division for arbitrary-precision integers
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

struct Xgcd {
  Int g, x, y;  // g = gcd(a,b) = a x + b y, g >= 0
};

Xgcd xgcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;  // truncated is fine for the invariant
    Int t = a - q * b;
    a = b; b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  return {a, x0, y0};
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::size_t col = 0;
  for (std::size_t row = 0; row < h.rows() && col < h.cols(); ++row) {
    // Clear row `row` right of `col` by column gcd steps.
    while (true) {
      std::size_t best = h.cols();
      for (std::size_t j = col; j < h.cols(); ++j) {
        if (h.at(row, j) == 0) continue;
        if (best == h.cols() ||
            abs(h.at(row, j)) < abs(h.at(row, best)))
          best = j;
      }
      if (best == h.cols()) break;  // row is zero from col on
      if (best != col) {
        h.swap_columns(col, best);
        u.swap_columns(col, best);
      }
      bool reduced = true;
      for (std::size_t j = col + 1; j < h.cols(); ++j) {
        if (h.at(row, j) == 0) continue;
        Int q = fdiv(h.at(row, j), h.at(row, col));
        h.add_column_multiple(j, col, -q);
        u.add_column_multiple(j, col, -q);
        if (h.at(row, j) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h.at(row, col) == 0) continue;  // no pivot in this row
    if (h.at(row, col) < 0) {
      h.negate_column(col);
      u.negate_column(col);
    }
    // Reduce entries left of the pivot into [0, pivot).
    for (std::size_t j = 0; j < col; ++j) {
      Int q = fdiv(h.at(row, j), h.at(row, col));
      if (q != 0) {
        h.add_column_multiple(j, col, -q);
        u.add_column_multiple(j, col, -q);
      }
    }
    ++col;
  }
  return {h, u};
}

SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  std::size_t n = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < n; ++t) {
    // Find a nonzero pivot in the trailing submatrix.
    std::size_t pi = s.rows(), pj = s.cols();
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (s.at(i, j) == 0) continue;
        if (pi == s.rows() || abs(s.at(i, j)) < abs(s.at(pi, pj))) {
          pi = i; pj = j;
        }
      }
    if (pi == s.rows()) break;  // all zero
    s.swap_rows(t, pi); u.swap_rows(t, pi);
    s.swap_columns(t, pj); v.swap_columns(t, pj);

    while (true) {
      bool clean = true;
      // clear column t
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = fdiv(s.at(i, t), s.at(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s.at(i, t) != 0) {
          s.swap_rows(t, i); u.swap_rows(t, i);
          clean = false;
        }
      }
      // clear row t
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = fdiv(s.at(t, j), s.at(t, t));
        s.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (s.at(t, j) != 0) {
          s.swap_columns(t, j); v.swap_columns(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the remaining block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < s.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < s.cols() && divisible; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.add_row_multiple(t, i, Int(1));
            u.add_row_multiple(t, i, Int(1));
            divisible = false;
          }
      if (divisible) break;
    }
    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {s, u, v};
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
  SnfResult r = snf(m);
  std::vector<Int> d;
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (r.s.at(i, i) != 0) d.push_back(r.s.at(i, i));
  return d;
}

namespace {

// Deterministic canonical generators: replace by the column HNF.
IntMatrix canonical_columns(const IntMatrix& gens) {
  if (gens.cols() == 0) return gens;
  IntMatrix h = hnf(gens).h;
  // drop zero columns (none expected for independent input, but be safe)
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    IntVec c = h.column(j);
    if (!is_zero(c)) cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols, gens.rows());
}

}  // namespace

LatticeBasis kernel_lattice(const IntMatrix& m) {
  SnfResult r = snf(m);
  std::size_t rk = 0;
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (r.s.at(i, i) != 0) ++rk;
  std::vector<IntVec> cols;
  for (std::size_t j = rk; j < m.cols(); ++j) cols.push_back(r.v.column(j));
  IntMatrix gens = IntMatrix::from_columns(cols, m.cols());
  return LatticeBasis{m.cols(), canonical_columns(gens)};
}

SaturationResult saturate(const LatticeBasis& b) {
  std::size_t k = b.rank();
  if (k == 0) return {b, Int(1)};
  SnfResult r = snf(b.generators);
  Int index = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r.s.at(i, i) == 0)
      fail(ErrorKind::Internal, "lattice generators not independent");
    index *= r.s.at(i, i);
  }
  auto uinv = inverse(RatMatrix::from_int(r.u));
  if (!uinv) fail(ErrorKind::Internal, "unimodular matrix not invertible");
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < k; ++j) {
    RatVec c = uinv->column(j);
    IntVec ic(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (denominator(c[i]) != 1)
        fail(ErrorKind::Internal, "inverse of unimodular matrix not integral");
      ic[i] = numerator(c[i]);
    }
    cols.push_back(std::move(ic));
  }
  IntMatrix gens = IntMatrix::from_columns(cols, b.ambient_rank);
  return {LatticeBasis{b.ambient_rank, canonical_columns(gens)}, index};
}

bool is_primitive(const LatticeBasis& b) {
  if (b.rank() == 0) return true;
  auto d = invariant_factors(b.generators);
  if (d.size() != b.rank()) return false;
  for (const Int& x : d)
    if (x != 1) return false;
  return true;
}

bool lattice_contains(const LatticeBasis& b, const IntVec& v) {
  return lattice_coordinates(b, v).has_value();
}

std::optional<IntVec> lattice_coordinates(const LatticeBasis& b, const IntVec& v) {
  auto sol = solve(RatMatrix::from_int(b.generators), to_rat(v));
  if (!sol) return std::nullopt;
  IntVec coords(sol->size());
  for (std::size_t i = 0; i < sol->size(); ++i) {
    if (denominator((*sol)[i]) != 1) return std::nullopt;
    coords[i] = numerator((*sol)[i]);
  }
  // solve() finds some solution; columns are independent so it is unique.
  return coords;
}

bool extends_to_lattice_basis(const IntMatrix& vectors, const LatticeBasis& lattice) {
  std::size_t k = vectors.cols();
  if (k == 0) return true;
  IntMatrix coords(lattice.rank(), k);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = lattice_coordinates(lattice, vectors.column(j));
    if (!c) fail(ErrorKind::VectorsNotInLattice, "column not in lattice");
    for (std::size_t i = 0; i < lattice.rank(); ++i) coords.at(i, j) = (*c)[i];
  }
  auto d = invariant_factors(coords);
  if (d.size() != k) return false;  // dependent
  for (const Int& x : d)
    if (x != 1) return false;
  return true;
}

IntVec solve_pairing_one(const IntVec& xi, const LatticeBasis& lattice) {
  std::size_t k = lattice.rank();
  std::vector<Int> vals(k);
  for (std::size_t j = 0; j < k; ++j) vals[j] = dot(xi, lattice.column(j));

  Int g = 0;
  std::vector<Int> coeff(k, Int(0));
  for (std::size_t j = 0; j < k; ++j) {
    if (vals[j] == 0) continue;
    if (g == 0) {
      g = vals[j] < 0 ? Int(-vals[j]) : vals[j];
      coeff[j] = vals[j] < 0 ? -1 : 1;
      continue;
    }
    Xgcd e = xgcd(g, vals[j]);
    for (std::size_t i = 0; i < j; ++i) coeff[i] *= e.x;
    coeff[j] = e.y;
    g = e.g;
  }
  if (g != 1)
    fail(ErrorKind::NotPrimitive,
         "pairing values have gcd " + g.str() + ", no splitting exists");
  IntVec j_out(lattice.ambient_rank, Int(0));
  for (std::size_t j = 0; j < k; ++j) {
    if (coeff[j] == 0) continue;
    IntVec col = lattice.column(j);
    for (std::size_t i = 0; i < j_out.size(); ++i) j_out[i] += coeff[j] * col[i];
  }
  return j_out;
}

LatticeBasis equation_sublattice(const IntMatrix& m, const LatticeBasis& ambient) {
  IntMatrix composed = m * ambient.generators;
  LatticeBasis k = kernel_lattice(composed);
  IntMatrix gens = ambient.generators * k.generators;
  return LatticeBasis{ambient.ambient_rank, canonical_columns(gens)};
}

}  // namespace tallone
