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

#include "tallone/model.hpp"

#include <algorithm>

#include "tallone/error.hpp"

namespace tallone {

namespace {

// chi^* as a matrix: s in R^{h+1} maps to sum_k s_k eta_k in h*.
IntMatrix chi_star_matrix(const ComplexityOneModel& m) {
  // h x (h+1); column k is eta_k
  IntMatrix e(m.h(), m.weights.size());
  for (std::size_t k = 0; k < m.weights.size(); ++k)
    for (std::size_t i = 0; i < m.h(); ++i) e.at(i, k) = m.weights[k][i];
  return e;
}

HPolyhedron weight_cone_hrep(const std::vector<IntVec>& weights, std::size_t h) {
  VPolyhedron v;
  v.dim = h;
  for (const IntVec& w : weights)
    if (!is_zero(w)) v.rays.push_back(primitive_part(w));
  std::sort(v.rays.begin(), v.rays.end());
  v.rays.erase(std::unique(v.rays.begin(), v.rays.end()), v.rays.end());
  if (v.rays.empty()) {
    // only zero weights: the cone is the origin
    v.vertices.push_back(RatVec(h, Rat(0)));
  }
  return vh_convert(v);
}

}  // namespace

ModelReport validate(const ComplexityOneModel& m) {
  ModelReport r;
  r.shape_consistent = true;
  if (m.subtorus.ambient_rank != m.torus_rank) {
    r.shape_consistent = false;
    r.problems.push_back("subtorus ambient rank differs from torus rank");
  }
  if (m.weights.size() != m.h() + 1) {
    r.shape_consistent = false;
    r.problems.push_back("expected h+1 weights");
  }
  for (const IntVec& w : m.weights)
    if (w.size() != m.h()) {
      r.shape_consistent = false;
      r.problems.push_back("weight covector of wrong rank");
      break;
    }
  if (m.base_point.size() != m.torus_rank) {
    r.shape_consistent = false;
    r.problems.push_back("base point of wrong dimension");
  }
  if (!r.shape_consistent) return r;

  r.subtorus_primitive = is_primitive(m.subtorus);
  if (!r.subtorus_primitive)
    r.problems.push_back("subtorus lattice is not saturated (H disconnected)");

  // faithfulness: chi^* surjective as a lattice map Z^{h+1} -> h*_Z
  IntMatrix cs = chi_star_matrix(m);
  auto d = invariant_factors(cs);
  r.weights_faithful = d.size() == m.h();
  for (const Int& x : d)
    if (x != 1) r.weights_faithful = false;
  if (!r.weights_faithful)
    r.problems.push_back("weight matrix not surjective onto the weight lattice");
  return r;
}

void require_valid(const ComplexityOneModel& m) {
  ModelReport r = validate(m);
  if (r.ok()) return;
  if (!r.shape_consistent) fail(ErrorKind::InvalidModel, r.problems.front());
  if (!r.subtorus_primitive)
    fail(ErrorKind::NonPrimitiveSubtorus, r.problems.front());
  fail(ErrorKind::NonFaithfulWeights, r.problems.front());
}

namespace {

// primitive generator of the rank-one kernel of chi^*
IntVec weight_relation(const ComplexityOneModel& m) {
  LatticeBasis k = kernel_lattice(chi_star_matrix(m));
  if (k.rank() != 1)
    fail(ErrorKind::Internal, "weight relation space not one dimensional");
  return k.column(0);
}

}  // namespace

bool is_tall(const ComplexityOneModel& m) {
  require_valid(m);
  IntVec k = weight_relation(m);
  bool nonneg = true, nonpos = true;
  for (const Int& x : k) {
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  return nonneg || nonpos;
}

IntVec defining_exponents(const ComplexityOneModel& m) {
  if (!is_tall(m)) fail(ErrorKind::NotTall, "weight relation has mixed signs");
  IntVec k = weight_relation(m);
  bool nonneg = true;
  for (const Int& x : k)
    if (x < 0) nonneg = false;
  if (!nonneg)
    for (Int& x : k) x = -x;
  return k;
}

bool is_center_exceptional(const ComplexityOneModel& m) {
  require_valid(m);
  if (m.h() == 0) return false;
  for (const IntVec& w : m.weights)
    if (is_zero(w)) return false;
  return true;
}

HPolyhedron moment_cone(const ComplexityOneModel& m) {
  require_valid(m);
  std::size_t n = m.torus_rank;
  if (m.h() == 0) return HPolyhedron::whole_space(n);

  HPolyhedron hcone = weight_cone_hrep(m.weights, m.h());
  HPolyhedron out;
  out.dim = n;
  const IntMatrix& b = m.subtorus.generators;  // n x h
  for (const Constraint& c : hcone.ineqs) {
    IntVec pulled = b.apply(c.normal);  // (B a) . x >= (B a) . alpha
    if (is_zero(pulled)) continue;
    out.add_ineq(to_rat(pulled), dot(pulled, m.base_point) + c.rhs);
  }
  for (const Constraint& c : hcone.eqs) {
    IntVec pulled = b.apply(c.normal);
    out.add_eq(to_rat(pulled), dot(pulled, m.base_point) + c.rhs);
  }
  if (is_tall(m) &&
      !is_delzant_cone(out, m.base_point, LatticeBasis::standard(n)))
    fail(ErrorKind::Internal, "moment cone of a tall model must be Delzant");
  return out;
}

RatVec GLattices::t_star_part(const RatVec& coords) const {
  std::size_t n = i_torus.cols();
  RatVec out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < coords.size(); ++c)
      out[i] += Rat(gstar_basis.generators.at(i, c)) * coords[c];
  return out;
}

GLattices g_lattices(const ComplexityOneModel& m) {
  if (!is_tall(m)) fail(ErrorKind::NotTall, "g lattices need a tall model");
  std::size_t n = m.torus_rank, h = m.h(), d = n + h + 1;

  // g*_Z = {(gamma, s) : B^T gamma - E^T s = 0} inside Z^n x Z^{h+1}
  IntMatrix defining(h, d);
  const IntMatrix bt = m.subtorus.generators.transposed();  // h x n
  const IntMatrix cs = chi_star_matrix(m);                  // h x (h+1)
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < n; ++j) defining.at(i, j) = bt.at(i, j);
    for (std::size_t j = 0; j < h + 1; ++j) defining.at(i, n + j) = -cs.at(i, j);
  }
  GLattices g;
  g.gstar_basis = kernel_lattice(defining);
  if (g.gstar_basis.rank() != n + 1)
    fail(ErrorKind::Internal, "g* lattice has unexpected rank");

  // xi = (0, defining exponents) in basis coordinates
  IntVec xi_ambient(d, Int(0));
  IntVec exps = defining_exponents(m);
  for (std::size_t k = 0; k < h + 1; ++k) xi_ambient[n + k] = exps[k];
  auto coords = lattice_coordinates(g.gstar_basis, xi_ambient);
  if (!coords)
    fail(ErrorKind::Internal, "defining character not in the g* lattice");
  g.xi = *coords;

  // integer dual basis representatives: gstar^T X = I via column HNF
  {
    IntMatrix mt = g.gstar_basis.generators.transposed();  // (n+1) x d
    HnfResult hr = hnf(mt);
    // saturated basis: pivots are all 1, echelon gives [L | 0] with L
    // lower triangular unipotent
    std::size_t r = n + 1;
    RatMatrix l(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) l.at(i, j) = Rat(hr.h.at(i, j));
    auto linv = inverse(l);
    if (!linv) fail(ErrorKind::Internal, "degenerate dual basis solve");
    g.g_dual = IntMatrix(d, r);
    for (std::size_t col = 0; col < r; ++col)
      for (std::size_t i = 0; i < d; ++i) {
        Rat acc = 0;
        for (std::size_t k = 0; k < r; ++k)
          acc += Rat(hr.u.at(i, k)) * linv->at(k, col);
        if (denominator(acc) != 1)
          fail(ErrorKind::Internal, "dual basis representatives not integral");
        g.g_dual.at(i, col) = numerator(acc);
      }
    IntMatrix check = mt * g.g_dual;
    if (check != IntMatrix::identity(r))
      fail(ErrorKind::Internal, "dual basis pairing is not the identity");
  }

  // i_T in dual coordinates: <gstar_i, (v, 0)> = gamma-part of gstar_i . v
  g.i_torus = IntMatrix(n + 1, n);
  for (std::size_t i = 0; i < n + 1; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.i_torus.at(i, j) = g.gstar_basis.generators.at(j, i);
  return g;
}

IntVec complementary_circle(const ComplexityOneModel& m) {
  GLattices g = g_lattices(m);
  return solve_pairing_one(g.xi, LatticeBasis::standard(g.xi.size()));
}

RatVec SigmaSection::eval(const RatVec& x) const {
  for (const SigmaPiece& p : pieces)
    if (p.cell.contains(x)) {
      RatVec out = p.linear.apply(x);
      return add(out, p.offset);
    }
  fail(ErrorKind::OutsideDomain, "point outside the moment cone");
}

SigmaSection sigma_section(const ComplexityOneModel& m) {
  if (!is_tall(m)) fail(ErrorKind::NotTall, "sigma needs a tall model");
  std::size_t n = m.torus_rank, h = m.h(), d = n + h + 1;

  SigmaSection sec;
  sec.lattices = g_lattices(m);
  sec.cone = moment_cone(m);
  IntVec exps = defining_exponents(m);

  // left inverse of the gstar basis matrix (full column rank)
  RatMatrix gs = RatMatrix::from_int(sec.lattices.gstar_basis.generators);
  RatMatrix gt = gs.transposed();
  auto gram_inv = inverse(gt * gs);
  if (!gram_inv) fail(ErrorKind::Internal, "gstar basis degenerate");
  RatMatrix left_inv = (*gram_inv) * gt;  // (n+1) x d

  const IntMatrix bt_i = m.subtorus.generators.transposed();
  RatMatrix bt = RatMatrix::from_int(bt_i);  // h x n

  for (std::size_t k = 0; k < h + 1; ++k) {
    if (exps[k] == 0) continue;
    // the other h weights must be independent for a full-dimensional piece
    RatMatrix ek(h, h);
    {
      std::size_t col = 0;
      for (std::size_t j = 0; j < h + 1; ++j) {
        if (j == k) continue;
        for (std::size_t i = 0; i < h; ++i) ek.at(i, col) = Rat(m.weights[j][i]);
        ++col;
      }
    }
    auto ek_inv = inverse(ek);
    if (!ek_inv) continue;  // lower-dimensional piece, covered by the others

    // cell: alpha + preimage of cone(eta_j, j != k)
    std::vector<IntVec> reduced;
    for (std::size_t j = 0; j < h + 1; ++j)
      if (j != k) reduced.push_back(m.weights[j]);
    HPolyhedron hcone = weight_cone_hrep(reduced, h);
    HPolyhedron cell;
    cell.dim = n;
    const IntMatrix& b = m.subtorus.generators;
    for (const Constraint& c : hcone.ineqs) {
      IntVec pulled = b.apply(c.normal);
      if (is_zero(pulled)) continue;
      cell.add_ineq(to_rat(pulled), dot(pulled, m.base_point) + c.rhs);
    }
    for (const Constraint& c : hcone.eqs) {
      IntVec pulled = b.apply(c.normal);
      cell.add_eq(to_rat(pulled), dot(pulled, m.base_point) + c.rhs);
    }

    // s(x) = insert_k(0, ek_inv . B^T (x - alpha))
    // point(x) = (x - alpha, s(x));  coords = left_inv . point
    RatMatrix point_linear(d, n);
    for (std::size_t i = 0; i < n; ++i) point_linear.at(i, i) = 1;
    RatMatrix srows = (*ek_inv) * bt;  // h x n
    {
      std::size_t row = 0;
      for (std::size_t j = 0; j < h + 1; ++j) {
        if (j == k) continue;
        for (std::size_t c = 0; c < n; ++c)
          point_linear.at(n + j, c) = srows.at(row, c);
        ++row;
      }
    }
    SigmaPiece piece;
    piece.cell = std::move(cell);
    piece.linear = left_inv * point_linear;
    RatVec lin_alpha = piece.linear.apply(m.base_point);
    piece.offset = scale(Rat(-1), lin_alpha);
    // drop duplicate cells (identical affine pieces)
    bool dup = false;
    for (const SigmaPiece& q : sec.pieces)
      if (poly_equal(q.cell, piece.cell)) { dup = true; break; }
    if (!dup) sec.pieces.push_back(std::move(piece));
  }
  if (sec.pieces.empty())
    fail(ErrorKind::Internal, "sigma has no full-dimensional pieces");
  return sec;
}

TruncationSpec default_truncation(const ComplexityOneModel& m) {
  return TruncationSpec{complementary_circle(m), Rat(1)};
}

PiecewiseAffineFn dh_truncation(const ComplexityOneModel& m,
                                const TruncationSpec& spec) {
  if (!is_tall(m)) fail(ErrorKind::NotTall, "truncation needs a tall model");
  if (spec.kappa <= 0) fail(ErrorKind::NonPositiveKappa, "kappa must be positive");
  SigmaSection sec = sigma_section(m);
  if (spec.j.size() != sec.lattices.xi.size())
    fail(ErrorKind::InvalidModel, "complementary circle of wrong rank");
  if (dot(sec.lattices.xi, spec.j) != 1)
    fail(ErrorKind::InvalidModel,
         "complementary circle must pair to one with the defining character");

  PiecewiseAffineFn rho;
  rho.ambient_dim = m.torus_rank;
  rho.domain = sec.cone;
  for (const SigmaPiece& p : sec.pieces) {
    AffineCell cell;
    cell.carrier = p.cell;
    RatVec slope(m.torus_rank, Rat(0));
    for (std::size_t c = 0; c < m.torus_rank; ++c)
      for (std::size_t i = 0; i < spec.j.size(); ++i)
        slope[c] -= Rat(spec.j[i]) * p.linear.at(i, c);
    Rat constant = spec.kappa;
    for (std::size_t i = 0; i < spec.j.size(); ++i)
      constant -= Rat(spec.j[i]) * p.offset[i];
    cell.slope = std::move(slope);
    cell.constant = constant;
    rho.cells.push_back(std::move(cell));
  }
  return rho;
}

}  // namespace tallone
