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

#include "tallone/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tallone/error.hpp"

namespace tallone {

namespace {

constexpr std::size_t kMaxDim = 8;  // documented double-description limit

IntVec scaled_row(const IntVec& normal, const Rat& rhs) {
  // (normal, -rhs) cleared to integers; used for homogenization.
  Int den = denominator(rhs);
  IntVec row(normal.size() + 1);
  for (std::size_t i = 0; i < normal.size(); ++i) row[i] = normal[i] * den;
  row[normal.size()] = -numerator(rhs);
  return primitive_part(row);
}

struct DDRow {
  IntVec a;
  bool is_eq;
};

struct DDState {
  std::size_t d;
  std::vector<IntVec> rays;       // primitive
  std::vector<IntVec> lineality;  // basis of the lineality space
  std::vector<IntVec> processed;  // rows already enforced (eqs and ineqs)
};

Int row_dot(const IntVec& a, const IntVec& v) { return dot(a, v); }

bool adjacent(const DDState& st, const IntVec& r1, const IntVec& r2) {
  std::vector<IntVec> active;
  for (const IntVec& row : st.processed)
    if (row_dot(row, r1) == 0 && row_dot(row, r2) == 0) active.push_back(row);
  if (active.empty())
    return st.d - st.lineality.size() <= 2;
  IntMatrix m = IntMatrix::from_rows(active, st.d);
  return rank(m) + st.lineality.size() + 2 == st.d;
}

void dd_process_row(DDState& st, const DDRow& row) {
  const IntVec& a = row.a;
  if (is_zero(a)) return;

  // If the row is not orthogonal to the lineality space, split one
  // lineality generator off: C = (C cap a-perp) + R l0.
  std::size_t hit = st.lineality.size();
  for (std::size_t i = 0; i < st.lineality.size(); ++i)
    if (row_dot(a, st.lineality[i]) != 0) { hit = i; break; }
  if (hit != st.lineality.size()) {
    IntVec l0 = st.lineality[hit];
    if (row_dot(a, l0) < 0)
      for (Int& x : l0) x = -x;
    Int al0 = row_dot(a, l0);
    std::vector<IntVec> new_lin;
    for (std::size_t i = 0; i < st.lineality.size(); ++i) {
      if (i == hit) continue;
      Int c = row_dot(a, st.lineality[i]);
      IntVec l(st.d);
      for (std::size_t k = 0; k < st.d; ++k)
        l[k] = al0 * st.lineality[i][k] - c * l0[k];
      new_lin.push_back(primitive_part(l));
    }
    std::vector<IntVec> new_rays;
    for (const IntVec& r : st.rays) {
      Int c = row_dot(a, r);
      IntVec rr(st.d);
      for (std::size_t k = 0; k < st.d; ++k) rr[k] = al0 * r[k] - c * l0[k];
      new_rays.push_back(primitive_part(rr));
    }
    if (!row.is_eq) new_rays.push_back(l0);
    st.lineality = std::move(new_lin);
    st.rays = std::move(new_rays);
    st.processed.push_back(a);
    return;
  }

  std::vector<std::size_t> pos, zero, neg;
  std::vector<Int> vals(st.rays.size());
  for (std::size_t i = 0; i < st.rays.size(); ++i) {
    vals[i] = row_dot(a, st.rays[i]);
    if (vals[i] > 0) pos.push_back(i);
    else if (vals[i] < 0) neg.push_back(i);
    else zero.push_back(i);
  }
  if (neg.empty() && (!row.is_eq || pos.empty())) {
    st.processed.push_back(a);
    return;  // nothing cut
  }

  std::vector<IntVec> new_rays;
  std::set<IntVec> seen;
  auto push = [&](const IntVec& r) {
    if (seen.insert(r).second) new_rays.push_back(r);
  };
  if (!row.is_eq)
    for (auto i : pos) push(st.rays[i]);
  for (auto i : zero) push(st.rays[i]);
  for (auto i : pos)
    for (auto j : neg) {
      if (!adjacent(st, st.rays[i], st.rays[j])) continue;
      IntVec w(st.d);
      for (std::size_t k = 0; k < st.d; ++k)
        w[k] = vals[i] * st.rays[j][k] - vals[j] * st.rays[i][k];
      if (is_zero(w)) continue;
      push(primitive_part(w));
    }
  st.rays = std::move(new_rays);
  st.processed.push_back(a);
}

struct DDResult {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

DDResult dd_cone(const std::vector<DDRow>& rows, std::size_t d) {
  DDState st;
  st.d = d;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e(d, Int(0));
    e[i] = 1;
    st.lineality.push_back(e);
  }
  // Equalities first keeps intermediate cone sizes small.
  for (const DDRow& r : rows)
    if (r.is_eq) dd_process_row(st, r);
  for (const DDRow& r : rows)
    if (!r.is_eq) dd_process_row(st, r);
  return {st.rays, st.lineality};
}

std::vector<IntVec> canonical_lineality(const std::vector<IntVec>& lin, std::size_t d) {
  if (lin.empty()) return {};
  IntMatrix m = IntMatrix::from_columns(lin, d);
  IntMatrix h = hnf(m).h;
  std::vector<IntVec> out;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    IntVec c = h.column(j);
    if (!is_zero(c)) out.push_back(std::move(c));
  }
  return out;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool lex_less_int(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

void sort_constraints(std::vector<Constraint>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Constraint& x, const Constraint& y) {
    if (x.normal != y.normal) return lex_less_int(x.normal, y.normal);
    return x.rhs < y.rhs;
  });
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

}  // namespace

Constraint make_constraint(const RatVec& normal, const Rat& rhs) {
  Int l = 1;
  for (const Rat& x : normal) l = lcm(l, denominator(x));
  IntVec n(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i)
    n[i] = numerator(normal[i]) * (l / denominator(normal[i]));
  Rat r = rhs * Rat(l);
  Int g = content(n);
  if (g > 1) {
    for (Int& x : n) x /= g;
    r /= Rat(g);
  }
  return Constraint{std::move(n), std::move(r)};
}

HPolyhedron HPolyhedron::box(const RatVec& lo, const RatVec& hi) {
  HPolyhedron p;
  p.dim = lo.size();
  for (std::size_t i = 0; i < lo.size(); ++i) {
    RatVec e(lo.size(), Rat(0));
    e[i] = 1;
    p.add_ineq(e, lo[i]);
    e[i] = -1;
    p.add_ineq(e, -hi[i]);
  }
  return p;
}

void HPolyhedron::add_ineq(const RatVec& normal, const Rat& rhs) {
  ineqs.push_back(make_constraint(normal, rhs));
}

void HPolyhedron::add_eq(const RatVec& normal, const Rat& rhs) {
  eqs.push_back(make_constraint(normal, rhs));
}

bool HPolyhedron::contains(const RatVec& x) const {
  for (const Constraint& c : ineqs)
    if (dot(c.normal, x) < c.rhs) return false;
  for (const Constraint& c : eqs)
    if (dot(c.normal, x) != c.rhs) return false;
  return true;
}

bool HPolyhedron::recession_contains(const RatVec& r) const {
  for (const Constraint& c : ineqs)
    if (dot(c.normal, r) < 0) return false;
  for (const Constraint& c : eqs)
    if (dot(c.normal, r) != 0) return false;
  return true;
}

VPolyhedron hv_convert(const HPolyhedron& p) {
  if (p.dim > kMaxDim)
    fail(ErrorKind::DimensionTooLarge,
         "double description limited to dimension 8");
  std::vector<DDRow> rows;
  for (const Constraint& c : p.eqs) rows.push_back({scaled_row(c.normal, c.rhs), true});
  for (const Constraint& c : p.ineqs) rows.push_back({scaled_row(c.normal, c.rhs), false});
  IntVec t_row(p.dim + 1, Int(0));
  t_row[p.dim] = 1;
  rows.push_back({t_row, false});

  DDResult dd = dd_cone(rows, p.dim + 1);

  bool homogeneous = true;
  for (const Constraint& c : p.ineqs)
    if (c.rhs != 0) homogeneous = false;
  for (const Constraint& c : p.eqs)
    if (c.rhs != 0) homogeneous = false;

  VPolyhedron v;
  v.dim = p.dim;
  bool nonempty = false;
  for (const IntVec& r : dd.rays)
    if (r[p.dim] > 0) nonempty = true;
  if (!nonempty) return v;  // empty set

  for (const IntVec& r : dd.rays) {
    if (r[p.dim] > 0) {
      RatVec pt(p.dim);
      for (std::size_t i = 0; i < p.dim; ++i) pt[i] = Rat(r[i], r[p.dim]);
      v.vertices.push_back(std::move(pt));
    } else {
      IntVec dir(r.begin(), r.end() - 1);
      if (!is_zero(dir)) v.rays.push_back(primitive_part(dir));
    }
  }
  std::vector<IntVec> lin;
  for (const IntVec& l : dd.lineality) {
    IntVec dir(l.begin(), l.end() - 1);
    if (!is_zero(dir)) lin.push_back(dir);
  }
  v.lineality = canonical_lineality(lin, p.dim);
  if (homogeneous && (!v.rays.empty() || !v.lineality.empty())) {
    // cone at origin convention: the base point 0 is implied
    std::erase_if(v.vertices, [](const RatVec& x) { return is_zero(x); });
  }

  std::sort(v.vertices.begin(), v.vertices.end(), lex_less);
  std::sort(v.rays.begin(), v.rays.end(), lex_less_int);
  return v;
}

HPolyhedron vh_convert(const VPolyhedron& v) {
  if (v.empty())
    fail(ErrorKind::Internal, "vh_convert on empty polyhedron");
  if (v.dim > kMaxDim)
    fail(ErrorKind::DimensionTooLarge,
         "double description limited to dimension 8");
  std::vector<DDRow> rows;
  auto vertex_row = [&](const RatVec& x) {
    Int l = 1;
    for (const Rat& c : x) l = lcm(l, denominator(c));
    IntVec row(v.dim + 1);
    for (std::size_t i = 0; i < v.dim; ++i)
      row[i] = numerator(x[i]) * (l / denominator(x[i]));
    row[v.dim] = l;
    return primitive_part(row);
  };
  for (const RatVec& x : v.vertices) rows.push_back({vertex_row(x), false});
  if (v.vertices.empty()) {
    IntVec row(v.dim + 1, Int(0));
    row[v.dim] = 1;  // implicit base point at the origin
    rows.push_back({row, false});
  }
  for (const IntVec& r : v.rays) {
    IntVec row(r);
    row.push_back(Int(0));
    rows.push_back({row, false});
  }
  for (const IntVec& l : v.lineality) {
    IntVec row(l);
    row.push_back(Int(0));
    rows.push_back({row, true});
  }

  DDResult dd = dd_cone(rows, v.dim + 1);
  HPolyhedron h;
  h.dim = v.dim;
  for (const IntVec& r : dd.rays) {
    IntVec a(r.begin(), r.end() - 1);
    if (is_zero(a)) continue;  // trivial b >= 0
    h.add_ineq(to_rat(a), Rat(-r[v.dim]));
  }
  for (const IntVec& l : dd.lineality) {
    IntVec a(l.begin(), l.end() - 1);
    if (is_zero(a)) continue;
    IntVec fixed = a;
    // canonical sign: first nonzero positive
    for (const Int& x : fixed) {
      if (x == 0) continue;
      if (x < 0){
        for (Int& y : fixed) y = -y;
        IntVec full = l;
        for (Int& y : full) y = -y;
        h.add_eq(to_rat(fixed), Rat(-full[v.dim]));
      } else {
        h.add_eq(to_rat(fixed), Rat(-l[v.dim]));
      }
      break;
    }
  }
  sort_constraints(h.ineqs);
  sort_constraints(h.eqs);
  return h;
}

namespace {

std::size_t vrep_dim(const VPolyhedron& v) {
  if (v.empty()) return 0;
  std::vector<RatVec> dirs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i)
    dirs.push_back(sub(v.vertices[i], v.vertices[0]));
  for (const IntVec& r : v.rays) dirs.push_back(to_rat(r));
  for (const IntVec& l : v.lineality) dirs.push_back(to_rat(l));
  if (dirs.empty()) return 0;
  return rank(RatMatrix::from_rows(dirs, v.dim));
}

}  // namespace

PolyData canonicalize(const HPolyhedron& p) {
  PolyData out;
  out.v = hv_convert(p);
  if (out.v.empty()) {
    out.empty = true;
    out.h.dim = p.dim;
    RatVec zero(p.dim, Rat(0));
    out.h.add_ineq(zero, Rat(1));  // canonical empty representation
    out.dim = 0;
    return out;
  }
  out.h = vh_convert(out.v);
  out.dim = vrep_dim(out.v);
  return out;
}

bool is_empty(const HPolyhedron& p) { return hv_convert(p).empty(); }

bool is_bounded(const HPolyhedron& p) {
  VPolyhedron v = hv_convert(p);
  return v.rays.empty() && v.lineality.empty();
}

std::size_t poly_dim(const HPolyhedron& p) { return vrep_dim(hv_convert(p)); }

RatVec relint_point(const HPolyhedron& p) {
  VPolyhedron v = hv_convert(p);
  if (v.empty()) fail(ErrorKind::Internal, "relint_point of empty polyhedron");
  RatVec x(v.dim, Rat(0));
  if (!v.vertices.empty()) {
    for (const RatVec& vert : v.vertices) x = add(x, vert);
    x = scale(Rat(1, (long)v.vertices.size()), x);
  }
  for (const IntVec& r : v.rays) x = add(x, to_rat(r));
  return x;
}

bool poly_contains(const HPolyhedron& outer, const VPolyhedron& inner) {
  for (const RatVec& v : inner.vertices)
    if (!outer.contains(v)) return false;
  if (inner.vertices.empty() && !inner.empty()) {
    RatVec origin(inner.dim, Rat(0));
    if (!outer.contains(origin)) return false;
  }
  for (const IntVec& r : inner.rays)
    if (!outer.recession_contains(to_rat(r))) return false;
  for (const IntVec& l : inner.lineality) {
    RatVec d = to_rat(l);
    if (!outer.recession_contains(d)) return false;
    for (Rat& c : d) c = -c;
    if (!outer.recession_contains(d)) return false;
  }
  return true;
}

bool poly_equal(const HPolyhedron& a, const HPolyhedron& b) {
  VPolyhedron va = hv_convert(a), vb = hv_convert(b);
  if (va.empty() || vb.empty()) return va.empty() == vb.empty();
  return poly_contains(a, vb) && poly_contains(b, va);
}

HPolyhedron intersect(const HPolyhedron& a, const HPolyhedron& b) {
  if (a.dim != b.dim) fail(ErrorKind::Internal, "dimension mismatch");
  HPolyhedron out = a;
  out.ineqs.insert(out.ineqs.end(), b.ineqs.begin(), b.ineqs.end());
  out.eqs.insert(out.eqs.end(), b.eqs.begin(), b.eqs.end());
  sort_constraints(out.ineqs);
  sort_constraints(out.eqs);
  return out;
}

HPolyhedron translate(const HPolyhedron& p, const RatVec& offset) {
  HPolyhedron out = p;
  for (Constraint& c : out.ineqs) c.rhs += dot(c.normal, offset);
  for (Constraint& c : out.eqs) c.rhs += dot(c.normal, offset);
  return out;
}

std::vector<std::size_t> FaceLattice::of_dim(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == d) out.push_back(i);
  return out;
}

bool FaceLattice::face_subset(std::size_t small, std::size_t big) const {
  const Face& s = faces[small];
  const Face& b = faces[big];
  return std::includes(b.vertex_indices.begin(), b.vertex_indices.end(),
                       s.vertex_indices.begin(), s.vertex_indices.end()) &&
         std::includes(b.ray_indices.begin(), b.ray_indices.end(),
                       s.ray_indices.begin(), s.ray_indices.end());
}

FaceLattice face_lattice(const HPolyhedron& p) {
  FaceLattice fl;
  fl.poly = canonicalize(p);
  if (fl.poly.empty) return fl;
  const VPolyhedron& v = fl.poly.v;
  const HPolyhedron& h = fl.poly.h;

  std::size_t nv = v.vertices.size(), nr = v.rays.size();
  std::size_t ng = nv + nr;

  // generator incidence per irredundant inequality
  std::vector<std::set<std::size_t>> inc(h.ineqs.size());
  for (std::size_t i = 0; i < h.ineqs.size(); ++i) {
    const Constraint& c = h.ineqs[i];
    for (std::size_t g = 0; g < nv; ++g)
      if (dot(c.normal, v.vertices[g]) == c.rhs) inc[i].insert(g);
    for (std::size_t g = 0; g < nr; ++g)
      if (dot(c.normal, v.rays[g]) == 0) inc[i].insert(nv + g);
  }

  std::set<std::size_t> full;
  for (std::size_t g = 0; g < ng; ++g) full.insert(g);

  std::set<std::set<std::size_t>> visited;
  std::vector<std::set<std::size_t>> queue{full};
  visited.insert(full);
  while (!queue.empty()) {
    std::set<std::size_t> g = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < inc.size(); ++i) {
      std::set<std::size_t> meet;
      std::set_intersection(g.begin(), g.end(), inc[i].begin(), inc[i].end(),
                            std::inserter(meet, meet.begin()));
      if (meet.empty() || meet == g) continue;
      if (visited.insert(meet).second) queue.push_back(meet);
    }
  }

  for (const auto& g : visited) {
    // Faces must contain at least one point: pure-ray sets are not faces
    // of a polyhedron with vertices.
    bool has_vertex = false;
    for (auto idx : g)
      if (idx < nv) { has_vertex = true; break; }
    if (!has_vertex && nv > 0) continue;
    Face f;
    for (auto idx : g) {
      if (idx < nv) f.vertex_indices.push_back(idx);
      else f.ray_indices.push_back(idx - nv);
    }
    for (std::size_t i = 0; i < inc.size(); ++i) {
      bool all = true;
      for (auto idx : g)
        if (!inc[i].count(idx)) { all = false; break; }
      if (all) f.active_inequalities.push_back(i);
    }
    // dimension and relative interior point
    std::vector<RatVec> dirs;
    RatVec base = f.vertex_indices.empty() ? RatVec(v.dim, Rat(0))
                                           : v.vertices[f.vertex_indices[0]];
    for (std::size_t k = 1; k < f.vertex_indices.size(); ++k)
      dirs.push_back(sub(v.vertices[f.vertex_indices[k]], base));
    for (auto r : f.ray_indices) dirs.push_back(to_rat(v.rays[r]));
    for (const IntVec& l : v.lineality) dirs.push_back(to_rat(l));
    f.dim = dirs.empty() ? 0 : rank(RatMatrix::from_rows(dirs, v.dim));
    RatVec x(v.dim, Rat(0));
    if (!f.vertex_indices.empty()) {
      for (auto idx : f.vertex_indices) x = add(x, v.vertices[idx]);
      x = scale(Rat(1, (long)f.vertex_indices.size()), x);
    }
    for (auto r : f.ray_indices) x = add(x, to_rat(v.rays[r]));
    f.relint_point = std::move(x);
    fl.faces.push_back(std::move(f));
  }

  std::sort(fl.faces.begin(), fl.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertex_indices != b.vertex_indices)
      return a.vertex_indices < b.vertex_indices;
    return a.ray_indices < b.ray_indices;
  });
  return fl;
}

HPolyhedron tangent_cone(const HPolyhedron& p, const RatVec& x) {
  PolyData pd = canonicalize(p);
  if (pd.empty || !pd.h.contains(x))
    fail(ErrorKind::PointNotInPolyhedron, "tangent cone base point outside");
  HPolyhedron cone;
  cone.dim = p.dim;
  for (const Constraint& c : pd.h.ineqs)
    if (dot(c.normal, x) == c.rhs) cone.ineqs.push_back(c);
  cone.eqs = pd.h.eqs;
  return cone;
}

bool is_delzant_cone(const HPolyhedron& c, const RatVec& apex,
                     const LatticeBasis& lattice) {
  PolyData cd = canonicalize(c);
  if (cd.empty) fail(ErrorKind::NotACone, "empty set");
  if (!cd.h.contains(apex)) fail(ErrorKind::NotACone, "apex not in cone");
  for (const Constraint& con : cd.h.ineqs)
    if (dot(con.normal, apex) != con.rhs)
      fail(ErrorKind::NotACone, "constraint not tight at apex");
  if (cd.dim != c.dim) return false;  // not full dimensional

  const std::vector<IntVec>& rays = cd.v.rays;
  std::vector<IntVec> lin_ambient;
  if (!cd.v.lineality.empty()) {
    // lattice points of the lineality span, saturated
    IntMatrix lm = IntMatrix::from_columns(cd.v.lineality, c.dim);
    std::vector<RatVec> ns = nullspace(RatMatrix::from_int(lm).transposed());
    std::vector<IntVec> normal_rows;
    for (const RatVec& w : ns) normal_rows.push_back(primitive_of_rational(w));
    LatticeBasis lat =
        normal_rows.empty()
            ? lattice
            : equation_sublattice(
                  IntMatrix::from_rows(normal_rows, c.dim), lattice);
    for (std::size_t j = 0; j < lat.rank(); ++j)
      lin_ambient.push_back(lat.column(j));
  }
  if (rays.size() + lin_ambient.size() != c.dim) return false;  // not simplicial

  std::vector<IntVec> cols;
  for (const IntVec& r : rays) {
    auto coords = solve(RatMatrix::from_int(lattice.generators), to_rat(r));
    if (!coords) return false;  // ray not in the lattice's rational span
    IntVec prim = primitive_of_rational(*coords);
    cols.push_back(lattice.generators.apply(prim));
  }
  for (const IntVec& l : lin_ambient) cols.push_back(l);
  if (cols.empty()) return true;
  IntMatrix m = IntMatrix::from_columns(cols, c.dim);
  return extends_to_lattice_basis(m, lattice) &&
         cols.size() == lattice.rank();
}

bool is_delzant_polytope(const HPolyhedron& p, const LatticeBasis& lattice) {
  PolyData pd = canonicalize(p);
  if (pd.empty) return false;
  if (!pd.v.rays.empty() || !pd.v.lineality.empty()) return false;  // unbounded
  if (pd.dim != p.dim) return false;
  for (const RatVec& v : pd.v.vertices) {
    HPolyhedron tc = tangent_cone(pd.h, v);
    if (!is_delzant_cone(tc, v, lattice)) return false;
  }
  return true;
}

namespace {

// Affine apex set {x : all constraints tight}; nullopt when empty.
std::optional<std::pair<RatVec, std::vector<RatVec>>> apex_subspace(
    const PolyData& cd) {
  std::vector<RatVec> rows;
  RatVec rhs;
  for (const Constraint& c : cd.h.ineqs) {
    rows.push_back(to_rat(c.normal));
    rhs.push_back(c.rhs);
  }
  for (const Constraint& c : cd.h.eqs) {
    rows.push_back(to_rat(c.normal));
    rhs.push_back(c.rhs);
  }
  if (rows.empty())
    return std::make_pair(RatVec(cd.h.dim, Rat(0)),
                          nullspace(RatMatrix(0, cd.h.dim)));
  RatMatrix m = RatMatrix::from_rows(rows, cd.h.dim);
  auto x = solve(m, rhs);
  if (!x) return std::nullopt;
  return std::make_pair(*x, nullspace(m));
}

}  // namespace

bool cone_equal(const HPolyhedron& c1, const HPolyhedron& c2) {
  if (c1.dim != c2.dim) fail(ErrorKind::ApexMismatch, "ambient dimensions differ");
  PolyData d1 = canonicalize(c1), d2 = canonicalize(c2);
  if (d1.empty || d2.empty) fail(ErrorKind::NotACone, "empty set");
  auto a1 = apex_subspace(d1), a2 = apex_subspace(d2);
  if (!a1 || !a2) fail(ErrorKind::NotACone, "no apex point");
  // The apex sets must meet; otherwise the cones sit at different points.
  {
    std::vector<RatVec> rows;
    RatVec rhs;
    auto add_tight = [&](const PolyData& d) {
      for (const Constraint& c : d.h.ineqs) {
        rows.push_back(to_rat(c.normal));
        rhs.push_back(c.rhs);
      }
      for (const Constraint& c : d.h.eqs) {
        rows.push_back(to_rat(c.normal));
        rhs.push_back(c.rhs);
      }
    };
    add_tight(d1);
    add_tight(d2);
    if (!rows.empty()) {
      RatMatrix m = RatMatrix::from_rows(rows, c1.dim);
      if (!solve(m, rhs)) fail(ErrorKind::ApexMismatch, "apex sets disjoint");
    }
  }
  return poly_contains(d1.h, d2.v) && poly_contains(d2.h, d1.v);
}

std::vector<std::vector<RatVec>> triangulate(const FaceLattice& fl) {
  const VPolyhedron& v = fl.poly.v;
  if (!v.rays.empty() || !v.lineality.empty())
    fail(ErrorKind::Unbounded, "triangulation needs a bounded polytope");
  // simplices per face, built bottom-up (pulling triangulation)
  std::vector<std::vector<std::vector<std::size_t>>> tri(fl.faces.size());
  for (std::size_t fi = 0; fi < fl.faces.size(); ++fi) {
    const Face& f = fl.faces[fi];
    if (f.dim == 0) {
      tri[fi] = {{f.vertex_indices[0]}};
      continue;
    }
    std::size_t anchor = f.vertex_indices[0];
    for (std::size_t gi = 0; gi < fl.faces.size(); ++gi) {
      const Face& g = fl.faces[gi];
      if (g.dim + 1 != f.dim || gi == fi) continue;
      if (!fl.face_subset(gi, fi)) continue;
      if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(),
                             anchor))
        continue;
      for (const auto& s : tri[gi]) {
        std::vector<std::size_t> simplex = s;
        simplex.push_back(anchor);
        tri[fi].push_back(std::move(simplex));
      }
    }
  }
  std::vector<std::vector<RatVec>> out;
  for (std::size_t fi = 0; fi < fl.faces.size(); ++fi) {
    if (fl.faces[fi].dim != fl.poly.dim) continue;
    if (fl.faces[fi].vertex_indices.size() != v.vertices.size()) continue;
    for (const auto& s : tri[fi]) {
      std::vector<RatVec> pts;
      for (auto idx : s) pts.push_back(v.vertices[idx]);
      out.push_back(std::move(pts));
    }
  }
  return out;
}

namespace {

Rat rat_det(RatMatrix m) {
  std::size_t n = m.rows();
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m.at(p, k) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
      d = -d;
    }
    d *= m.at(k, k);
    Rat inv = Rat(1) / m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

Int factorial(std::size_t n) {
  Int f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= (long)i;
  return f;
}

}  // namespace

Rat simplex_volume(const std::vector<RatVec>& pts, std::size_t dim) {
  if (pts.size() != dim + 1)
    fail(ErrorKind::Internal, "simplex needs dim+1 points");
  std::vector<RatVec> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
  if (dim == 0) return Rat(1);
  Rat d = rat_det(RatMatrix::from_rows(dirs, dim));
  return abs(d) / Rat(factorial(dim));
}

Rat volume(const HPolyhedron& p) {
  FaceLattice fl = face_lattice(p);
  if (fl.poly.empty) return Rat(0);
  if (!fl.poly.v.rays.empty() || !fl.poly.v.lineality.empty())
    fail(ErrorKind::Unbounded, "volume of unbounded polyhedron");
  if (fl.poly.dim < p.dim) return Rat(0);
  Rat vol = 0;
  for (const auto& s : triangulate(fl)) vol += simplex_volume(s, p.dim);
  return vol;
}

std::string to_string(const HPolyhedron& p) {
  std::ostringstream os;
  os << "{dim " << p.dim;
  for (const Constraint& c : p.ineqs) {
    os << "; [";
    for (std::size_t i = 0; i < c.normal.size(); ++i)
      os << (i ? "," : "") << c.normal[i].str();
    os << "].x >= " << rat_to_string(c.rhs);
  }
  for (const Constraint& c : p.eqs) {
    os << "; [";
    for (std::size_t i = 0; i < c.normal.size(); ++i)
      os << (i ? "," : "") << c.normal[i].str();
    os << "].x == " << rat_to_string(c.rhs);
  }
  os << "}";
  return os.str();
}

}  // namespace tallone
