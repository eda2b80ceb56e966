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

#include "tallone/refinement.hpp"

#include <algorithm>

#include "tallone/error.hpp"

namespace tallone {

bool Hyperplane::operator<(const Hyperplane& o) const {
  if (normal != o.normal) {
    for (std::size_t i = 0; i < normal.size(); ++i)
      if (normal[i] != o.normal[i]) return normal[i] < o.normal[i];
  }
  return rhs < o.rhs;
}

Hyperplane make_hyperplane(const IntVec& normal, const Rat& rhs) {
  IntVec n = primitive_part(normal);
  Rat r = rhs;
  if (content(normal) > 1) r /= Rat(content(normal));
  for (const Int& x : n) {
    if (x == 0) continue;
    if (x < 0) {
      for (Int& y : n) y = -y;
      r = -r;
    }
    break;
  }
  return Hyperplane{std::move(n), std::move(r)};
}

std::vector<Hyperplane> cut_hyperplanes(const HPolyhedron& p) {
  PolyData pd = canonicalize(p);
  std::vector<Hyperplane> cuts;
  if (pd.empty) return cuts;
  for (const Constraint& c : pd.h.ineqs)
    cuts.push_back(make_hyperplane(c.normal, c.rhs));
  for (const Constraint& c : pd.h.eqs)
    cuts.push_back(make_hyperplane(c.normal, c.rhs));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

void add_cuts(std::vector<Hyperplane>& cuts, const std::vector<Hyperplane>& more) {
  cuts.insert(cuts.end(), more.begin(), more.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
}

namespace {

struct WorkPiece {
  HPolyhedron closure;
  PolyData data;
};

}  // namespace

std::vector<RefinedPiece> refine_region(const HPolyhedron& region,
                                        const std::vector<Hyperplane>& cuts) {
  FaceLattice fl = face_lattice(region);
  std::vector<RefinedPiece> out;
  if (fl.poly.empty) return out;

  for (const Face& f : fl.faces) {
    // closed face as an H-polyhedron
    HPolyhedron fc = fl.poly.h;
    for (auto idx : f.active_inequalities) {
      const Constraint& c = fl.poly.h.ineqs[idx];
      fc.add_eq(to_rat(c.normal), c.rhs);
    }
    std::vector<WorkPiece> pieces;
    pieces.push_back({fc, canonicalize(fc)});
    for (const Hyperplane& cut : cuts) {
      std::vector<WorkPiece> next;
      for (WorkPiece& p : pieces) {
        // classify the piece against the cut using its generators
        bool above = false, below = false;
        auto side = [&](const Rat& v) {
          if (v > 0) above = true;
          if (v < 0) below = true;
        };
        for (const RatVec& v : p.data.v.vertices)
          side(dot(cut.normal, v) - cut.rhs);
        for (const IntVec& r : p.data.v.rays) side(Rat(dot(cut.normal, r)));
        for (const IntVec& l : p.data.v.lineality) {
          Int d = dot(cut.normal, l);
          if (d != 0) { above = true; below = true; }
        }
        if (!(above && below)) {
          next.push_back(std::move(p));
          continue;
        }
        auto keep_side = [&](HPolyhedron q) {
          PolyData qd = canonicalize(q);
          if (!qd.empty && qd.dim == p.data.dim)
            next.push_back({qd.h, std::move(qd)});
        };
        HPolyhedron plus = p.closure;
        plus.add_ineq(to_rat(cut.normal), cut.rhs);
        keep_side(std::move(plus));
        HPolyhedron minus = p.closure;
        minus.add_ineq(scale(Rat(-1), to_rat(cut.normal)), -cut.rhs);
        keep_side(std::move(minus));
        HPolyhedron slice = p.closure;
        slice.add_eq(to_rat(cut.normal), cut.rhs);
        PolyData sd = canonicalize(slice);
        if (!sd.empty && sd.dim + 1 == p.data.dim)
          next.push_back({sd.h, std::move(sd)});
      }
      pieces = std::move(next);
    }
    for (WorkPiece& p : pieces) {
      RefinedPiece rp;
      rp.dim = p.data.dim;
      rp.rep = relint_point(p.closure);
      rp.closure = std::move(p.data.h);
      out.push_back(std::move(rp));
    }
  }
  std::sort(out.begin(), out.end(), [](const RefinedPiece& a, const RefinedPiece& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.rep < b.rep;
  });
  // pieces coming from different faces can coincide only if they share the
  // representative point, which relative-interior disjointness forbids
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RefinedPiece& a, const RefinedPiece& b) {
                          return a.dim == b.dim && a.rep == b.rep;
                        }),
            out.end());
  return out;
}

}  // namespace tallone
