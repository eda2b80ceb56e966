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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tallone/error.hpp"
#include "tallone/toric_projection.hpp"

using namespace tallone;

namespace {

const Face& face_at(const FaceLattice& fl, const RatVec& relint) {
  for (const Face& f : fl.faces) {
    HPolyhedron fc = fl.poly.h;
    for (auto idx : f.active_inequalities) {
      const Constraint& c = fl.poly.h.ineqs[idx];
      fc.add_eq(to_rat(c.normal), c.rhs);
    }
    if (fc.contains(relint) && f.relint_point == relint) return f;
  }
  // fall back to any face whose closure contains the point minimally
  std::size_t best = fl.faces.size();
  for (std::size_t i = 0; i < fl.faces.size(); ++i) {
    HPolyhedron fc = fl.poly.h;
    for (auto idx : fl.faces[i].active_inequalities) {
      const Constraint& c = fl.poly.h.ineqs[idx];
      fc.add_eq(to_rat(c.normal), c.rhs);
    }
    if (!fc.contains(relint)) continue;
    if (best == fl.faces.size() || fl.faces[i].dim < fl.faces[best].dim) best = i;
  }
  REQUIRE(best != fl.faces.size());
  return fl.faces[best];
}

}  // namespace

TEST_CASE("build_projection on the cube and the simplex") {
  LatticeBasis z3 = LatticeBasis::standard(3);
  auto bc = build_projection(
      HPolyhedron::box({Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}), z3);
  CHECK(bc.tall);
  CHECK(bc.skeleton.cells.empty());
  CHECK(bc.genus == 0);
  CHECK(poly_equal(bc.delta, HPolyhedron::box({Rat(0), Rat(0)}, {Rat(1), Rat(1)})));
  CHECK(ae_equal(bc.rho, PiecewiseAffineFn::constant(bc.delta, Rat(1))));

  VPolyhedron sv;
  sv.dim = 3;
  sv.vertices = {{Rat(0), Rat(0), Rat(0)},
                 {Rat(1), Rat(0), Rat(0)},
                 {Rat(0), Rat(1), Rat(0)},
                 {Rat(0), Rat(0), Rat(1)}};
  auto bs = build_projection(vh_convert(sv), z3);
  CHECK(!bs.tall);

  VPolyhedron bad;
  bad.dim = 2;
  bad.vertices = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK_THROWS_AS(build_projection(vh_convert(bad), LatticeBasis::standard(2)),
                  Error);
}

TEST_CASE("face models of the 6d example") {
  HPolyhedron d6 = fixtures::example_6d();
  FaceLattice fl = face_lattice(d6);
  LatticeBasis z3 = LatticeBasis::standard(3);

  // edge {(1,y,1)}: H is the first coordinate circle, weights (-1,1)
  ComplexityOneModel edge = face_model(fl, face_at(fl, {Rat(1), Rat(0), Rat(1)}), z3);
  CHECK(edge.torus_rank == 2);
  REQUIRE(edge.h() == 1);
  IntVec gen = edge.subtorus.column(0);
  CHECK(((gen == IntVec{Int(1), Int(0)}) || (gen == IntVec{Int(-1), Int(0)})));
  REQUIRE(edge.weights.size() == 2);
  // basis-covariant: the weight pair is (-1, 1) up to the sign of the basis
  Int w0 = edge.weights[0][0], w1 = edge.weights[1][0];
  CHECK(w0 * w1 == -1);
  CHECK(is_tall(edge));
  CHECK(is_center_exceptional(edge));

  // vertex (1,1,1): H = T^2 with weights (-1,0),(0,-1),(1,1) and xi=(1,1,1)
  ComplexityOneModel vert = face_model(fl, face_at(fl, {Rat(1), Rat(1), Rat(1)}), z3);
  REQUIRE(vert.h() == 2);
  CHECK(is_tall(vert));
  CHECK(defining_exponents(vert) == IntVec{Int(1), Int(1), Int(1)});
  CHECK(is_center_exceptional(vert));
  CHECK(poly_equal(moment_cone(vert), HPolyhedron::whole_space(2)));

  // bottom facet z = 1: trivial H, non-exceptional
  ComplexityOneModel facet = face_model(fl, face_at(fl, {Rat(0), Rat(0), Rat(1)}), z3);
  CHECK(facet.h() == 0);
  CHECK(!is_center_exceptional(facet));
}

TEST_CASE("the 6d example end to end") {
  auto b = build_projection(fixtures::example_6d(), LatticeBasis::standard(3));
  REQUIRE(b.tall);
  CHECK(poly_equal(b.delta, HPolyhedron::box({Rat(-3), Rat(-2)}, {Rat(3), Rat(2)})));
  CHECK(b.genus == 0);
  CHECK(validate(b.skeleton).ok());

  // skeleton image as a polyhedral set:
  // {|x| <= |y| = 1} U {|y| <= |x| = 1} U {1 <= |x|=|y| <= 2}
  std::vector<HPolyhedron> expected;
  auto seg = [&](Rat ax, Rat ay, Rat bx, Rat by) {
    VPolyhedron v;
    v.dim = 2;
    v.vertices = {{ax, ay}, {bx, by}};
    expected.push_back(vh_convert(v));
  };
  seg(Rat(-1), Rat(1), Rat(1), Rat(1));
  seg(Rat(-1), Rat(-1), Rat(1), Rat(-1));
  seg(Rat(1), Rat(-1), Rat(1), Rat(1));
  seg(Rat(-1), Rat(-1), Rat(-1), Rat(1));
  seg(Rat(1), Rat(1), Rat(2), Rat(2));
  seg(Rat(-1), Rat(1), Rat(-2), Rat(2));
  seg(Rat(1), Rat(-1), Rat(2), Rat(-2));
  seg(Rat(-1), Rat(-1), Rat(-2), Rat(-2));

  // every skeleton cell image is inside the expected union and vice versa
  for (const SkeletonCell& c : b.skeleton.cells) {
    VPolyhedron cv = hv_convert(c.carrier);
    for (const RatVec& x : cv.vertices) {
      RatVec img = c.pi.apply(x);
      bool inside = false;
      for (const HPolyhedron& e : expected)
        if (e.contains(img)) { inside = true; break; }
      CHECK(inside);
    }
    // also a relative interior point
    RatVec mid = c.pi.apply(relint_point(c.carrier));
    bool inside = false;
    for (const HPolyhedron& e : expected)
      if (e.contains(mid)) { inside = true; break; }
    CHECK(inside);
  }
  for (const HPolyhedron& e : expected) {
    // sample the segment at several parameters and find a covering cell
    VPolyhedron ev = hv_convert(e);
    for (Rat t : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(9, 10), Rat(1)}) {
      RatVec pt = add(scale(Rat(1) - t, ev.vertices[0]), scale(t, ev.vertices[1]));
      CHECK(!fiber(b.skeleton, pt).empty());
    }
  }

  // rho equals the fiber length 4 - max(1,|x|,|y|)
  CHECK(evaluate(b.rho, {Rat(0), Rat(0)}) == Rat(3));
  CHECK(evaluate(b.rho, {Rat(2), Rat(0)}) == Rat(2));
  CHECK(evaluate(b.rho, {Rat(3), Rat(2)}) == Rat(1));
  CHECK(integrate(b.rho) == volume(fixtures::example_6d()));
}

TEST_CASE("exceptional faces have tall exceptional models with h+1 weights") {
  auto b = build_projection(fixtures::example_6d(), LatticeBasis::standard(3));
  for (const SkeletonCell& c : b.skeleton.cells) {
    CHECK(validate(c.label).ok());
    CHECK(is_tall(c.label));
    CHECK(is_center_exceptional(c.label));
    CHECK(c.label.weights.size() == c.label.h() + 1);
    for (const IntVec& w : c.label.weights) CHECK(!is_zero(w));
  }
}

TEST_CASE("footnote criterion agrees with the model-level criterion") {
  std::mt19937_64 rng(64);
  int faces_checked = 0;
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t dim = trial % 2 == 0 ? 3 : 4;
    HPolyhedron p = fixtures::random_delzant_polytope(rng, dim);
    FaceLattice fl = face_lattice(p);
    for (const Face& f : fl.faces) {
      bool lattice_test = face_lattice_exceptional(fl, f);
      bool model_nontrivial = false;
      try {
        ComplexityOneModel m = face_model(fl, f, LatticeBasis::standard(dim));
        model_nontrivial = m.h() >= 1;
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::DisconnectedStabilizer);
        model_nontrivial = true;  // finite nontrivial stabilizer
      }
      CHECK(lattice_test == model_nontrivial);
      ++faces_checked;
    }
  }
  CHECK(faces_checked > 100);
}

TEST_CASE("tall random projections satisfy both compatibility checks") {
  std::mt19937_64 rng(140);
  LatticeBasis z3 = LatticeBasis::standard(3);
  LatticeBasis z2 = LatticeBasis::standard(2);
  int done = 0;
  for (int trial = 0; trial < 40 && done < 4; ++trial) {
    HPolyhedron p = fixtures::random_delzant_polytope(rng, 3);
    ComplexityOneBundle b;
    try {
      b = build_projection(p, z3);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::DisconnectedStabilizer);
      continue;
    }
    if (!b.tall) continue;
    ++done;
    CHECK(validate(b.skeleton).ok());
    CHECK(check_delta_compat(b.skeleton, b.delta).all_pass());
    CHECK(check_rho_compat(b.skeleton, b.delta, b.rho, z2).all_pass());
    CHECK(integrate(b.rho) == volume(p));
  }
  CHECK(done == 4);
}
