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

#include "fixtures.hpp"
#include "tallone/error.hpp"
#include "tallone/projection.hpp"

using namespace tallone;

namespace {

// 4 - max(1, x) on [0,4]
PiecewiseAffineFn hat() {
  PiecewiseAffineFn f;
  f.ambient_dim = 1;
  f.domain = HPolyhedron::box({Rat(0)}, {Rat(4)});
  f.cells.push_back({HPolyhedron::box({Rat(0)}, {Rat(1)}), {Rat(0)}, Rat(3)});
  f.cells.push_back({HPolyhedron::box({Rat(1)}, {Rat(4)}), {Rat(-1)}, Rat(4)});
  return f;
}

// 1 - max(0, x-1) on [0,4]
PiecewiseAffineFn shifted() {
  PiecewiseAffineFn f;
  f.ambient_dim = 1;
  f.domain = HPolyhedron::box({Rat(0)}, {Rat(4)});
  f.cells.push_back({HPolyhedron::box({Rat(0)}, {Rat(1)}), {Rat(0)}, Rat(1)});
  f.cells.push_back({HPolyhedron::box({Rat(1)}, {Rat(4)}), {Rat(-1)}, Rat(2)});
  return f;
}

}  // namespace

TEST_CASE("evaluation of the 6d fiber-length function") {
  auto pr = project_drop_last(fixtures::example_6d());
  const PiecewiseAffineFn& f = pr.fiber_length;
  CHECK(evaluate(f, {Rat(0), Rat(0)}) == Rat(3));
  CHECK(evaluate(f, {Rat(2), Rat(0)}) == Rat(2));
  CHECK(evaluate(f, {Rat(3), Rat(2)}) == Rat(1));
  // boundary points between cells give the common value
  CHECK(evaluate(f, {Rat(1), Rat(0)}) == Rat(3));
  CHECK_THROWS_AS(evaluate(f, {Rat(5), Rat(0)}), Error);
}

TEST_CASE("combine on the worked examples") {
  auto f = hat();
  auto zero = PiecewiseAffineFn::constant(f.domain, Rat(0));
  auto same = combine(f, zero, Rat(1), Rat(0));
  CHECK(ae_equal(same, f));

  auto diff = combine(f, f, Rat(1), Rat(-1));
  CHECK(ae_equal(diff, zero));

  // both kinks at x = 1 cancel; the difference is the constant 2
  auto g = shifted();
  auto d = combine(f, g, Rat(1), Rat(-1));
  auto germ = is_integral_affine_near(d, {Rat(1)}, LatticeBasis::standard(1));
  REQUIRE(germ.status == GermStatus::Affine);
  CHECK(germ.germ->constant == Rat(2));
  CHECK(is_zero(to_rat(germ.germ->slope)));
  CHECK(evaluate(d, {Rat(1, 2)}) == Rat(2));
  CHECK(evaluate(d, {Rat(3)}) == Rat(2));
}

TEST_CASE("combine is bilinear and associative up to ae_equal") {
  auto f = hat();
  auto g = shifted();
  auto lhs = combine(combine(f, g, Rat(2), Rat(1)), g, Rat(1), Rat(1));
  auto rhs = combine(f, combine(g, g, Rat(1), Rat(1)), Rat(2), Rat(1));
  CHECK(ae_equal(lhs, rhs));

  auto scaled = combine(f, f, Rat(1, 2), Rat(1, 2));
  CHECK(ae_equal(scaled, f));
}

TEST_CASE("combine domain rules") {
  auto f = hat();
  PiecewiseAffineFn far_away =
      PiecewiseAffineFn::constant(HPolyhedron::box({Rat(10)}, {Rat(12)}), Rat(1));
  CHECK_THROWS_AS(combine(f, far_away, Rat(1), Rat(1)), Error);

  PiecewiseAffineFn touching =
      PiecewiseAffineFn::constant(HPolyhedron::box({Rat(4)}, {Rat(6)}), Rat(1));
  CHECK_THROWS_AS(combine(f, touching, Rat(1), Rat(1)), Error);

  PiecewiseAffineFn inner =
      PiecewiseAffineFn::constant(HPolyhedron::box({Rat(1)}, {Rat(2)}), Rat(5));
  auto restricted = combine(f, inner, Rat(1), Rat(1));
  CHECK(evaluate(restricted, {Rat(3, 2)}) == Rat(4 - Rat(3, 2) + 5));
}

TEST_CASE("germ tests and re-subdivision invariance") {
  auto f = hat();
  LatticeBasis z1 = LatticeBasis::standard(1);

  auto g0 = is_integral_affine_near(PiecewiseAffineFn::constant(f.domain, Rat(7)),
                                    {Rat(2)}, z1);
  REQUIRE(g0.status == GermStatus::Affine);
  CHECK(g0.germ->constant == Rat(7));

  auto g1 = is_integral_affine_near(f, {Rat(1)}, z1);
  CHECK(g1.status == GermStatus::NotAffineNearPoint);

  auto half = PiecewiseAffineFn::affine(f.domain, {Rat(1, 2)}, Rat(0));
  CHECK(is_integral_affine_near(half, {Rat(2)}, z1).status ==
        GermStatus::SlopeNotIntegral);

  // re-subdivide the affine part: the germ is unchanged
  PiecewiseAffineFn sub;
  sub.ambient_dim = 1;
  sub.domain = HPolyhedron::box({Rat(0)}, {Rat(4)});
  sub.cells.push_back({HPolyhedron::box({Rat(0)}, {Rat(2)}), {Rat(1)}, Rat(0)});
  sub.cells.push_back({HPolyhedron::box({Rat(2)}, {Rat(4)}), {Rat(1)}, Rat(0)});
  validate(sub);
  auto g2 = is_integral_affine_near(sub, {Rat(2)}, z1);
  REQUIRE(g2.status == GermStatus::Affine);
  CHECK(g2.germ->slope == IntVec{Int(1)});
}

TEST_CASE("ae_equal ignores measure-zero redefinitions") {
  auto f = hat();
  // the same function with the kink cell split further
  PiecewiseAffineFn g;
  g.ambient_dim = 1;
  g.domain = f.domain;
  g.cells.push_back({HPolyhedron::box({Rat(0)}, {Rat(1)}), {Rat(0)}, Rat(3)});
  g.cells.push_back({HPolyhedron::box({Rat(1)}, {Rat(2)}), {Rat(-1)}, Rat(4)});
  g.cells.push_back({HPolyhedron::box({Rat(2)}, {Rat(4)}), {Rat(-1)}, Rat(4)});
  validate(g);
  CHECK(ae_equal(f, g));

  auto h = shifted();
  CHECK(!ae_equal(f, h));

  PiecewiseAffineFn other_domain =
      PiecewiseAffineFn::constant(HPolyhedron::box({Rat(0)}, {Rat(5)}), Rat(0));
  CHECK_THROWS_AS(ae_equal(f, other_domain), Error);
}

TEST_CASE("integrate") {
  HPolyhedron sq = HPolyhedron::box({Rat(0), Rat(0)}, {Rat(1), Rat(1)});
  CHECK(integrate(PiecewiseAffineFn::constant(sq, Rat(1))) == Rat(1));

  HPolyhedron seg = HPolyhedron::box({Rat(0)}, {Rat(1)});
  CHECK(integrate(PiecewiseAffineFn::affine(seg, {Rat(1)}, Rat(0))) == Rat(1, 2));

  // additivity through combine
  auto f = hat();
  auto g = shifted();
  CHECK(integrate(combine(f, g, Rat(1), Rat(1))) == integrate(f) + integrate(g));
}
