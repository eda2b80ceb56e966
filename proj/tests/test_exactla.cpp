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

#include "oracles.hpp"
#include "tallone/error.hpp"
#include "tallone/lattice.hpp"

using namespace tallone;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                        int bound = 9) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = pick(rng);
  return m;
}

}  // namespace

TEST_CASE("hnf on the worked examples") {
  auto r1 = hnf(IntMatrix::identity(2));
  CHECK(r1.h == IntMatrix::identity(2));
  CHECK(r1.u == IntMatrix::identity(2));

  IntMatrix m{{Int(2), Int(4)}, {Int(0), Int(2)}};
  auto r2 = hnf(m);
  CHECK(r2.h == IntMatrix({{Int(2), Int(0)}, {Int(0), Int(2)}}));
  CHECK(m * r2.u == r2.h);
  // the column lattices agree (mutual membership oracle)
  CHECK(oracle::same_column_lattice(m, r2.h));

  IntMatrix z(2, 2);
  CHECK(hnf(z).h == z);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dims(1, 5);
    std::size_t r = dims(rng), c = dims(rng);
    IntMatrix m = random_matrix(rng, r, c);
    auto res = hnf(m);
    CHECK(m * res.u == res.h);
    Int d = det(res.u);
    CHECK((d == 1 || d == -1));
    CHECK(oracle::same_column_lattice(m, res.h));
    // echelon shape: pivot rows strictly increase
    long last_pivot = -1;
    for (std::size_t j = 0; j < res.h.cols(); ++j) {
      long p = -1;
      for (std::size_t i = 0; i < res.h.rows(); ++i)
        if (res.h.at(i, j) != 0) { p = (long)i; break; }
      if (p == -1) continue;
      CHECK(p > last_pivot);
      CHECK(res.h.at(p, j) > 0);
      last_pivot = p;
    }
  }
}

TEST_CASE("snf on the worked examples") {
  IntMatrix d23{{Int(2), Int(0)}, {Int(0), Int(3)}};
  auto r = snf(d23);
  CHECK(r.s.at(0, 0) == 1);
  CHECK(r.s.at(1, 1) == 6);
  CHECK(r.u * d23 * r.v == r.s);
  // determinantal-divisor oracle: d1 = gcd of entries, d1 d2 = |det|
  Int g = gcd(gcd(Int(2), Int(0)), gcd(Int(0), Int(3)));
  CHECK(r.s.at(0, 0) == g);
  CHECK(r.s.at(0, 0) * r.s.at(1, 1) == abs(det(d23)));

  CHECK(snf(IntMatrix::identity(3)).s == IntMatrix::identity(3));

  IntMatrix row{{Int(1), Int(1)}};
  auto r2 = snf(row);
  CHECK(r2.s.at(0, 0) == 1);
  CHECK(r2.s.at(0, 1) == 0);
}

TEST_CASE("snf invariant factors are unimodular invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    std::size_t r = dims(rng), c = dims(rng);
    IntMatrix m = random_matrix(rng, r, c, 6);
    auto base = invariant_factors(m);
    IntMatrix left = oracle::random_unimodular(r, rng());
    IntMatrix right = oracle::random_unimodular(c, rng());
    auto moved = invariant_factors(left * m * right);
    CHECK(base == moved);
    // divisibility chain
    for (std::size_t i = 0; i + 1 < base.size(); ++i)
      CHECK(base[i + 1] % base[i] == 0);
    // u m v == s exactly
    auto res = snf(m);
    CHECK(res.u * m * res.v == res.s);
    CHECK((abs(det(res.u)) == 1));
    CHECK((abs(det(res.v)) == 1));
  }
}

TEST_CASE("kernel_lattice on the worked examples") {
  auto k1 = kernel_lattice(IntMatrix{{Int(1), Int(1)}});
  REQUIRE(k1.rank() == 1);
  IntVec g1 = k1.column(0);
  CHECK(((g1 == IntVec{Int(1), Int(-1)}) || (g1 == IntVec{Int(-1), Int(1)})));

  auto k2 = kernel_lattice(IntMatrix{{Int(2), Int(-1)}});
  REQUIRE(k2.rank() == 1);
  IntVec g2 = k2.column(0);
  CHECK(((g2 == IntVec{Int(1), Int(2)}) || (g2 == IntVec{Int(-1), Int(-2)})));

  CHECK(kernel_lattice(IntMatrix::identity(2)).rank() == 0);
}

TEST_CASE("kernel vectors annihilate and the kernel is saturated") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    IntMatrix m = random_matrix(rng, dims(rng), dims(rng) + 1, 5);
    LatticeBasis k = kernel_lattice(m);
    for (std::size_t j = 0; j < k.rank(); ++j)
      CHECK(is_zero(m.apply(k.column(j))));
    if (k.rank() > 0) {
      auto sat = saturate(k);
      CHECK(sat.index == 1);  // saturate is the identity on the kernel
    }
  }
}

TEST_CASE("saturate on the worked examples") {
  auto s1 = saturate(LatticeBasis::from_columns(2, {{Int(2), Int(0)}}));
  CHECK(s1.index == 2);
  CHECK(s1.basis.column(0) == IntVec{Int(1), Int(0)});

  auto s2 = saturate(LatticeBasis::from_columns(2, {{Int(1), Int(1)}}));
  CHECK(s2.index == 1);

  // span{(2,2),(0,4)} has full rational span, so its saturation is Z^2 and
  // the index is |det| = 8; cross-checked by small-point enumeration.
  LatticeBasis in = LatticeBasis::from_columns(2, {{Int(2), Int(2)}, {Int(0), Int(4)}});
  auto s3 = saturate(in);
  CHECK(s3.index == 8);
  for (const IntVec& v : oracle::span_lattice_points(in, 3)) {
    CHECK(lattice_contains(s3.basis, v));
  }
  CHECK(oracle::same_column_lattice(s3.basis.generators, IntMatrix::identity(2)));
}

TEST_CASE("extends_to_lattice_basis") {
  LatticeBasis z2 = LatticeBasis::standard(2);
  CHECK(extends_to_lattice_basis(IntMatrix{{Int(1)}, {Int(0)}}, z2));
  // determinant-2 oracle
  IntMatrix two{{Int(1), Int(1)}, {Int(0), Int(2)}};
  CHECK(abs(det(two)) == 2);
  CHECK(!extends_to_lattice_basis(two, z2));
  IntMatrix good{{Int(2), Int(1)}, {Int(1), Int(1)}};
  CHECK(abs(det(good)) == 1);
  CHECK(extends_to_lattice_basis(good, z2));
  CHECK_THROWS_AS(
      extends_to_lattice_basis(IntMatrix{{Int(1)}, {Int(0)}},
                               LatticeBasis::from_columns(2, {{Int(2), Int(0)}})),
      Error);
}

TEST_CASE("solve_pairing_one examples and failure") {
  LatticeBasis z2 = LatticeBasis::standard(2);
  IntVec j1 = solve_pairing_one({Int(1), Int(1)}, z2);
  CHECK(dot(IntVec{Int(1), Int(1)}, j1) == 1);

  CHECK_THROWS_AS(solve_pairing_one({Int(2), Int(4)}, z2), Error);
  try {
    solve_pairing_one({Int(2), Int(4)}, z2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrimitive);
  }

  IntVec j2 = solve_pairing_one({Int(3), Int(5)}, z2);
  CHECK(dot(IntVec{Int(3), Int(5)}, j2) == 1);
  CHECK(j2 == IntVec{Int(2), Int(-1)});  // extended-gcd: 6 - 5 = 1
}

TEST_CASE("pairing succeeds exactly on primitive covectors") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> pick(-20, 20);
  std::uniform_int_distribution<std::size_t> dims(1, 6);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = dims(rng);
    IntVec xi(n);
    for (auto& x : xi) x = pick(rng);
    if (is_zero(xi)) continue;
    LatticeBasis lat = LatticeBasis::standard(n);
    Int g = content(xi);
    if (g == 1) {
      IntVec j = solve_pairing_one(xi, lat);
      CHECK(dot(xi, j) == 1);
      ++solved;
    } else {
      CHECK_THROWS_AS(solve_pairing_one(xi, lat), Error);
    }
  }
  CHECK(solved > 50);
}

TEST_CASE("equation_sublattice") {
  LatticeBasis z3 = LatticeBasis::standard(3);
  // kernel of [1,-1,1] is a rank-2 primitive lattice
  LatticeBasis k = equation_sublattice(IntMatrix{{Int(1), Int(-1), Int(1)}}, z3);
  CHECK(k.rank() == 2);
  CHECK(is_primitive(k));
  for (std::size_t j = 0; j < k.rank(); ++j) {
    IntVec v = k.column(j);
    CHECK(v[0] - v[1] + v[2] == 0);
  }
  // enumeration oracle: every small solution lies in the lattice
  for (const IntVec& v : oracle::span_lattice_points(k, 2))
    if (v[0] - v[1] + v[2] == 0) CHECK(lattice_contains(k, v));

  CHECK(equation_sublattice(IntMatrix(1, 3), z3).rank() == 3);
  CHECK(equation_sublattice(IntMatrix::identity(3), z3).rank() == 0);
}

TEST_CASE("rational parsing is canonical") {
  CHECK(rat_to_string(parse_rat("3/6")) == "1/2");
  CHECK(rat_to_string(parse_rat("-4/8")) == "-1/2");
  CHECK(rat_to_string(parse_rat("4/-8")) == "-1/2");
  CHECK(rat_to_string(parse_rat("7")) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
}
