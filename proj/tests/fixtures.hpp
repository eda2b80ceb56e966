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
// Shared test inputs: the worked examples and seeded random generators.

#ifndef TALLONE_TESTS_FIXTURES_HPP
#define TALLONE_TESTS_FIXTURES_HPP

#include <optional>
#include <random>

#include "oracles.hpp"
#include "tallone/model.hpp"
#include "tallone/polyhedron.hpp"

namespace tallone::fixtures {

// {(x,y,z) in [-3,3] x [-2,2] x [1,4] : |x| <= z, |y| <= z}
inline HPolyhedron example_6d() {
  HPolyhedron p;
  p.dim = 3;
  p.add_ineq({Rat(1), Rat(0), Rat(0)}, Rat(-3));
  p.add_ineq({Rat(-1), Rat(0), Rat(0)}, Rat(-3));
  p.add_ineq({Rat(0), Rat(1), Rat(0)}, Rat(-2));
  p.add_ineq({Rat(0), Rat(-1), Rat(0)}, Rat(-2));
  p.add_ineq({Rat(0), Rat(0), Rat(1)}, Rat(1));
  p.add_ineq({Rat(0), Rat(0), Rat(-1)}, Rat(-4));
  p.add_ineq({Rat(-1), Rat(0), Rat(1)}, Rat(0));
  p.add_ineq({Rat(1), Rat(0), Rat(1)}, Rat(0));
  p.add_ineq({Rat(0), Rat(-1), Rat(1)}, Rat(0));
  p.add_ineq({Rat(0), Rat(1), Rat(1)}, Rat(0));
  return p;
}

// {(x,y1,...,yn,z) in [-3,3] x [-2,2]^n x [1,4] : |x| <= z, |y_i| <= z}
inline HPolyhedron example_8d(std::size_t n = 2) {
  std::size_t d = n + 2;
  HPolyhedron p;
  p.dim = d;
  auto axis = [&](std::size_t i, const Rat& lo, const Rat& hi) {
    RatVec e(d, Rat(0));
    e[i] = 1;
    p.add_ineq(e, lo);
    e[i] = -1;
    p.add_ineq(e, -hi);
  };
  axis(0, Rat(-3), Rat(3));
  for (std::size_t i = 1; i <= n; ++i) axis(i, Rat(-2), Rat(2));
  axis(d - 1, Rat(1), Rat(4));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    RatVec e(d, Rat(0));
    e[i] = -1;
    e[d - 1] = 1;
    p.add_ineq(e, Rat(0));  // z - x_i >= 0
    e[i] = 1;
    p.add_ineq(e, Rat(0));  // z + x_i >= 0
  }
  return p;
}

inline ComplexityOneModel circle_model(const IntVec& w0, const IntVec& w1) {
  ComplexityOneModel m;
  m.torus_rank = 1;
  m.subtorus = LatticeBasis::standard(1);
  m.weights = {w0, w1};
  m.base_point = {Rat(0)};
  return m;
}

// Random valid tall model with the documented parameter ranges.
inline ComplexityOneModel random_tall_model(std::mt19937_64& rng,
                                            std::size_t n_max = 4,
                                            std::size_t h_max = 3,
                                            int weight_bound = 3) {
  std::uniform_int_distribution<std::size_t> npick(1, n_max);
  std::uniform_int_distribution<int> wpick(-weight_bound, weight_bound);
  while (true) {
    std::size_t n = npick(rng);
    std::uniform_int_distribution<std::size_t> hpick(1, std::min(n, h_max));
    std::size_t h = hpick(rng);
    // random primitive rank-h sublattice of Z^n
    IntMatrix gens(n, h);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < h; ++j) gens.at(i, j) = wpick(rng);
    if (rank(gens) != h) continue;
    LatticeBasis sat = saturate(LatticeBasis{n, gens}).basis;

    ComplexityOneModel m;
    m.torus_rank = n;
    m.subtorus = sat;
    m.weights.clear();
    for (std::size_t k = 0; k < h + 1; ++k) {
      IntVec w(h);
      for (std::size_t i = 0; i < h; ++i) w[i] = wpick(rng);
      m.weights.push_back(std::move(w));
    }
    m.base_point = RatVec(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      m.base_point[i] = Rat(wpick(rng), 2);
    if (!validate(m).ok()) continue;
    if (!is_tall(m)) continue;
    return m;
  }
}

// Delzant polytope generator: a sheared product of scaled unimodular
// simplices and cubes, optionally corner-chopped at unit depth.
inline HPolyhedron random_delzant_polytope(std::mt19937_64& rng, std::size_t dim,
                                           bool allow_chop = true) {
  // factors
  std::vector<HPolyhedron> factors;
  std::size_t used = 0;
  while (used < dim) {
    std::uniform_int_distribution<std::size_t> fpick(1, dim - used);
    std::size_t fd = fpick(rng);
    std::uniform_int_distribution<int> kind(0, 1);
    HPolyhedron f;
    if (kind(rng) == 0) {
      f = HPolyhedron::box(RatVec(fd, Rat(0)), RatVec(fd, Rat(2)));
    } else {
      // 2 * standard simplex
      f.dim = fd;
      for (std::size_t i = 0; i < fd; ++i) {
        RatVec e(fd, Rat(0));
        e[i] = 1;
        f.add_ineq(e, Rat(0));
      }
      f.add_ineq(RatVec(fd, Rat(-1)), Rat(-2));
    }
    factors.push_back(std::move(f));
    used += fd;
  }
  HPolyhedron p;
  p.dim = dim;
  std::size_t off = 0;
  for (const HPolyhedron& f : factors) {
    for (const Constraint& c : f.ineqs) {
      RatVec n(dim, Rat(0));
      for (std::size_t i = 0; i < f.dim; ++i) n[off + i] = Rat(c.normal[i]);
      p.add_ineq(n, c.rhs);
    }
    off += f.dim;
  }

  // unimodular shear
  IntMatrix u = oracle::random_unimodular(dim, rng(), 8);
  auto uinv = inverse(RatMatrix::from_int(u));
  HPolyhedron sheared;
  sheared.dim = dim;
  for (const Constraint& c : p.ineqs) {
    // {Ux : a.x >= b} = {y : (a U^{-1}).y >= b}
    RatVec row(dim, Rat(0));
    for (std::size_t jj = 0; jj < dim; ++jj)
      for (std::size_t ii = 0; ii < dim; ++ii)
        row[jj] += Rat(c.normal[ii]) * uinv->at(ii, jj);
    sheared.add_ineq(row, c.rhs);
  }

  if (allow_chop) {
    std::uniform_int_distribution<int> do_chop(0, 2);
    if (do_chop(rng) == 0) {
      PolyData pd = canonicalize(sheared);
      std::uniform_int_distribution<std::size_t> vpick(0, pd.v.vertices.size() - 1);
      RatVec v = pd.v.vertices[vpick(rng)];
      HPolyhedron tc = tangent_cone(pd.h, v);
      IntVec w(dim, Int(0));
      for (const Constraint& c : tc.ineqs)
        for (std::size_t i = 0; i < dim; ++i) w[i] += c.normal[i];
      Rat cut = dot(w, v) + 1;
      bool safe = true;
      for (const RatVec& other : pd.v.vertices)
        if (other != v && dot(w, other) <= cut) { safe = false; break; }
      if (safe) {
        HPolyhedron chopped = pd.h;
        chopped.add_ineq(to_rat(w), cut);
        return chopped;
      }
    }
  }
  return sheared;
}

}  // namespace tallone::fixtures

#endif  // TALLONE_TESTS_FIXTURES_HPP
