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
// Test-only oracles, kept independent of the implementation paths they
// check: brute-force enumeration, Monte Carlo measurements, word search.

#ifndef TALLONE_TESTS_ORACLES_HPP
#define TALLONE_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tallone/lattice.hpp"
#include "tallone/matrix.hpp"
#include "tallone/numeric.hpp"
#include "tallone/polyhedron.hpp"

namespace tallone::oracle {

// All integer vectors of the rational span of `gens` inside the box
// |x_i| <= radius.  Saturation oracle for small lattices.
std::vector<IntVec> span_lattice_points(const LatticeBasis& gens, long radius);

// Column lattices are equal iff each generator lies in the other lattice.
bool same_column_lattice(const IntMatrix& a, const IntMatrix& b);

// Vertices of {x : ineqs} by brute-force intersection of n-subsets of
// constraint hyperplanes, keeping feasible solutions.  Bounded inputs only.
std::vector<RatVec> brute_force_vertices(const HPolyhedron& p);

// 1-dimensional Lebesgue measure of {t : point + t e_last in p}.
Rat fiber_interval_length(const HPolyhedron& p, const RatVec& base);

// Monte Carlo density of the pushforward of Lebesgue measure on
// {(a0,a1) in R+^2 : a0 <= kappa} under (a0,a1) -> a0 - a1, at beta.
// Deterministic for a fixed seed.
double mc_truncation_density(double kappa, double beta, std::int64_t samples,
                             double window, std::uint64_t seed);

// Whether (p,q) can be carried to (target, 0) by words of length <= depth in
// the standard generators of SL(2,Z) acting on column vectors.
bool sl2_reaches(const Int& p, const Int& q, const Int& target, int depth);

// Random unimodular matrix: a product of `steps` elementary operations.
IntMatrix random_unimodular(std::size_t n, std::uint64_t seed, int steps = 12);

}  // namespace tallone::oracle

#endif  // TALLONE_TESTS_ORACLES_HPP
