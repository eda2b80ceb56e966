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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <random>
#include <set>

namespace tallone::oracle {

std::vector<IntVec> span_lattice_points(const LatticeBasis& gens, long radius) {
  std::size_t n = gens.ambient_rank;
  RatMatrix m = RatMatrix::from_int(gens.generators);
  std::vector<IntVec> out;
  std::vector<long> idx(n, -radius);
  while (true) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = idx[i];
    // v in the rational span iff the system m x = v is consistent
    if (solve(m, to_rat(v))) out.push_back(v);
    std::size_t k = 0;
    while (k < n && idx[k] == radius) idx[k++] = -radius;
    if (k == n) break;
    ++idx[k];
  }
  return out;
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  LatticeBasis la{a.rows(), a}, lb{b.rows(), b};
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!lattice_contains(lb, a.column(j))) return false;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!lattice_contains(la, b.column(j))) return false;
  return true;
}

std::vector<RatVec> brute_force_vertices(const HPolyhedron& p) {
  std::size_t n = p.dim;
  std::vector<Constraint> all = p.ineqs;
  all.insert(all.end(), p.eqs.begin(), p.eqs.end());
  std::vector<RatVec> found;
  std::vector<std::size_t> pick(n, 0);
  // iterate over all n-subsets of constraints
  std::vector<std::size_t> comb;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (comb.size() == n) {
      std::vector<RatVec> rows;
      RatVec rhs;
      for (auto i : comb) {
        rows.push_back(to_rat(all[i].normal));
        rhs.push_back(all[i].rhs);
      }
      RatMatrix m = RatMatrix::from_rows(rows, n);
      if (rank(m) == n) {
        auto x = solve(m, rhs);
        if (x && p.contains(*x)) found.push_back(*x);
      }
      return;
    }
    for (std::size_t i = start; i < all.size(); ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

Rat fiber_interval_length(const HPolyhedron& p, const RatVec& base) {
  std::size_t n = p.dim;
  bool has_lo = false, has_hi = false;
  Rat lo = 0, hi = 0;
  auto update = [&](const Constraint& c, bool equality) {
    Rat coeff(c.normal[n - 1]);
    Rat rest = c.rhs;
    for (std::size_t i = 0; i + 1 < n; ++i) rest -= Rat(c.normal[i]) * base[i];
    if (coeff == 0) {
      if (equality ? rest != 0 : rest > 0) {
        // infeasible fiber
        has_lo = has_hi = true;
        lo = 1;
        hi = 0;
      }
      return;
    }
    Rat bound = rest / coeff;
    bool lower = coeff > 0;
    if (equality) {
      if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
      if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
      return;
    }
    if (lower) {
      if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
    } else {
      if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
    }
  };
  for (const Constraint& c : p.ineqs) update(c, false);
  for (const Constraint& c : p.eqs) update(c, true);
  if (!has_lo || !has_hi) return Rat(-1);  // unbounded fiber
  Rat len = hi - lo;
  return len < 0 ? Rat(0) : len;
}

double mc_truncation_density(double kappa, double beta, std::int64_t samples,
                             double window, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double a1_max = 4.0;
  std::uniform_real_distribution<double> u0(0.0, kappa), u1(0.0, a1_max);
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    double a0 = u0(rng), a1 = u1(rng);
    if (std::abs((a0 - a1) - beta) <= window) ++hits;
  }
  // measure of the sampled box over the kernel width
  return (double)hits / (double)samples * (kappa * a1_max) / (2.0 * window);
}

bool sl2_reaches(const Int& p, const Int& q, const Int& target, int depth) {
  auto key = [](const Int& a, const Int& b) { return a.str() + "," + b.str(); };
  std::set<std::string> seen;
  std::deque<std::tuple<Int, Int, int>> queue;
  queue.push_back({p, q, 0});
  seen.insert(key(p, q));
  Int bound = (abs(p) + abs(q) + abs(target) + 1) * 64;
  while (!queue.empty()) {
    auto [a, b, d] = queue.front();
    queue.pop_front();
    if ((a == target && b == 0) || (a == -target && b == 0)) return true;
    if (d == depth) continue;
    // S = [[0,-1],[1,0]], T = [[1,1],[0,1]], T^{-1}
    std::vector<std::pair<Int, Int>> nexts = {
        {-b, a}, {a + b, b}, {a - b, b}};
    for (auto& [na, nb] : nexts) {
      if (abs(na) > bound || abs(nb) > bound) continue;
      if (seen.insert(key(na, nb)).second) queue.push_back({na, nb, d + 1});
    }
  }
  return false;
}

IntMatrix random_unimodular(std::size_t n, std::uint64_t seed, int steps) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  IntMatrix u = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      u.negate_row(i);
      continue;
    }
    u.add_row_multiple(i, j, Int(coef(rng)));
  }
  return u;
}

}  // namespace tallone::oracle
