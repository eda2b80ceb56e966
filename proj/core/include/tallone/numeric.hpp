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

#ifndef TALLONE_NUMERIC_HPP
#define TALLONE_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace tallone {

// All classification data is exact: integers are arbitrary precision and
// rationals are kept canonical (gcd(|num|, den) = 1, den > 0).  GMP keeps
// arithmetic results canonical; only string parsing needs care.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) { return Rat(num, den); }

// Parses "p/q" or "p".  Throws std::invalid_argument on malformed input or
// zero denominator.
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is one, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

Int content(const IntVec& v);                // gcd of entries, 0 for zero vector
IntVec primitive_part(const IntVec& v);      // v / content, zero vector unchanged
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

// Clears denominators and divides by the content; the zero vector maps to
// itself.  The result spans the same ray.
IntVec primitive_of_rational(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

RatVec to_rat(const IntVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);

}  // namespace tallone

#endif  // TALLONE_NUMERIC_HPP
