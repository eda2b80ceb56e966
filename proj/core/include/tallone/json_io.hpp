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
// JSON schemas for every exchanged object.  Output is canonical: sorted
// keys, rationals as reduced "p/q" strings, integers as numbers when they
// fit in 64 bits and as decimal strings otherwise.  Unknown fields are
// rejected on input.

#ifndef TALLONE_JSON_IO_HPP
#define TALLONE_JSON_IO_HPP

#include <string>

#include "tallone/painting.hpp"
#include "tallone/skeleton.hpp"
#include "tallone/toric_projection.hpp"

namespace tallone {

std::string to_json(const HPolyhedron& p);
std::string to_json(const PiecewiseAffineFn& f);
std::string to_json(const ComplexityOneModel& m);
std::string to_json(const TruncationSpec& t);
std::string to_json(const SkeletonComplex& s);
std::string to_json(const PaintingData& p);
std::string to_json(const ClassificationRecord& r);
std::string to_json(const ComplexityOneBundle& b);
std::string to_json(const CompatReport& r);
std::string to_json(const BettiNumbers& b);

HPolyhedron parse_hpolyhedron(const std::string& text);
PiecewiseAffineFn parse_pwaffine(const std::string& text);
ComplexityOneModel parse_model(const std::string& text);
TruncationSpec parse_truncation(const std::string& text);
SkeletonComplex parse_skeleton(const std::string& text);
PaintingData parse_painting(const std::string& text);
ClassificationRecord parse_record(const std::string& text);
ComplexityOneBundle parse_bundle(const std::string& text);

}  // namespace tallone

#endif  // TALLONE_JSON_IO_HPP
