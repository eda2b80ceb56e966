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

#include "tallone/error.hpp"

namespace tallone {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::VectorsNotInLattice: return "VectorsNotInLattice";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::PointNotInPolyhedron: return "PointNotInPolyhedron";
    case ErrorKind::NotACone: return "NotACone";
    case ErrorKind::ApexMismatch: return "ApexMismatch";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NonPrimitiveSubtorus: return "NonPrimitiveSubtorus";
    case ErrorKind::NonFaithfulWeights: return "NonFaithfulWeights";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::NotTall: return "NotTall";
    case ErrorKind::NonPositiveKappa: return "NonPositiveKappa";
    case ErrorKind::NonInjectivePi: return "NonInjectivePi";
    case ErrorKind::LabelNotTall: return "LabelNotTall";
    case ErrorKind::LabelNotExceptional: return "LabelNotExceptional";
    case ErrorKind::IncidenceMismatch: return "IncidenceMismatch";
    case ErrorKind::NotDelzant: return "NotDelzant";
    case ErrorKind::DisconnectedStabilizer: return "DisconnectedStabilizer";
    case ErrorKind::UnsupportedTopology: return "UnsupportedTopology";
    case ErrorKind::SkeletonMismatch: return "SkeletonMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::Internal: return "Internal";
  }
  return "UnknownError";
}

}  // namespace tallone
