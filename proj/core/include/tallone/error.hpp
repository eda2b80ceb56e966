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

#ifndef TALLONE_ERROR_HPP
#define TALLONE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tallone {

enum class ErrorKind {
  // lattice layer
  VectorsNotInLattice,
  NotPrimitive,
  // polyhedra
  DimensionTooLarge,
  PointNotInPolyhedron,
  NotACone,
  ApexMismatch,
  Unbounded,
  // piecewise affine
  OutsideDomain,
  EmptyIntersection,
  DomainMismatch,
  // models
  NonPrimitiveSubtorus,
  NonFaithfulWeights,
  InvalidModel,
  NotTall,
  NonPositiveKappa,
  // skeletons
  NonInjectivePi,
  LabelNotTall,
  LabelNotExceptional,
  IncidenceMismatch,
  // projections
  NotDelzant,
  DisconnectedStabilizer,
  // paintings
  UnsupportedTopology,
  SkeletonMismatch,
  // i/o
  ParseError,
  SchemaError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tallone

#endif  // TALLONE_ERROR_HPP
