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

#ifndef TALLONE_MATRIX_HPP
#define TALLONE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tallone/numeric.hpp"

namespace tallone {

// Dense arbitrary-precision integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec column(std::size_t j) const;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec apply(const IntVec& v) const;   // matrix * column vector
  RatVec apply(const RatVec& v) const;

  void swap_columns(std::size_t a, std::size_t b);
  void add_column_multiple(std::size_t dst, std::size_t src, const Int& c);
  void negate_column(std::size_t j);
  void swap_rows(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t i);

  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

// Dense rational matrix with exact Gaussian elimination utilities.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVec>& cols, std::size_t rows);
  static RatMatrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec column(std::size_t j) const;

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVec apply(const RatVec& v) const;

  bool operator==(const RatMatrix& rhs) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Solves m * x = b exactly.  Returns one solution, or nullopt if inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

// Basis of the right kernel {x : m x = 0} over the rationals.
std::vector<RatVec> nullspace(const RatMatrix& m);

// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

Int det(const IntMatrix& m);  // square matrices only

}  // namespace tallone

#endif  // TALLONE_MATRIX_HPP
