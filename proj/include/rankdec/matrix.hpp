/*
 * Copyright 2026 The rankdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKDEC_MATRIX_HPP
#define RANKDEC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rankdec/field.hpp"

namespace rankdec {

/// Dense row-major matrix over the prime field F_q.
class MatrixFq {
 public:
  MatrixFq(Residue q, std::size_t rows, std::size_t cols)
      : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static MatrixFq identity(Residue q, std::size_t n);

  Residue q() const noexcept { return q_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Residue> data() const noexcept { return data_; }

  friend bool operator==(const MatrixFq&, const MatrixFq&) = default;

 private:
  Residue q_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Dense row-major matrix over F_{q^m}.
class MatrixFqm {
 public:
  MatrixFqm(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
      : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, ctx.zero()) {}

  const FieldCtx& field() const noexcept { return *ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Element> row(std::size_t r) const;
  MatrixFqm transposed() const;

  friend bool operator==(const MatrixFqm& a, const MatrixFqm& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const FieldCtx* ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

MatrixFqm operator*(const MatrixFqm& a, const MatrixFqm& b);

/// Builds a matrix from equal-length rows.
MatrixFqm matrix_from_rows(const FieldCtx& ctx, const std::vector<std::vector<Element>>& rows);

// Gaussian elimination. Pivots are the first nonzero entry in each column.

std::size_t rank(const MatrixFq& a);
std::size_t rank(const MatrixFqm& a);

/// Basis of {x : A x = 0} over F_q.
std::vector<std::vector<Residue>> kernel_fq(const MatrixFq& a);

/// Basis of the right kernel {x : A x = 0} over F_{q^m}; size cols - rank.
std::vector<std::vector<Element>> kernel_fqm(const MatrixFqm& a);

/// Some solution of A x = b over F_q (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Residue>> solve_fq(const MatrixFq& a, std::span<const Residue> b);

/// The m x n matrix over F_q whose column j is expand(elements[j]).
MatrixFq coordinate_matrix(const FieldCtx& ctx, std::span<const Element> elements);

/// Rank over F_q of the coordinate matrix: the rank norm of a vector.
std::size_t rank_over_fq(std::span<const Element> elements);

}  // namespace rankdec

#endif  // RANKDEC_MATRIX_HPP
