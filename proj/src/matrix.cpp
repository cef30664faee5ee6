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

#include "rankdec/matrix.hpp"

#include <utility>

namespace rankdec {

namespace {

// Arithmetic adaptors so one elimination routine serves both fields.
struct FqOps {
  Residue q;
  bool is_zero(Residue a) const { return a == 0; }
  Residue zero() const { return 0; }
  Residue one() const { return 1; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % q);
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + q - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : q - a; }
  Residue inv(Residue a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (Residue e = q - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % q;
      base = base * base % q;
    }
    return static_cast<Residue>(result);
  }
};

struct FqmOps {
  const FieldCtx* ctx;
  bool is_zero(const Element& a) const { return a.is_zero(); }
  Element zero() const { return ctx->zero(); }
  Element one() const { return ctx->one(); }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return inverse(a); }
};

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row, in row order.
template <class T, class Ops>
std::vector<std::size_t> row_reduce(std::vector<T>& a, std::size_t rows, std::size_t cols,
                                    const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && ops.is_zero(a[p * cols + c])) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[p * cols + k], a[r * cols + k]);
    }
    const T scale = ops.inv(a[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = ops.mul(a[r * cols + k], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + c])) continue;
      const T f = a[i * cols + c];
      for (std::size_t k = c; k < cols; ++k) {
        if (ops.is_zero(a[r * cols + k])) continue;
        a[i * cols + k] = ops.sub(a[i * cols + k], ops.mul(f, a[r * cols + k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T, class Ops>
std::vector<std::vector<T>> kernel_of(std::vector<T> a, std::size_t rows, std::size_t cols,
                                      const Ops& ops) {
  const auto pivots = row_reduce(a, rows, cols, ops);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, ops.zero());
    v[f] = ops.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = ops.neg(a[r * cols + f]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

MatrixFq MatrixFq::identity(Residue q, std::size_t n) {
  MatrixFq out(q, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

std::vector<Element> MatrixFqm::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

MatrixFqm MatrixFqm::transposed() const {
  MatrixFqm out(*ctx_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

MatrixFqm operator*(const MatrixFqm& a, const MatrixFqm& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shapes do not match");
  MatrixFqm out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element acc = a.field().zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

MatrixFqm matrix_from_rows(const FieldCtx& ctx, const std::vector<std::vector<Element>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixFqm out(ctx, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    require_field(ctx, rows[r]);
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = rows[r][c];
  }
  return out;
}

std::size_t rank(const MatrixFq& a) {
  std::vector<Residue> data(a.data().begin(), a.data().end());
  return row_reduce(data, a.rows(), a.cols(), FqOps{a.q()}).size();
}

std::size_t rank(const MatrixFqm& a) {
  std::vector<Element> data;
  data.reserve(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) data.push_back(a.at(r, c));
  }
  return row_reduce(data, a.rows(), a.cols(), FqmOps{&a.field()}).size();
}

std::vector<std::vector<Residue>> kernel_fq(const MatrixFq& a) {
  return kernel_of(std::vector<Residue>(a.data().begin(), a.data().end()), a.rows(), a.cols(),
                   FqOps{a.q()});
}

std::vector<std::vector<Element>> kernel_fqm(const MatrixFqm& a) {
  std::vector<Element> data;
  data.reserve(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) data.push_back(a.at(r, c));
  }
  return kernel_of(std::move(data), a.rows(), a.cols(), FqmOps{&a.field()});
}

std::optional<std::vector<Residue>> solve_fq(const MatrixFq& a, std::span<const Residue> b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side length must equal row count");
  const std::size_t cols = a.cols() + 1;
  std::vector<Residue> aug(a.rows() * cols);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug[r * cols + c] = a.at(r, c);
    aug[r * cols + a.cols()] = b[r] % a.q();
  }
  const auto pivots = row_reduce(aug, a.rows(), cols, FqOps{a.q()});
  std::vector<Residue> x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x[pivots[r]] = aug[r * cols + a.cols()];
  }
  return x;
}

MatrixFq coordinate_matrix(const FieldCtx& ctx, std::span<const Element> elements) {
  require_field(ctx, elements);
  MatrixFq out(ctx.q(), ctx.m(), elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j) {
    const auto c = elements[j].coords();
    for (std::size_t i = 0; i < ctx.m(); ++i) out.at(i, j) = c[i];
  }
  return out;
}

std::size_t rank_over_fq(std::span<const Element> elements) {
  if (elements.empty()) return 0;
  return rank(coordinate_matrix(elements.front().field(), elements));
}

}  // namespace rankdec
