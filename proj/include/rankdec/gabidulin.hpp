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

#ifndef RANKDEC_GABIDULIN_HPP
#define RANKDEC_GABIDULIN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "rankdec/field.hpp"
#include "rankdec/linpoly.hpp"
#include "rankdec/matrix.hpp"
#include "rankdec/random.hpp"

namespace rankdec {

/// A length-n vector over F_{q^m}: codeword, received word or error.
using Word = std::vector<Element>;

/// S(x) = sum_{i < d-1} S_i x^[i].
using Syndrome = LinPoly;

/**
 * (n, k) Gabidulin code given by the parity-check matrix with rows
 * h, h^[1], ..., h^[n-k-1]. Requires 1 <= k < n <= m and h independent over
 * F_q; the minimum rank distance is d = n - k + 1.
 */
class GabidulinCode {
 public:
  GabidulinCode(FieldPtr field, std::size_t n, std::size_t k, std::vector<Element> h);

  /// h = (1, z, ..., z^{n-1}).
  static GabidulinCode with_default_h(FieldPtr field, std::size_t n, std::size_t k);

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return n_ - k_ + 1; }
  std::span<const Element> h() const noexcept { return h_; }

  /// (n-k) x n, entry (i, j) = h_j^[i].
  const MatrixFqm& parity_check_matrix() const noexcept { return parity_check_; }
  /// k x n, rows span the right kernel of H.
  const MatrixFqm& generator_matrix() const noexcept { return generator_; }

  /// message * G.
  Word encode(std::span<const Element> message) const;

  /// S_i = sum_j r_j h_j^[i] for i = 0..d-2.
  Syndrome syndrome(std::span<const Element> word) const;

  bool is_codeword(std::span<const Element> word) const { return syndrome(word).is_zero(); }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::size_t k_;
  std::vector<Element> h_;
  MatrixFqm parity_check_;
  MatrixFqm generator_;
};

/// An error e = E * Y with E independent over F_q and Y a full-rank t x n
/// matrix over F_q.
struct ErrorSample {
  Word error;
  std::vector<Element> basis;  // E_1..E_t
  MatrixFq y;
};

/// Rejection-samples E and Y; the result has rank norm exactly t.
/// t > min(m, n) is InvalidInput.
ErrorSample sample_error(const GabidulinCode& code, std::size_t t, Rng& rng);
Word random_error(const GabidulinCode& code, std::size_t t, Rng& rng);

Word random_message(const GabidulinCode& code, Rng& rng);

Word add_words(std::span<const Element> a, std::span<const Element> b);
Word subtract_words(std::span<const Element> a, std::span<const Element> b);
Word zero_word(const FieldCtx& ctx, std::size_t n);

/// rank_q(a - b).
std::size_t rank_distance(std::span<const Element> a, std::span<const Element> b);

}  // namespace rankdec

#endif  // RANKDEC_GABIDULIN_HPP
