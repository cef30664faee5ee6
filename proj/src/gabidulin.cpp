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

#include "rankdec/gabidulin.hpp"

#include <algorithm>
#include <utility>

namespace rankdec {

namespace {

MatrixFqm build_parity_check(const FieldCtx& ctx, std::size_t rows,
                             const std::vector<Element>& h) {
  MatrixFqm out(ctx, rows, h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    Element entry = h[j];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i > 0) entry = frobenius(entry, 1);
      out.at(i, j) = entry;
    }
  }
  return out;
}

MatrixFqm build_generator(const FieldCtx& ctx, const MatrixFqm& parity_check) {
  return matrix_from_rows(ctx, kernel_fqm(parity_check));
}

void require_length(std::span<const Element> w, std::size_t n, const char* what) {
  if (w.size() != n) throw InvalidInput(std::string(what) + " has the wrong length");
}

}  // namespace

GabidulinCode::GabidulinCode(FieldPtr field, std::size_t n, std::size_t k, std::vector<Element> h)
    : field_(std::move(field)),
      n_(n),
      k_(k),
      h_(std::move(h)),
      parity_check_(*field_, 0, 0),
      generator_(*field_, 0, 0) {
  if (k_ < 1 || k_ >= n_) throw InvalidInput("code needs 1 <= k < n");
  if (n_ > field_->m()) throw InvalidInput("code length n must not exceed the extension degree m");
  if (h_.size() != n_) throw InvalidInput("h must have exactly n entries");
  require_field(*field_, h_);
  if (rank_over_fq(h_) != n_) throw InvalidInput("h entries must be linearly independent over F_q");
  parity_check_ = build_parity_check(*field_, n_ - k_, h_);
  generator_ = build_generator(*field_, parity_check_);
}

GabidulinCode GabidulinCode::with_default_h(FieldPtr field, std::size_t n, std::size_t k) {
  if (n > field->m()) throw InvalidInput("code length n must not exceed the extension degree m");
  std::vector<Element> h;
  Element z_power = field->one();
  const Element z = field->generator();
  for (std::size_t j = 0; j < n; ++j) {
    h.push_back(z_power);
    z_power *= z;
  }
  return GabidulinCode(std::move(field), n, k, std::move(h));
}

Word GabidulinCode::encode(std::span<const Element> message) const {
  require_length(message, k_, "message");
  require_field(*field_, message);
  Word out(n_, field_->zero());
  for (std::size_t i = 0; i < k_; ++i) {
    if (message[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) out[j] += message[i] * generator_.at(i, j);
  }
  return out;
}

Syndrome GabidulinCode::syndrome(std::span<const Element> word) const {
  require_length(word, n_, "word");
  require_field(*field_, word);
  std::vector<Element> s(d() - 1, field_->zero());
  for (std::size_t i = 0; i + 1 < d(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!word[j].is_zero()) s[i] += word[j] * parity_check_.at(i, j);
    }
  }
  return LinPoly(*field_, std::move(s));
}

ErrorSample sample_error(const GabidulinCode& code, std::size_t t, Rng& rng) {
  const FieldCtx& ctx = code.field();
  const std::size_t n = code.n();
  if (t > std::min<std::size_t>(ctx.m(), n)) {
    throw InvalidInput("error rank cannot exceed min(m, n)");
  }
  std::vector<Element> basis;
  do {
    basis.clear();
    for (std::size_t j = 0; j < t; ++j) basis.push_back(random_element(ctx, rng));
  } while (rank_over_fq(basis) != t);

  MatrixFq y(ctx.q(), t, n);
  do {
    for (std::size_t r = 0; r < t; ++r) {
      for (std::size_t c = 0; c < n; ++c) y.at(r, c) = random_residue(rng, ctx.q());
    }
  } while (rank(y) != t);

  Word e(n, ctx.zero());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < t; ++r) {
      if (y.at(r, c) != 0) e[c] += basis[r].scaled(y.at(r, c));
    }
  }
  if (rank_over_fq(e) != t) throw std::logic_error("sampled error has the wrong rank");
  return {std::move(e), std::move(basis), std::move(y)};
}

Word random_error(const GabidulinCode& code, std::size_t t, Rng& rng) {
  return sample_error(code, t, rng).error;
}

Word random_message(const GabidulinCode& code, Rng& rng) {
  Word msg;
  msg.reserve(code.k());
  for (std::size_t i = 0; i < code.k(); ++i) msg.push_back(random_element(code.field(), rng));
  return msg;
}

Word add_words(std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw InvalidInput("word lengths differ");
  Word out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Word subtract_words(std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw InvalidInput("word lengths differ");
  Word out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Word zero_word(const FieldCtx& ctx, std::size_t n) { return Word(n, ctx.zero()); }

std::size_t rank_distance(std::span<const Element> a, std::span<const Element> b) {
  const Word diff = subtract_words(a, b);
  return rank_over_fq(diff);
}

}  // namespace rankdec
