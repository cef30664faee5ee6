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

#ifndef RANKDEC_FIELD_HPP
#define RANKDEC_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/**
 * @file field.hpp
 * Exact arithmetic in F_q (q prime) and in the extension F_{q^m}.
 *
 * An element of F_{q^m} is stored as its coordinate vector over F_q with
 * respect to the polynomial basis {1, z, ..., z^{m-1}}, where z is a root of
 * the context's monic irreducible modulus. Elements keep a non-owning pointer
 * to their FieldCtx; the context must outlive every element built from it,
 * which is why contexts are only handed out as shared pointers.
 */

namespace rankdec {

/// Residue modulo the prime q, always in [0, q).
using Residue = std::uint32_t;

/// Operands from different (non-identical) field contexts were combined.
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A precondition on user-supplied data does not hold.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Element;
class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/**
 * Field tower F_q < F_{q^m}. Immutable after construction, so one context
 * can be shared freely across threads.
 */
class FieldCtx {
 public:
  /// Validates that q is prime and that the modulus (ascending coefficients,
  /// length m+1) is monic and irreducible over F_q.
  static FieldPtr create(Residue q, unsigned m, std::vector<Residue> modulus);

  /// Uses the first irreducible modulus in increasing base-q order of its
  /// lower coefficients (z^4+z+1 for F_16, z^6+z+1 for F_64).
  static FieldPtr create(Residue q, unsigned m);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  Residue q() const noexcept { return q_; }
  unsigned m() const noexcept { return m_; }
  std::span<const Residue> modulus() const noexcept { return modulus_; }

  /// q^m, or UINT64_MAX when it does not fit.
  std::uint64_t order() const noexcept { return order_; }

  Element zero() const;
  Element one() const;
  /// The class of z, a root of the modulus.
  Element generator() const;
  Element from_coords(std::vector<Residue> coords) const;
  /// Embeds c in F_q as an element of F_{q^m}.
  Element from_residue(Residue c) const;
  /// Element whose coordinates are the base-q digits of index (digit 0 is
  /// the constant coordinate). Bijective on [0, q^m).
  Element from_index(std::uint64_t index) const;
  std::uint64_t index_of(const Element& a) const;

  /// Same q, m and modulus; elements of equal contexts may be mixed.
  bool equals(const FieldCtx& other) const noexcept;

  Residue add_q(Residue a, Residue b) const noexcept {
    const Residue s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub_q(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  Residue mul_q(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  Residue inv_q(Residue a) const;

 private:
  friend class Element;
  friend Element frobenius(const Element& a, long i);
  friend Element inverse(const Element& a);

  FieldCtx(Residue q, unsigned m, std::vector<Residue> modulus);

  std::vector<Residue> multiply_coords(std::span<const Residue> a,
                                       std::span<const Residue> b) const;

  Residue q_;
  unsigned m_;
  std::vector<Residue> modulus_;
  std::uint64_t order_;
  // frobenius_[i][k * m + c]: coordinate c of z^(k q^i).
  std::vector<std::vector<Residue>> frobenius_;
};

/// True if the polynomial over F_q (ascending coefficients, monic or not)
/// of degree >= 1 has no factor of degree in [1, deg/2].
bool is_irreducible(Residue q, std::span<const Residue> poly);

/// Value type for an element of F_{q^m}.
class Element {
 public:
  /// Zero of the given field.
  explicit Element(const FieldCtx& ctx);
  Element(const FieldCtx& ctx, std::vector<Residue> coords);

  const FieldCtx& field() const noexcept { return *ctx_; }
  std::span<const Residue> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const Element& rhs) { return lhs *= rhs; }
  friend Element operator/(Element lhs, const Element& rhs) { return lhs /= rhs; }
  Element operator-() const;

  /// Scaling by an F_q residue.
  Element scaled(Residue c) const;

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.coords_ == b.coords_ && a.ctx_->equals(*b.ctx_);
  }
  /// Lexicographic order on coordinates; only meaningful within one field.
  friend bool operator<(const Element& a, const Element& b) noexcept {
    return a.coords_ < b.coords_;
  }

 private:
  friend Element frobenius(const Element& a, long i);
  friend Element inverse(const Element& a);

  void check_same_field(const Element& other) const;

  const FieldCtx* ctx_;
  std::vector<Residue> coords_;
};

/// a^(q^i); i is taken modulo m, negative i applies the inverse automorphism.
Element frobenius(const Element& a, long i);

/// Multiplicative inverse; throws DivisionByZero for a = 0.
Element inverse(const Element& a);

/// a^e by square-and-multiply.
Element power(const Element& a, std::uint64_t e);

/// Coordinates of a over F_q in the polynomial basis.
std::vector<Residue> expand(const Element& a);

/// Text form "c0,c1,...,c_{m-1}" of the coordinates.
std::string to_string(const Element& a);

/// Inverse of to_string; InvalidInput on malformed text or wrong length.
Element parse_element(const FieldCtx& ctx, std::string_view text);

/// Throws ContextError unless every element lives in a field equal to ctx.
void require_field(const FieldCtx& ctx, std::span<const Element> elements);

/**
 * Per-thread tallies of F_{q^m} operations. Only the public operators count;
 * context setup and F_q arithmetic do not.
 */
struct OpCounts {
  std::uint64_t multiplications = 0;
  std::uint64_t inversions = 0;
  std::uint64_t frobenius = 0;
};

OpCounts& thread_op_counts() noexcept;

/// Measures the operations performed on this thread since construction.
class OpCounter {
 public:
  OpCounter() noexcept : start_(thread_op_counts()) {}
  OpCounts elapsed() const noexcept {
    const OpCounts& now = thread_op_counts();
    return {now.multiplications - start_.multiplications,
            now.inversions - start_.inversions, now.frobenius - start_.frobenius};
  }

 private:
  OpCounts start_;
};

}  // namespace rankdec

#endif  // RANKDEC_FIELD_HPP
