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

#ifndef RANKDEC_LINPOLY_HPP
#define RANKDEC_LINPOLY_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "rankdec/field.hpp"

namespace rankdec {

/**
 * q-degree of a linearized polynomial. The zero polynomial has degree
 * minus infinity, which compares below every integer and absorbs addition.
 */
class QDegree {
 public:
  constexpr QDegree(int value) noexcept : value_(value) {}  // NOLINT(implicit)

  static constexpr QDegree minus_infinity() noexcept { return QDegree(kMinusInf); }

  constexpr bool is_finite() const noexcept { return value_ != kMinusInf; }
  /// Only meaningful when is_finite().
  constexpr int value() const noexcept { return value_; }

  friend constexpr auto operator<=>(QDegree, QDegree) = default;
  friend constexpr bool operator==(QDegree, QDegree) = default;

  friend constexpr QDegree operator+(QDegree a, QDegree b) noexcept {
    if (!a.is_finite() || !b.is_finite()) return minus_infinity();
    return QDegree(a.value_ + b.value_);
  }

 private:
  static constexpr int kMinusInf = std::numeric_limits<int>::min();
  int value_;
};

/// Thrown by root_space for the zero polynomial, whose roots are all of
/// F_{q^m}.
class WholeFieldRoots : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Linearized polynomial L(x) = sum_i l_i x^[i] over F_{q^m}, where
 * x^[i] = x^(q^i). Coefficients are kept in normal form: no trailing zeros.
 */
class LinPoly {
 public:
  /// The zero polynomial.
  explicit LinPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  LinPoly(const FieldCtx& ctx, std::vector<Element> coeffs);

  /// c x^[i].
  static LinPoly monomial(const Element& c, unsigned i);
  /// x^[i].
  static LinPoly monomial(const FieldCtx& ctx, unsigned i);

  const FieldCtx& field() const noexcept { return *ctx_; }
  std::span<const Element> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^[i]; zero past the degree.
  Element coeff(std::size_t i) const;
  /// Leading coefficient; throws InvalidInput for the zero polynomial.
  const Element& lead() const;

  QDegree q_degree() const noexcept {
    return coeffs_.empty() ? QDegree::minus_infinity()
                           : QDegree(static_cast<int>(coeffs_.size()) - 1);
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

  /// L(a) = sum_i l_i a^[i].
  Element operator()(const Element& a) const;

  LinPoly& operator+=(const LinPoly& rhs);
  LinPoly& operator-=(const LinPoly& rhs);
  friend LinPoly operator+(LinPoly a, const LinPoly& b) { return a += b; }
  friend LinPoly operator-(LinPoly a, const LinPoly& b) { return a -= b; }
  LinPoly operator-() const;

  friend bool operator==(const LinPoly& a, const LinPoly& b) {
    return a.ctx_->equals(*b.ctx_) && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  void check_same_field(const LinPoly& other) const;

  const FieldCtx* ctx_;
  std::vector<Element> coeffs_;
};

/// c * L, coefficient-wise.
LinPoly operator*(const Element& c, const LinPoly& poly);

/// F (x) G = F(G(x)): coefficient k is sum_{i+j=k} f_i g_j^[i].
LinPoly symbolic_product(const LinPoly& f, const LinPoly& g);

/// x^[k] (x) L, i.e. every coefficient raised to q^k and shifted up by k.
LinPoly frobenius_shift(const LinPoly& poly, unsigned k);

struct RightDivision {
  LinPoly quotient;
  LinPoly remainder;
};

/// A = Q (x) B + R with deg R < deg B. Throws DivisionByZero for B = 0.
RightDivision right_divide(const LinPoly& a, const LinPoly& b);

/// A mod x^[n]: drops every coefficient of index >= n.
LinPoly truncate(const LinPoly& a, std::size_t n);

/// Scales by the inverse leading coefficient; zero stays zero.
LinPoly make_monic(const LinPoly& poly);

/**
 * F_q-basis of {a : L(a) = 0}, the kernel of the m x m coordinate matrix of
 * L. Throws WholeFieldRoots for L = 0.
 */
std::vector<Element> root_space(const LinPoly& poly);

/**
 * Monic polynomial of q-degree |basis| whose roots are exactly the F_q-span
 * of basis. Throws InvalidInput if basis is empty or F_q-dependent.
 */
LinPoly min_subspace_poly(std::span<const Element> basis);

}  // namespace rankdec

#endif  // RANKDEC_LINPOLY_HPP
