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

#include "rankdec/linpoly.hpp"

#include <utility>

#include "rankdec/matrix.hpp"

namespace rankdec {

LinPoly::LinPoly(const FieldCtx& ctx, std::vector<Element> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {
  require_field(ctx, coeffs_);
  normalize();
}

LinPoly LinPoly::monomial(const Element& c, unsigned i) {
  std::vector<Element> coeffs(i + 1, c.field().zero());
  coeffs[i] = c;
  return LinPoly(c.field(), std::move(coeffs));
}

LinPoly LinPoly::monomial(const FieldCtx& ctx, unsigned i) {
  return monomial(ctx.one(), i);
}

Element LinPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ctx_->zero();
}

const Element& LinPoly::lead() const {
  if (coeffs_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void LinPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void LinPoly::check_same_field(const LinPoly& other) const {
  if (!ctx_->equals(*other.ctx_)) throw ContextError("polynomials belong to different fields");
}

Element LinPoly::operator()(const Element& a) const {
  require_field(*ctx_, std::span(&a, 1));
  Element acc = ctx_->zero();
  Element power = a;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = frobenius(power, 1);
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * power;
  }
  return acc;
}

LinPoly& LinPoly::operator+=(const LinPoly& rhs) {
  check_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ctx_->zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

LinPoly& LinPoly::operator-=(const LinPoly& rhs) {
  check_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ctx_->zero());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

LinPoly LinPoly::operator-() const {
  LinPoly out(*ctx_);
  out.coeffs_.reserve(coeffs_.size());
  for (const Element& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

LinPoly operator*(const Element& c, const LinPoly& poly) {
  require_field(poly.field(), std::span(&c, 1));
  if (c.is_zero()) return LinPoly(poly.field());
  std::vector<Element> coeffs;
  coeffs.reserve(poly.coeffs().size());
  for (const Element& l : poly.coeffs()) coeffs.push_back(c * l);
  return LinPoly(poly.field(), std::move(coeffs));
}

LinPoly symbolic_product(const LinPoly& f, const LinPoly& g) {
  if (!f.field().equals(g.field())) throw ContextError("polynomials belong to different fields");
  const FieldCtx& ctx = f.field();
  if (f.is_zero() || g.is_zero()) return LinPoly(ctx);
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  std::vector<Element> out(fc.size() + gc.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i].is_zero()) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) {
      if (gc[j].is_zero()) continue;
      out[i + j] += fc[i] * frobenius(gc[j], static_cast<long>(i));
    }
  }
  return LinPoly(ctx, std::move(out));
}

LinPoly frobenius_shift(const LinPoly& poly, unsigned k) {
  const FieldCtx& ctx = poly.field();
  if (poly.is_zero()) return LinPoly(ctx);
  std::vector<Element> out(k, ctx.zero());
  out.reserve(k + poly.coeffs().size());
  for (const Element& c : poly.coeffs()) out.push_back(frobenius(c, static_cast<long>(k)));
  return LinPoly(ctx, std::move(out));
}

RightDivision right_divide(const LinPoly& a, const LinPoly& b) {
  if (!a.field().equals(b.field())) throw ContextError("polynomials belong to different fields");
  if (b.is_zero()) throw DivisionByZero("right division by the zero polynomial");
  const FieldCtx& ctx = a.field();
  const std::size_t db = static_cast<std::size_t>(b.q_degree().value());
  if (a.q_degree() < b.q_degree()) return {LinPoly(ctx), a};

  std::vector<Element> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t top = rem.size() - 1;
  std::vector<Element> quot(top - db + 1, ctx.zero());
  const Element lead_inv = inverse(b.lead());
  const auto bc = b.coeffs();

  // Leading-term elimination: c x^[k] (x) B has leading coefficient
  // c * lead(B)^[k], so c = lead(R) * (lead(B)^-1)^[k].
  for (std::size_t deg = top + 1; deg-- > db;) {
    if (rem[deg].is_zero()) continue;
    const std::size_t k = deg - db;
    const Element c = rem[deg] * frobenius(lead_inv, static_cast<long>(k));
    for (std::size_t j = 0; j < db; ++j) {
      if (bc[j].is_zero()) continue;
      rem[j + k] -= c * frobenius(bc[j], static_cast<long>(k));
    }
    rem[deg] = ctx.zero();
    quot[k] = c;
  }
  rem.resize(db, ctx.zero());
  return {LinPoly(ctx, std::move(quot)), LinPoly(ctx, std::move(rem))};
}

LinPoly truncate(const LinPoly& a, std::size_t n) {
  if (a.coeffs().size() <= n) return a;
  return LinPoly(a.field(), std::vector<Element>(a.coeffs().begin(),
                                                 a.coeffs().begin() + static_cast<std::ptrdiff_t>(n)));
}

LinPoly make_monic(const LinPoly& poly) {
  if (poly.is_zero() || poly.is_monic()) return poly;
  return inverse(poly.lead()) * poly;
}

std::vector<Element> root_space(const LinPoly& poly) {
  if (poly.is_zero()) throw WholeFieldRoots("every element is a root of the zero polynomial");
  const FieldCtx& ctx = poly.field();
  const unsigned m = ctx.m();
  // Column j: coordinates of L(z^j).
  MatrixFq map(ctx.q(), m, m);
  for (unsigned j = 0; j < m; ++j) {
    std::vector<Residue> basis(m, 0);
    basis[j] = 1;
    const Element image = poly(ctx.from_coords(std::move(basis)));
    const auto c = image.coords();
    for (unsigned i = 0; i < m; ++i) map.at(i, j) = c[i];
  }
  std::vector<Element> roots;
  for (auto& v : kernel_fq(map)) roots.push_back(ctx.from_coords(std::move(v)));
  return roots;
}

LinPoly min_subspace_poly(std::span<const Element> basis) {
  if (basis.empty()) throw InvalidInput("subspace basis must be nonempty");
  const FieldCtx& ctx = basis.front().field();
  require_field(ctx, basis);
  if (rank_over_fq(basis) != basis.size()) {
    throw InvalidInput("subspace basis is linearly dependent over F_q");
  }
  // Lambda_j = (x^[1] - v^(q-1) x^[0]) (x) Lambda_{j-1} with v = Lambda_{j-1}(E_j):
  // the new factor kills v, hence E_j, and keeps the earlier roots.
  LinPoly lambda = LinPoly::monomial(ctx, 0);
  for (const Element& e : basis) {
    const Element v = lambda(e);
    const Element shift = power(v, ctx.q() - 1);
    const LinPoly factor(ctx, {-shift, ctx.one()});
    lambda = symbolic_product(factor, lambda);
  }
  return lambda;
}

}  // namespace rankdec
