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

#include "rankdec/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <utility>

namespace rankdec {

namespace {

// Dense polynomials over F_q, ascending coefficients, trimmed (no trailing
// zeros; the zero polynomial is empty).
using Poly = std::vector<Residue>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Residue pow_mod(Residue base, std::uint64_t e, Residue q) {
  std::uint64_t result = 1 % q;
  std::uint64_t b = base % q;
  while (e > 0) {
    if (e & 1) result = result * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

bool is_prime(Residue q) {
  if (q < 2) return false;
  for (Residue f = 2; static_cast<std::uint64_t>(f) * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

// Remainder of a modulo the monic polynomial g.
Poly rem_monic(Poly a, const Poly& g, Residue q) {
  const std::size_t dg = g.size() - 1;
  trim(a);
  while (a.size() > dg) {
    const Residue c = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const Residue t = static_cast<Residue>(static_cast<std::uint64_t>(c) * g[i] % q);
      a[shift + i] = a[shift + i] >= t ? a[shift + i] - t : a[shift + i] + q - t;
    }
    trim(a);
  }
  return a;
}

// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, Residue q) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Residue lead_inv = pow_mod(b.back(), q - 2, q);
  Poly quot(a.size() > db ? a.size() - db : 0, 0);
  while (a.size() > db) {
    const Residue c = static_cast<Residue>(static_cast<std::uint64_t>(a.back()) * lead_inv % q);
    const std::size_t shift = a.size() - 1 - db;
    quot[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) {
      const Residue t = static_cast<Residue>(static_cast<std::uint64_t>(c) * b[i] % q);
      a[shift + i] = a[shift + i] >= t ? a[shift + i] - t : a[shift + i] + q - t;
    }
    trim(a);
  }
  trim(quot);
  return {std::move(quot), std::move(a)};
}

Poly poly_mul(const Poly& a, const Poly& b, Residue q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<Residue>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % q);
    }
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b, Residue q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + q - b[i];
  }
  trim(a);
  return a;
}

std::uint64_t checked_power(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

}  // namespace

bool is_irreducible(Residue q, std::span<const Residue> poly) {
  Poly p(poly.begin(), poly.end());
  trim(p);
  if (p.size() < 2) return false;
  const std::size_t deg = p.size() - 1;
  for (std::size_t dg = 1; dg <= deg / 2; ++dg) {
    // All monic g of degree dg, lower coefficients enumerated in base q.
    const std::uint64_t count = checked_power(q, static_cast<unsigned>(dg));
    Poly g(dg + 1, 0);
    g[dg] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < dg; ++i) {
        g[i] = static_cast<Residue>(v % q);
        v /= q;
      }
      if (rem_monic(p, g, q).empty()) return false;
    }
  }
  return true;
}

FieldPtr FieldCtx::create(Residue q, unsigned m, std::vector<Residue> modulus) {
  // Private constructor, so no make_shared.
  return FieldPtr(new FieldCtx(q, m, std::move(modulus)));
}

FieldPtr FieldCtx::create(Residue q, unsigned m) {
  if (!is_prime(q) || q > 65521) throw InvalidInput("q must be a prime below 2^16");
  if (m == 0) throw InvalidInput("extension degree m must be at least 1");
  const std::uint64_t count = checked_power(q, m);
  Poly candidate(m + 1, 0);
  candidate[m] = 1;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < m; ++i) {
      candidate[i] = static_cast<Residue>(v % q);
      v /= q;
    }
    if (candidate[0] != 0 && is_irreducible(q, candidate)) {
      return create(q, m, candidate);
    }
  }
  // m = 1: z - c for any c works, but the loop above already returns z + 1.
  throw InvalidInput("no irreducible modulus found");
}

FieldCtx::FieldCtx(Residue q, unsigned m, std::vector<Residue> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(q) || q > 65521) throw InvalidInput("q must be a prime below 2^16");
  if (m == 0) throw InvalidInput("extension degree m must be at least 1");
  if (modulus_.size() != m + 1) {
    throw InvalidInput("modulus must have exactly m+1 coefficients");
  }
  for (Residue c : modulus_) {
    if (c >= q) throw InvalidInput("modulus coefficient out of range [0, q)");
  }
  if (modulus_.back() != 1) throw InvalidInput("modulus must be monic");
  if (!is_irreducible(q, modulus_)) throw InvalidInput("modulus is reducible over F_q");
  order_ = checked_power(q, m);

  // Frobenius tables: column k of map i is z^(k q^i).
  frobenius_.assign(m, std::vector<Residue>(static_cast<std::size_t>(m) * m, 0));
  for (unsigned k = 0; k < m; ++k) frobenius_[0][k * m + k] = 1;
  if (m > 1) {
    Poly z(m, 0);
    z[1] = 1;
    // z^q by square-and-multiply on raw coordinates.
    Poly zq(m, 0);
    zq[0] = 1;
    {
      Poly base = z;
      std::uint64_t e = q;
      while (e > 0) {
        if (e & 1) zq = multiply_coords(zq, base);
        base = multiply_coords(base, base);
        e >>= 1;
      }
    }
    Poly zkq(m, 0);
    zkq[0] = 1;
    for (unsigned k = 0; k < m; ++k) {
      std::copy(zkq.begin(), zkq.end(), frobenius_[1].begin() + k * m);
      zkq = multiply_coords(zkq, zq);
    }
    for (unsigned i = 2; i < m; ++i) {
      for (unsigned k = 0; k < m; ++k) {
        for (unsigned j = 0; j < m; ++j) {
          const Residue c = frobenius_[i - 1][k * m + j];
          if (c == 0) continue;
          for (unsigned r = 0; r < m; ++r) {
            frobenius_[i][k * m + r] =
                add_q(frobenius_[i][k * m + r], mul_q(c, frobenius_[1][j * m + r]));
          }
        }
      }
    }
  }
}

std::vector<Residue> FieldCtx::multiply_coords(std::span<const Residue> a,
                                               std::span<const Residue> b) const {
  const std::size_t m = m_;
  std::vector<std::uint64_t> acc(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    }
    // Keep the accumulator bounded for large q.
    if (q_ > 256) {
      for (auto& v : acc) v %= q_;
    }
  }
  for (auto& v : acc) v %= q_;
  // Reduce degrees 2m-2 .. m using z^m = -(modulus_0 + ... + modulus_{m-1} z^{m-1}).
  for (std::size_t deg = 2 * m - 2; deg >= m; --deg) {
    const std::uint64_t c = acc[deg] % q_;
    acc[deg] = 0;
    if (c != 0) {
      for (std::size_t i = 0; i < m; ++i) {
        acc[deg - m + i] = (acc[deg - m + i] + c * (q_ - modulus_[i])) % q_;
      }
    }
    if (deg == m) break;
  }
  std::vector<Residue> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<Residue>(acc[i] % q_);
  return out;
}

Residue FieldCtx::inv_q(Residue a) const {
  if (a % q_ == 0) throw DivisionByZero("inverse of zero in F_q");
  return pow_mod(a, q_ - 2, q_);
}

Element FieldCtx::zero() const { return Element(*this); }

Element FieldCtx::one() const {
  std::vector<Residue> c(m_, 0);
  c[0] = 1;
  return Element(*this, std::move(c));
}

Element FieldCtx::generator() const {
  std::vector<Residue> c(m_, 0);
  if (m_ == 1) {
    // z is the root of z + modulus_0, i.e. -modulus_0.
    c[0] = sub_q(0, modulus_[0]);
  } else {
    c[1] = 1;
  }
  return Element(*this, std::move(c));
}

Element FieldCtx::from_coords(std::vector<Residue> coords) const {
  return Element(*this, std::move(coords));
}

Element FieldCtx::from_residue(Residue c) const {
  std::vector<Residue> v(m_, 0);
  v[0] = c % q_;
  return Element(*this, std::move(v));
}

Element FieldCtx::from_index(std::uint64_t index) const {
  std::vector<Residue> c(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = static_cast<Residue>(index % q_);
    index /= q_;
  }
  return Element(*this, std::move(c));
}

std::uint64_t FieldCtx::index_of(const Element& a) const {
  std::uint64_t idx = 0;
  const auto c = a.coords();
  for (unsigned i = m_; i-- > 0;) idx = idx * q_ + c[i];
  return idx;
}

bool FieldCtx::equals(const FieldCtx& other) const noexcept {
  return this == &other ||
         (q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_);
}

Element::Element(const FieldCtx& ctx) : ctx_(&ctx), coords_(ctx.m(), 0) {}

Element::Element(const FieldCtx& ctx, std::vector<Residue> coords)
    : ctx_(&ctx), coords_(std::move(coords)) {
  if (coords_.size() != ctx.m()) {
    throw InvalidInput("element needs exactly m coordinates");
  }
  for (Residue c : coords_) {
    if (c >= ctx.q()) throw InvalidInput("coordinate out of range [0, q)");
  }
}

bool Element::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
}

bool Element::is_one() const noexcept {
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](Residue c) { return c == 0; });
}

void Element::check_same_field(const Element& other) const {
  if (!ctx_->equals(*other.ctx_)) throw ContextError("elements belong to different fields");
}

Element& Element::operator+=(const Element& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = ctx_->add_q(coords_[i], rhs.coords_[i]);
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = ctx_->sub_q(coords_[i], rhs.coords_[i]);
  }
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  check_same_field(rhs);
  ++thread_op_counts().multiplications;
  coords_ = ctx_->multiply_coords(coords_, rhs.coords_);
  return *this;
}

Element& Element::operator/=(const Element& rhs) {
  check_same_field(rhs);
  return *this *= inverse(rhs);
}

Element Element::operator-() const {
  Element out(*ctx_);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] = ctx_->sub_q(0, coords_[i]);
  }
  return out;
}

Element Element::scaled(Residue c) const {
  Element out(*ctx_);
  c %= ctx_->q();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] = ctx_->mul_q(c, coords_[i]);
  }
  return out;
}

Element frobenius(const Element& a, long i) {
  const FieldCtx& f = *a.ctx_;
  const long m = static_cast<long>(f.m());
  const long power = ((i % m) + m) % m;
  ++thread_op_counts().frobenius;
  if (power == 0) return a;
  const auto& table = f.frobenius_[static_cast<std::size_t>(power)];
  const std::size_t mm = f.m();
  std::vector<Residue> out(mm, 0);
  for (std::size_t k = 0; k < mm; ++k) {
    const Residue c = a.coords_[k];
    if (c == 0) continue;
    for (std::size_t r = 0; r < mm; ++r) {
      out[r] = f.add_q(out[r], f.mul_q(c, table[k * mm + r]));
    }
  }
  return Element(f, std::move(out));
}

Element inverse(const Element& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in F_{q^m}");
  const FieldCtx& f = *a.ctx_;
  const Residue q = f.q();
  ++thread_op_counts().inversions;
  // Extended Euclid on a(z) and the modulus: s1 * a = r1 (mod modulus).
  Poly r0(f.modulus().begin(), f.modulus().end());
  Poly r1 = a.coords_;
  trim(r1);
  Poly s0;
  Poly s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1, q);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, q), q);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const Residue c = pow_mod(r0[0], q - 2, q);
  Poly inv = rem_monic(s0, Poly(f.modulus().begin(), f.modulus().end()), q);
  std::vector<Residue> out(f.m(), 0);
  for (std::size_t i = 0; i < inv.size(); ++i) out[i] = f.mul_q(inv[i], c);
  return Element(f, std::move(out));
}

Element power(const Element& a, std::uint64_t e) {
  Element result = a.field().one();
  Element base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<Residue> expand(const Element& a) {
  return {a.coords().begin(), a.coords().end()};
}

std::string to_string(const Element& a) {
  std::string out;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a.coords()[i]);
  }
  return out;
}

Element parse_element(const FieldCtx& ctx, std::string_view text) {
  std::vector<Residue> coords;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view digit = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    Residue v = 0;
    const auto [end, ec] = std::from_chars(digit.data(), digit.data() + digit.size(), v);
    if (digit.empty() || ec != std::errc() || end != digit.data() + digit.size()) {
      throw InvalidInput("malformed element text: \"" + std::string(text) + "\"");
    }
    coords.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Element(ctx, std::move(coords));
}

void require_field(const FieldCtx& ctx, std::span<const Element> elements) {
  for (const Element& e : elements) {
    if (!ctx.equals(e.field())) throw ContextError("element belongs to a different field");
  }
}

OpCounts& thread_op_counts() noexcept {
  thread_local OpCounts counts;
  return counts;
}

}  // namespace rankdec
