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

#ifndef RANKDEC_TESTS_ORACLES_HPP
#define RANKDEC_TESTS_ORACLES_HPP

// Test-only reference implementations. None of these share code with the
// library: binary fields are bitmasks with carry-less multiplication, and
// ranks and root counts come from exhaustive enumeration.

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "rankdec/field.hpp"
#include "rankdec/gabidulin.hpp"
#include "rankdec/linpoly.hpp"

namespace oracle {

/// GF(2^m) with elements as bitmasks; bit i is the coefficient of z^i.
struct Gf2m {
  unsigned m;
  std::uint32_t modulus;  // includes the z^m bit

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & (1u << m)) a ^= modulus;
    }
    return r;
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// a^(2^i).
  std::uint32_t frob(std::uint32_t a, unsigned i) const {
    for (unsigned k = 0; k < i; ++k) a = mul(a, a);
    return a;
  }
  std::uint32_t inv(std::uint32_t a) const { return pow(a, (1ull << m) - 2); }
  std::uint32_t size() const { return 1u << m; }
};

inline Gf2m gf16() { return {4, 0b10011}; }   // z^4 + z + 1
inline Gf2m gf64() { return {6, 0b1000011}; }  // z^6 + z + 1

inline std::uint32_t to_mask(const rankdec::Element& a) {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) r |= (a.coords()[i] & 1u) << i;
  return r;
}

inline rankdec::Element from_mask(const rankdec::FieldCtx& ctx, std::uint32_t v) {
  std::vector<rankdec::Residue> c(ctx.m());
  for (unsigned i = 0; i < ctx.m(); ++i) c[i] = (v >> i) & 1u;
  return ctx.from_coords(std::move(c));
}

/// L(a) over GF(2^m) on bitmask coefficients.
inline std::uint32_t eval(const Gf2m& f, const std::vector<std::uint32_t>& l, std::uint32_t a) {
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < l.size(); ++i) r ^= f.mul(l[i], f.frob(a, static_cast<unsigned>(i)));
  return r;
}

inline std::vector<std::uint32_t> masks(const rankdec::LinPoly& p) {
  std::vector<std::uint32_t> out;
  for (const auto& c : p.coeffs()) out.push_back(to_mask(c));
  return out;
}

/// Number of roots in GF(2^m), by evaluating at every element.
inline std::uint64_t count_roots(const Gf2m& f, const std::vector<std::uint32_t>& l) {
  std::uint64_t n = 0;
  for (std::uint32_t a = 0; a < f.size(); ++a) n += eval(f, l, a) == 0;
  return n;
}

/// Rank over F_2 of a set of bitmasks: log2 of the size of their span.
inline unsigned span_rank_f2(std::span<const std::uint32_t> v) {
  std::set<std::uint32_t> span{0};
  for (std::uint32_t x : v) {
    std::set<std::uint32_t> next = span;
    for (std::uint32_t s : span) next.insert(s ^ x);
    span.swap(next);
  }
  unsigned r = 0;
  while ((1ull << r) < span.size()) ++r;
  return r;
}

inline unsigned rank_norm_f2(std::span<const rankdec::Element> w) {
  std::vector<std::uint32_t> v;
  for (const auto& e : w) v.push_back(to_mask(e));
  return span_rank_f2(v);
}

}  // namespace oracle

#endif  // RANKDEC_TESTS_ORACLES_HPP
