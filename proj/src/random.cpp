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

#include "rankdec/random.hpp"

namespace rankdec {

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> streams) {
  std::uint64_t h = mix(seed);
  for (std::uint64_t s : streams) h = mix(h ^ mix(s + 0x632be59bd9b4e019ULL));
  return h;
}

Residue random_residue(Rng& rng, Residue q) {
  return std::uniform_int_distribution<Residue>(0, q - 1)(rng);
}

Element random_element(const FieldCtx& ctx, Rng& rng) {
  std::vector<Residue> c(ctx.m());
  for (auto& v : c) v = random_residue(rng, ctx.q());
  return ctx.from_coords(std::move(c));
}

Element random_nonzero_element(const FieldCtx& ctx, Rng& rng) {
  for (;;) {
    Element e = random_element(ctx, rng);
    if (!e.is_zero()) return e;
  }
}

LinPoly random_poly(const FieldCtx& ctx, int degree, Rng& rng) {
  if (degree < 0) return LinPoly(ctx);
  std::vector<Element> c;
  c.reserve(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c.push_back(random_element(ctx, rng));
  c.push_back(random_nonzero_element(ctx, rng));
  return LinPoly(ctx, std::move(c));
}

}  // namespace rankdec
