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

#ifndef RANKDEC_RANDOM_HPP
#define RANKDEC_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "rankdec/field.hpp"
#include "rankdec/linpoly.hpp"

namespace rankdec {

using Rng = std::mt19937_64;

/// Mixes a base seed with stream indices (trial number, rank, ...) so that
/// every stream is reproducible on its own, independent of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> streams);

Residue random_residue(Rng& rng, Residue q);

/// Uniform over F_{q^m}.
Element random_element(const FieldCtx& ctx, Rng& rng);
Element random_nonzero_element(const FieldCtx& ctx, Rng& rng);

/// Uniform coefficients up to x^[degree]; the leading one is forced nonzero.
LinPoly random_poly(const FieldCtx& ctx, int degree, Rng& rng);

}  // namespace rankdec

#endif  // RANKDEC_RANDOM_HPP
