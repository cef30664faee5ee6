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

#ifndef RANKDEC_SERIALIZE_HPP
#define RANKDEC_SERIALIZE_HPP

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rankdec/decoder.hpp"
#include "rankdec/gabidulin.hpp"
#include "rankdec/keyeq.hpp"
#include "rankdec/linpoly.hpp"
#include "rankdec/seea.hpp"

/**
 * @file serialize.hpp
 * JSON and text forms.
 *
 *   element   "c0,c1,...,c_{m-1}"  (coordinates over F_q, constant first)
 *   field     {"q": 2, "m": 4, "modulus": [1, 1, 0, 0, 1]}
 *   poly      ["e0", "e1", ...]    (coefficient of x^[i] at position i)
 *   code      {"field": field, "n": 4, "k": 1, "h": [element, ...]}
 *   word      [element, ...]
 *
 * Keys are emitted in the order shown. Parsers throw InvalidInput on any
 * shape or range problem.
 */

namespace rankdec {

using Json = nlohmann::ordered_json;

Json to_json(const FieldCtx& ctx);
FieldPtr field_from_json(const Json& j);

/// Flat text form: the element strings of l_0..l_t joined by commas, so
/// m * (t+1) residues in total. The zero polynomial is "".
std::string to_text(const LinPoly& poly);
LinPoly parse_poly(const FieldCtx& ctx, std::string_view text);

Json to_json(const LinPoly& poly);
LinPoly poly_from_json(const FieldCtx& ctx, const Json& j);

Json word_to_json(std::span<const Element> word);
Word word_from_json(const FieldCtx& ctx, const Json& j);

Json to_json(const GabidulinCode& code);
GabidulinCode code_from_json(const Json& j);

/// q-degree, or null for the zero polynomial.
Json degree_json(const LinPoly& poly);

Json to_json(const KeyEqBasis& basis);
Json to_json(const UniqueSolution& sol);
/// One object per step: {i, Q, R, U, V, degR, degU}.
Json to_json(const SeeaTrace& trace);
Json to_json(const DecodeDiagnostics& diag);
Json to_json(const DecodeOutcome& outcome);

}  // namespace rankdec

#endif  // RANKDEC_SERIALIZE_HPP
