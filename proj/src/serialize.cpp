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

#include "rankdec/serialize.hpp"

#include <limits>
#include <vector>

namespace rankdec {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("JSON object lacks \"") + key + "\"");
  }
  return j.at(key);
}

std::uint64_t unsigned_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned()) {
    throw InvalidInput(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

Element element_from_json(const FieldCtx& ctx, const Json& j) {
  if (!j.is_string()) throw InvalidInput("element must be a string \"c0,...,c_{m-1}\"");
  return parse_element(ctx, j.get<std::string>());
}

}  // namespace

Json to_json(const FieldCtx& ctx) {
  Json j;
  j["q"] = ctx.q();
  j["m"] = ctx.m();
  j["modulus"] = std::vector<Residue>(ctx.modulus().begin(), ctx.modulus().end());
  return j;
}

FieldPtr field_from_json(const Json& j) {
  const std::uint64_t q = unsigned_member(j, "q");
  const std::uint64_t m = unsigned_member(j, "m");
  if (q > std::numeric_limits<Residue>::max() || m > 64) {
    throw InvalidInput("field parameters out of range");
  }
  if (!j.contains("modulus")) {
    return FieldCtx::create(static_cast<Residue>(q), static_cast<unsigned>(m));
  }
  const Json& mod = j.at("modulus");
  if (!mod.is_array()) throw InvalidInput("\"modulus\" must be an array of integers");
  std::vector<Residue> coeffs;
  for (const auto& c : mod) {
    if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= q) {
      throw InvalidInput("modulus coefficients must be integers in [0, q)");
    }
    coeffs.push_back(c.get<Residue>());
  }
  return FieldCtx::create(static_cast<Residue>(q), static_cast<unsigned>(m), std::move(coeffs));
}

std::string to_text(const LinPoly& poly) {
  std::string out;
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(poly.coeffs()[i]);
  }
  return out;
}

LinPoly parse_poly(const FieldCtx& ctx, std::string_view text) {
  if (text.empty()) return LinPoly(ctx);
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    parts.push_back(text.substr(pos, comma == text.npos ? text.npos : comma - pos));
    if (comma == text.npos) break;
    pos = comma + 1;
  }
  const std::size_t m = ctx.m();
  if (parts.size() % m != 0) {
    throw InvalidInput("polynomial text must hold a multiple of m residues");
  }
  std::vector<Element> coeffs;
  for (std::size_t i = 0; i < parts.size(); i += m) {
    const char* begin = parts[i].data();
    const char* end = parts[i + m - 1].data() + parts[i + m - 1].size();
    coeffs.push_back(parse_element(ctx, std::string_view(begin, static_cast<std::size_t>(end - begin))));
  }
  return LinPoly(ctx, std::move(coeffs));
}

Json to_json(const LinPoly& poly) {
  Json j = Json::array();
  for (const auto& c : poly.coeffs()) j.push_back(to_string(c));
  return j;
}

LinPoly poly_from_json(const FieldCtx& ctx, const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be an array of element strings");
  std::vector<Element> coeffs;
  for (const auto& c : j) coeffs.push_back(element_from_json(ctx, c));
  return LinPoly(ctx, std::move(coeffs));
}

Json word_to_json(std::span<const Element> word) {
  Json j = Json::array();
  for (const auto& e : word) j.push_back(to_string(e));
  return j;
}

Word word_from_json(const FieldCtx& ctx, const Json& j) {
  if (!j.is_array()) throw InvalidInput("word must be an array of element strings");
  Word w;
  for (const auto& e : j) w.push_back(element_from_json(ctx, e));
  return w;
}

Json to_json(const GabidulinCode& code) {
  Json j;
  j["field"] = to_json(code.field());
  j["n"] = code.n();
  j["k"] = code.k();
  j["h"] = word_to_json(code.h());
  return j;
}

GabidulinCode code_from_json(const Json& j) {
  FieldPtr field = field_from_json(member(j, "field"));
  const std::uint64_t n = unsigned_member(j, "n");
  const std::uint64_t k = unsigned_member(j, "k");
  if (!j.contains("h")) return GabidulinCode::with_default_h(field, n, k);
  Word h = word_from_json(*field, j.at("h"));
  return GabidulinCode(field, n, k, std::move(h));
}

Json degree_json(const LinPoly& poly) {
  if (poly.is_zero()) return nullptr;
  return poly.q_degree().value();
}

Json to_json(const KeyEqBasis& basis) {
  Json j;
  j["tau"] = basis.tau;
  j["tau0"] = basis.tau0;
  Json pairs = Json::array();
  for (const auto& pr : basis.pairs) {
    Json p;
    p["delta"] = to_json(pr.delta);
    p["p"] = to_json(pr.p);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const UniqueSolution& sol) {
  Json j;
  j["status"] = sol.ok() ? "solved" : "improper";
  j["lambda"] = to_json(sol.lambda);
  j["omega"] = to_json(sol.omega);
  j["lambda_degree"] = degree_json(sol.lambda);
  j["root_space_dim"] = sol.root_space_dim;
  j["seea_steps"] = sol.seea_steps;
  return j;
}

Json to_json(const SeeaTrace& trace) {
  Json steps = Json::array();
  for (const auto& st : trace.steps) {
    Json s;
    s["i"] = st.index;
    s["Q"] = to_json(st.quotient);
    s["R"] = to_json(st.remainder);
    s["U"] = to_json(st.u);
    s["V"] = to_json(st.v);
    s["degR"] = degree_json(st.remainder);
    s["degU"] = degree_json(st.u);
    steps.push_back(std::move(s));
  }
  return steps;
}

Json to_json(const DecodeDiagnostics& diag) {
  Json j;
  j["syndrome_zero"] = diag.syndrome_zero;
  j["lambda_degree"] = diag.lambda_degree;
  j["root_space_dim"] = diag.root_space_dim;
  j["basis_size"] = diag.basis_size;
  j["tail_filled"] = diag.tail_filled;
  j["basis_multiplications"] = diag.basis_multiplications;
  j["combinations"] = diag.combinations;
  j["proper_lambdas"] = diag.proper_lambdas;
  j["recovered"] = diag.recovered;
  if (!diag.failure.empty()) j["failure"] = diag.failure;
  return j;
}

Json to_json(const DecodeOutcome& outcome) {
  Json j;
  j["kind"] = to_string(outcome.kind);
  Json words = Json::array();
  for (const auto& w : outcome.codewords) words.push_back(word_to_json(w));
  j["codewords"] = std::move(words);
  j["diagnostics"] = to_json(outcome.diagnostics);
  return j;
}

}  // namespace rankdec
