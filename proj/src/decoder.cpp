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

#include "rankdec/decoder.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <utility>

namespace rankdec {

namespace {

std::string word_key(std::span<const Element> w) {
  std::string key;
  for (const auto& e : w) {
    key += to_string(e);
    key += ';';
  }
  return key;
}

// Sorts by serialization and drops duplicates.
void canonicalize(std::vector<Word>& words) {
  std::vector<std::pair<std::string, Word>> keyed;
  keyed.reserve(words.size());
  for (auto& w : words) keyed.emplace_back(word_key(w), std::move(w));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  words.clear();
  for (auto& kv : keyed) words.push_back(std::move(kv.second));
}

// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

void check_received(const GabidulinCode& code, std::span<const Element> received) {
  if (received.size() != code.n()) throw InvalidInput("received word must have length n");
  require_field(code.field(), received);
}

struct Partial {
  std::vector<Word> codewords;
  std::uint64_t proper = 0;
  std::uint64_t recovered = 0;
};

}  // namespace

RecoveredError recover_error(const GabidulinCode& code, const LinPoly& lambda, const Syndrome& s) {
  const FieldCtx& ctx = code.field();
  if (!lambda.is_monic() || lambda.q_degree() < QDegree(1)) {
    throw InvalidInput("recover_error needs a monic Lambda of q-degree >= 1");
  }
  const std::size_t t = static_cast<std::size_t>(lambda.q_degree().value());
  const std::vector<Element> roots = root_space(lambda);
  if (roots.size() != t) return {RecoveryStatus::improper_lambda, {}};

  const std::size_t n = code.n();
  const std::size_t m = ctx.m();
  const std::size_t rows = code.d() - 1;
  const MatrixFqm& h = code.parity_check_matrix();

  // Column (j, k) holds the coordinates of E_j h_k^[l], stacked over l.
  MatrixFq system(ctx.q(), rows * m, t * n);
  std::vector<Residue> rhs(rows * m, 0);
  for (std::size_t l = 0; l < rows; ++l) {
    const std::vector<Residue> sl = expand(s.coeff(l));
    std::copy(sl.begin(), sl.end(), rhs.begin() + static_cast<std::ptrdiff_t>(l * m));
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::vector<Residue> c = expand(roots[j] * h.at(l, k));
        for (std::size_t r = 0; r < m; ++r) system.at(l * m + r, j * n + k) = c[r];
      }
    }
  }
  const auto y = solve_fq(system, rhs);
  if (!y) return {RecoveryStatus::inconsistent, {}};

  Word e = zero_word(ctx, n);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Residue c = (*y)[j * n + k];
      if (c != 0) e[k] += roots[j].scaled(c);
    }
  }
  if (!(code.syndrome(e) == s)) return {RecoveryStatus::inconsistent, {}};
  return {RecoveryStatus::ok, std::move(e)};
}

DecodeOutcome decode_bmd(const GabidulinCode& code, std::span<const Element> received) {
  check_received(code, received);
  DecodeOutcome out{OutcomeKind::failure, {}, {}};
  const Syndrome s = code.syndrome(received);
  if (s.is_zero()) {
    out.kind = OutcomeKind::codeword;
    out.diagnostics.syndrome_zero = true;
    out.diagnostics.lambda_degree = 0;
    out.codewords.emplace_back(received.begin(), received.end());
    return out;
  }
  const UniqueSolution sol = solve_unique(s, code.d());
  out.diagnostics.lambda_degree = sol.lambda.q_degree().value();
  out.diagnostics.root_space_dim = sol.root_space_dim;
  if (!sol.ok()) {
    out.diagnostics.failure = "improper Lambda";
    return out;
  }
  RecoveredError rec = recover_error(code, sol.lambda, s);
  if (rec.status != RecoveryStatus::ok) {
    out.diagnostics.failure = "error recovery failed";
    return out;
  }
  out.kind = OutcomeKind::codeword;
  out.diagnostics.recovered = 1;
  out.codewords.push_back(subtract_words(received, rec.error));
  return out;
}

DecodeOutcome decode_beyond(const GabidulinCode& code, std::span<const Element> received,
                            std::size_t tau, std::uint64_t limit, unsigned jobs) {
  check_received(code, received);
  const std::size_t d = code.d();
  if (!((d - 1) / 2 < tau && tau + 1 < d)) {
    throw InvalidInput("radius must satisfy floor((d-1)/2) < tau < d-1");
  }
  DecodeOutcome out{OutcomeKind::list, {}, {}};
  const Syndrome s = code.syndrome(received);
  if (s.is_zero()) {
    // Other codewords are at distance >= d > tau.
    out.diagnostics.syndrome_zero = true;
    out.diagnostics.lambda_degree = 0;
    out.codewords.emplace_back(received.begin(), received.end());
    return out;
  }

  const OpCounter counter;
  const KeyEqBasis basis = solution_basis(s, d, tau);
  out.diagnostics.basis_multiplications = counter.elapsed().multiplications;
  out.diagnostics.basis_size = basis.size();
  out.diagnostics.tail_filled = basis.tail_filled;
  if (basis.size() == 0) {
    out.diagnostics.failure = "empty key-equation basis";
    return out;
  }

  const FieldCtx& ctx = code.field();
  const std::uint64_t order = ctx.order();
  if (saturating_power(order, basis.size()) > limit) {
    throw BudgetExceeded("enumeration needs (q^m)^" + std::to_string(basis.size()) +
                         " combinations, above the limit of " + std::to_string(limit));
  }
  // The highest-degree pair gets coefficient 1: one Lambda per scalar class,
  // all of the top q-degree.
  const std::size_t free = basis.size() - 1;
  const std::uint64_t total = saturating_power(order, free);
  out.diagnostics.combinations = total;

  auto work = [&](std::uint64_t begin, std::uint64_t end, Partial& part) {
    std::vector<Element> betas(basis.size(), ctx.zero());
    betas.back() = ctx.one();
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < free; ++i) {
        betas[i] = ctx.from_index(v % order);
        v /= order;
      }
      const LinPoly lambda = make_monic(combine(basis, betas).first);
      if (lambda.q_degree() < QDegree(1)) continue;
      RecoveredError rec = recover_error(code, lambda, s);
      if (rec.status == RecoveryStatus::improper_lambda) continue;
      ++part.proper;
      if (rec.status != RecoveryStatus::ok) continue;
      if (rank_over_fq(rec.error) > tau) continue;
      ++part.recovered;
      part.codewords.push_back(subtract_words(received, rec.error));
    }
  };

  const unsigned workers = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs == 0 ? 1 : jobs, total)));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    work(0, total, parts[0]);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      threads.emplace_back([&, begin, end, w] { work(begin, end, parts[w]); });
    }
  }

  for (auto& part : parts) {
    out.diagnostics.proper_lambdas += part.proper;
    out.diagnostics.recovered += part.recovered;
    for (auto& w : part.codewords) out.codewords.push_back(std::move(w));
  }

  // Errors of lower rank may have no degree-tau Lambda with a full root space.
  DecodeOutcome bmd = decode_bmd(code, received);
  if (bmd.kind == OutcomeKind::codeword) {
    out.codewords.push_back(std::move(bmd.codewords.front()));
  }
  canonicalize(out.codewords);
  return out;
}

const char* to_string(OutcomeKind kind) noexcept {
  switch (kind) {
    case OutcomeKind::codeword:
      return "codeword";
    case OutcomeKind::list:
      return "list";
    case OutcomeKind::failure:
      return "failure";
  }
  return "failure";
}

}  // namespace rankdec
