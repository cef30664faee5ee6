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

#include "rankdec/keyeq.hpp"

#include <algorithm>

#include "rankdec/seea.hpp"

namespace rankdec {

namespace {

void check_syndrome(const Syndrome& s, std::size_t d) {
  if (d < 2) throw InvalidInput("minimum distance must be at least 2");
  if (s.q_degree() > QDegree(static_cast<int>(d) - 2)) {
    throw InvalidInput("syndrome q-degree exceeds d-2");
  }
}

void check_radius(std::size_t d, std::size_t tau) {
  const std::size_t half = (d - 1) / 2;
  if (!(half < tau && tau + 1 < d)) {
    throw InvalidInput("radius must satisfy floor((d-1)/2) < tau < d-1");
  }
}

}  // namespace

bool satisfies_key_equation(const LinPoly& lambda, const LinPoly& omega, const Syndrome& s,
                            std::size_t d) {
  return truncate(symbolic_product(lambda, s), d - 1) == omega;
}

UniqueSolution solve_unique(const Syndrome& s, std::size_t d) {
  check_syndrome(s, d);
  const FieldCtx& ctx = s.field();
  if (s.is_zero()) {
    return {KeyEqStatus::solved, LinPoly::monomial(ctx, 0), LinPoly(ctx), 0, 0};
  }
  const int half = static_cast<int>((d - 1) / 2);
  const LinPoly b = LinPoly::monomial(ctx, static_cast<unsigned>(d - 1));
  UniqueSolution out{KeyEqStatus::improper, LinPoly::monomial(ctx, 0), s, 0, 0};

  if (s.q_degree() >= QDegree(half)) {
    SeeaStepper run(b, s, false);
    while (!run.done()) {
      run.step();
      if (run.remainder().q_degree() < QDegree(half)) break;
    }
    const Element a = inverse(run.u().lead());
    out.lambda = a * run.u();
    out.omega = a * run.remainder();
    out.seea_steps = run.index();
  }
  // Otherwise the straddle is at i = 0 and (U_0, R_0) = (x^[0], S), which
  // can never meet deg Omega < deg Lambda.

  const QDegree deg = out.lambda.q_degree();
  out.root_space_dim = root_space(out.lambda).size();
  const bool proper = deg.value() >= 1 && deg <= QDegree(half) &&
                      out.omega.q_degree() < deg &&
                      out.root_space_dim == static_cast<std::size_t>(deg.value());
  out.status = proper ? KeyEqStatus::solved : KeyEqStatus::improper;
  return out;
}

SolutionSequence solution_sequence(const Syndrome& s, std::size_t d) {
  check_syndrome(s, d);
  if (s.is_zero()) throw ZeroSyndrome("syndrome is zero; the received word is a codeword");
  const FieldCtx& ctx = s.field();
  SolutionSequence seq;
  seq.pairs.push_back({LinPoly::monomial(ctx, 0), s, PairOrigin::initial});

  auto fill_from_last = [&seq](PairOrigin origin) {
    const SolutionPair& last = seq.pairs.back();
    seq.pairs.push_back({frobenius_shift(last.delta, 1), frobenius_shift(last.p, 1), origin});
  };

  SeeaStepper run(LinPoly::monomial(ctx, static_cast<unsigned>(d - 1)), s, false);
  while (!run.done()) {
    run.step();
    const QDegree u_deg = run.u().q_degree();
    // One filler per missing q-degree between the previous Delta and U_i.
    while (u_deg.value() - seq.pairs.back().delta.q_degree().value() > 1) {
      fill_from_last(PairOrigin::gap_fill);
    }
    seq.pairs.push_back({run.u(), run.remainder(), PairOrigin::seea});
  }
  seq.seea_steps = run.index();

  // A positive-degree rsgcd stops the recursion with deg U < d-1.
  while (seq.pairs.back().delta.q_degree() < QDegree(static_cast<int>(d) - 1)) {
    fill_from_last(PairOrigin::tail_fill);
    seq.tail_filled = true;
  }

  for (std::size_t j = 0; j < seq.pairs.size(); ++j) {
    if (seq.pairs[j].delta.q_degree() != QDegree(static_cast<int>(j))) {
      throw std::logic_error("Delta sequence lost its one-per-degree structure");
    }
  }
  return seq;
}

std::vector<LinPoly> KeyEqBasis::deltas() const {
  std::vector<LinPoly> out;
  for (const auto& pr : pairs) out.push_back(pr.delta);
  return out;
}

std::vector<LinPoly> KeyEqBasis::ps() const {
  std::vector<LinPoly> out;
  for (const auto& pr : pairs) out.push_back(pr.p);
  return out;
}

KeyEqBasis solution_basis(const Syndrome& s, std::size_t d, std::size_t tau) {
  check_radius(d, tau);
  SolutionSequence seq = solution_sequence(s, d);
  KeyEqBasis basis;
  basis.tau = tau;
  basis.tau0 = tau - (d - 1) / 2;
  basis.tail_filled = seq.tail_filled;
  const QDegree bound(static_cast<int>(tau));
  for (auto& pr : seq.pairs) {
    if (pr.delta.q_degree() <= bound && pr.p.q_degree() < bound) {
      basis.pairs.push_back(std::move(pr));
    }
  }
  return basis;
}

std::pair<LinPoly, LinPoly> combine(const KeyEqBasis& basis, std::span<const Element> betas) {
  if (betas.size() != basis.pairs.size()) {
    throw InvalidInput("need exactly one coefficient per basis pair");
  }
  if (basis.pairs.empty()) throw InvalidInput("empty basis");
  const FieldCtx& ctx = basis.pairs.front().delta.field();
  LinPoly lambda(ctx);
  LinPoly omega(ctx);
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (betas[i].is_zero()) continue;
    lambda += betas[i] * basis.pairs[i].delta;
    omega += betas[i] * basis.pairs[i].p;
  }
  return {std::move(lambda), std::move(omega)};
}

MatrixFqm syndrome_matrix(const Syndrome& s, std::size_t d, std::size_t tau) {
  check_syndrome(s, d);
  if (tau + 1 >= d) throw InvalidInput("syndrome matrix needs tau < d-1");
  const std::size_t rows = d - tau - 1;
  MatrixFqm out(s.field(), rows, tau + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c <= tau; ++c) {
      out.at(r, c) = frobenius(s.coeff(r + c), static_cast<long>(tau - c));
    }
  }
  return out;
}

std::vector<LinPoly> oracle_solutions(const Syndrome& s, std::size_t d, std::size_t tau) {
  const FieldCtx& ctx = s.field();
  std::vector<LinPoly> out;
  for (auto& v : kernel_fqm(syndrome_matrix(s, d, tau))) {
    // v = (Lambda_tau, ..., Lambda_0).
    std::reverse(v.begin(), v.end());
    out.emplace_back(ctx, std::move(v));
  }
  return out;
}

std::size_t span_rank(std::span<const LinPoly> polys) {
  if (polys.empty()) return 0;
  const FieldCtx& ctx = polys.front().field();
  std::size_t width = 0;
  for (const auto& p : polys) width = std::max(width, p.coeffs().size());
  MatrixFqm m(ctx, polys.size(), width);
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (std::size_t c = 0; c < polys[r].coeffs().size(); ++c) m.at(r, c) = polys[r].coeffs()[c];
  }
  return rank(m);
}

bool spans_equal(std::span<const LinPoly> a, std::span<const LinPoly> b) {
  std::vector<LinPoly> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = span_rank(a);
  return ra == span_rank(b) && ra == span_rank(both);
}

}  // namespace rankdec
