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

#include <doctest.h>

#include <map>

#include "rankdec/keyeq.hpp"
#include "rankdec/seea.hpp"
#include "support/oracles.hpp"

using namespace rankdec;

namespace {

GabidulinCode code_a() { return GabidulinCode::with_default_h(FieldCtx::create(2, 4), 4, 1); }
GabidulinCode code_b() { return GabidulinCode::with_default_h(FieldCtx::create(2, 6), 6, 1); }

bool same_span(std::span<const Element> a, std::span<const Element> b) {
  std::vector<Element> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank_over_fq(a);
  return r == rank_over_fq(b) && r == rank_over_fq(both);
}

// Coefficient k of lambda (x) s with bitmask arithmetic.
std::uint32_t product_coeff(const oracle::Gf2m& f, const std::vector<std::uint32_t>& lam,
                            const std::vector<std::uint32_t>& s, std::size_t k) {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < lam.size() && i <= k; ++i) {
    if (k - i < s.size()) acc ^= f.mul(lam[i], f.frob(s[k - i], static_cast<unsigned>(i)));
  }
  return acc;
}

}  // namespace

TEST_CASE("unique solver on trivial and worked inputs") {
  const GabidulinCode c = code_a();
  const UniqueSolution zero = solve_unique(LinPoly(c.field()), 4);
  CHECK(zero.ok());
  CHECK(zero.lambda == LinPoly::monomial(c.field(), 0));
  CHECK(zero.omega.is_zero());

  const Element z = c.field().generator();
  Word e = zero_word(c.field(), 4);
  e[0] = z;
  const UniqueSolution sol = solve_unique(c.syndrome(e), 4);
  REQUIRE(sol.ok());
  CHECK(sol.lambda == min_subspace_poly(std::vector<Element>{z}));
  CHECK(sol.lambda.q_degree() == QDegree(1));
  CHECK(satisfies_key_equation(sol.lambda, sol.omega, c.syndrome(e), 4));
  CHECK(seea_until_degree(LinPoly::monomial(c.field(), 3), c.syndrome(e), 1).prefix.steps.back().u.q_degree() ==
        QDegree(1));

  CHECK_THROWS_AS(solve_unique(LinPoly::monomial(c.field(), 3), 4), InvalidInput);
}

TEST_CASE("unique solver finds the error span") {
  for (const GabidulinCode& c : {code_a(), code_b()}) {
    const std::size_t d = c.d();
    Rng rng(derive_seed(70, {c.n()}));
    for (std::size_t t = 1; t <= (d - 1) / 2; ++t) {
      for (int trial = 0; trial < 1000; ++trial) {
        const ErrorSample es = sample_error(c, t, rng);
        const Syndrome s = c.syndrome(es.error);
        const UniqueSolution sol = solve_unique(s, d);
        REQUIRE(sol.ok());
        CHECK(sol.lambda.is_monic());
        CHECK(sol.lambda.q_degree() == QDegree(static_cast<int>(t)));
        CHECK(sol.omega.q_degree() < sol.lambda.q_degree());
        CHECK(satisfies_key_equation(sol.lambda, sol.omega, s, d));
        CHECK(same_span(root_space(sol.lambda), es.basis));
      }
    }
  }
}

TEST_CASE("sequence membership and degree cover") {
  const GabidulinCode c = code_b();
  const std::size_t d = c.d();
  Rng rng(71);
  int tails = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Syndrome s = c.syndrome(random_error(c, 1 + trial % 5, rng));
    const SolutionSequence seq = solution_sequence(s, d);
    REQUIRE(seq.pairs.size() == d);
    std::map<int, int> p_degrees;
    for (std::size_t j = 0; j < seq.pairs.size(); ++j) {
      const SolutionPair& pr = seq.pairs[j];
      CHECK(pr.delta.q_degree() == QDegree(static_cast<int>(j)));
      CHECK(truncate(symbolic_product(pr.delta, s), d - 1) == pr.p);
      if (!pr.p.is_zero()) ++p_degrees[pr.p.q_degree().value()];
    }
    CHECK(seq.tail_filled == s.coeff(0).is_zero());
    if (!seq.tail_filled) {
      CHECK(p_degrees.size() == d - 1);
      for (int k = 0; k + 2 <= static_cast<int>(d); ++k) CHECK(p_degrees[k] == 1);
    } else {
      // Every P carries the right factor x^[1]; degree 0 cannot occur.
      ++tails;
      CHECK(p_degrees.count(0) == 0);
      for (const auto& pr : seq.pairs) CHECK(pr.p.coeff(0).is_zero());
    }
  }
  CHECK(tails > 0);  // the seed does reach the S_0 = 0 branch
  CHECK_THROWS_AS(solution_sequence(LinPoly(c.field()), d), ZeroSyndrome);
}

TEST_CASE("basis shape, membership and span equality with the oracle") {
  struct Case {
    GabidulinCode code;
    std::size_t tau;
  };
  for (const Case& cs : {Case{code_a(), 2}, Case{code_b(), 3}, Case{code_b(), 4}}) {
    const std::size_t d = cs.code.d();
    const std::size_t tau = cs.tau;
    Rng rng(derive_seed(72, {d, tau}));
    for (std::size_t t = 1; t <= tau; ++t) {
      for (int trial = 0; trial < 300; ++trial) {
        const Syndrome s = cs.code.syndrome(random_error(cs.code, t, rng));
        const KeyEqBasis b = solution_basis(s, d, tau);
        const std::vector<LinPoly> oracle = oracle_solutions(s, d, tau);
        const std::size_t srank = rank(syndrome_matrix(s, d, tau));
        CHECK(srank == std::min(d - 1 - tau, t));
        CHECK(oracle.size() == tau + 1 - srank);
        CHECK(b.size() == oracle.size());
        CHECK(spans_equal(b.deltas(), oracle));
        if (srank == d - 1 - tau) {
          // tau + 1 - (d - 1 - tau) pairs. Delta degrees are distinct but not
          // always contiguous.
          CHECK(b.size() == 2 * tau + 2 - d);
          for (std::size_t i = 1; i < b.size(); ++i) {
            CHECK(b.pairs[i - 1].delta.q_degree() < b.pairs[i].delta.q_degree());
          }
        }
        for (const auto& pr : b.pairs) {
          CHECK(pr.delta.q_degree() <= QDegree(static_cast<int>(tau)));
          CHECK(pr.p.q_degree() < QDegree(static_cast<int>(tau)));
          CHECK(truncate(symbolic_product(pr.delta, s), d - 1) == pr.p);
        }
        // Every oracle vector is annihilated by the matrix, i.e. solves the key equation.
        for (const auto& lam : oracle) {
          CHECK(truncate(symbolic_product(lam, s), d - 1).q_degree() < QDegree(static_cast<int>(tau)));
        }
      }
    }
  }
}

TEST_CASE("exhaustive count of key-equation solutions on the F_16 code") {
  // All 16^3 Lambda of q-degree <= 2, checked with bitmask arithmetic:
  // the coefficient of x^[2] in Lambda (x) S must vanish.
  const GabidulinCode c = code_a();
  const oracle::Gf2m ref = oracle::gf16();
  Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const Syndrome s = c.syndrome(random_error(c, 2, rng));
    const std::vector<std::uint32_t> sm = oracle::masks(s);
    std::uint64_t count = 0;
    for (std::uint32_t l0 = 0; l0 < 16; ++l0) {
      for (std::uint32_t l1 = 0; l1 < 16; ++l1) {
        for (std::uint32_t l2 = 0; l2 < 16; ++l2) {
          count += product_coeff(ref, {l0, l1, l2}, sm, 2) == 0;
        }
      }
    }
    const KeyEqBasis b = solution_basis(s, 4, 2);
    CHECK(count == (std::uint64_t{1} << (4 * b.size())));
    CHECK(count == 256);
  }
}

TEST_CASE("combine") {
  const GabidulinCode c = code_b();
  Rng rng(74);
  const Syndrome s = c.syndrome(random_error(c, 4, rng));
  const KeyEqBasis b = solution_basis(s, 6, 4);
  const std::vector<Element> zeros(b.size(), c.field().zero());
  const auto [l0, o0] = combine(b, zeros);
  CHECK(l0.is_zero());
  CHECK(o0.is_zero());
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::vector<Element> unit = zeros;
    unit[i] = c.field().one();
    CHECK(combine(b, unit).first == b.pairs[i].delta);
    CHECK(combine(b, unit).second == b.pairs[i].p);
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> betas;
    for (std::size_t i = 0; i < b.size(); ++i) betas.push_back(random_element(c.field(), rng));
    betas.back() = random_nonzero_element(c.field(), rng);
    const auto [lam, om] = combine(b, betas);
    CHECK(lam.q_degree() == QDegree(4));
    CHECK(om.q_degree() < QDegree(4));
    CHECK(satisfies_key_equation(lam, om, s, 6));
    // The matrix annihilates (Lambda_tau, ..., Lambda_0).
    const MatrixFqm sm = syndrome_matrix(s, 6, 4);
    for (std::size_t r = 0; r < sm.rows(); ++r) {
      Element acc = c.field().zero();
      for (std::size_t col = 0; col <= 4; ++col) acc += sm.at(r, col) * lam.coeff(4 - col);
      CHECK(acc.is_zero());
    }
  }
  CHECK_THROWS_AS(combine(b, std::vector<Element>(b.size() + 1, c.field().zero())), InvalidInput);
}

TEST_CASE("radius preconditions") {
  const GabidulinCode c = code_b();
  Rng rng(75);
  const Syndrome s = c.syndrome(random_error(c, 2, rng));
  CHECK_THROWS_AS(solution_basis(s, 6, 2), InvalidInput);
  CHECK_THROWS_AS(solution_basis(s, 6, 5), InvalidInput);
  CHECK_THROWS_AS(solution_basis(LinPoly(c.field()), 6, 3), ZeroSyndrome);
  CHECK(syndrome_matrix(s, 6, 4).rows() == 1);
  CHECK(syndrome_matrix(s, 6, 4).cols() == 5);
}
