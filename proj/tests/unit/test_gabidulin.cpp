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

#include "rankdec/gabidulin.hpp"
#include "support/oracles.hpp"

using namespace rankdec;

namespace {

GabidulinCode code_a() { return GabidulinCode::with_default_h(FieldCtx::create(2, 4), 4, 1); }
GabidulinCode code_b() { return GabidulinCode::with_default_h(FieldCtx::create(2, 6), 6, 1); }

}  // namespace

TEST_CASE("parity-check matrix") {
  const GabidulinCode c = code_a();
  const MatrixFqm& h = c.parity_check_matrix();
  REQUIRE(h.rows() == 3);
  REQUIRE(h.cols() == 4);
  CHECK(h.row(0) == std::vector<Element>(c.h().begin(), c.h().end()));
  for (std::size_t i = 1; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(h.at(i, j) == frobenius(h.at(i - 1, j), 1));
  }
  const Element z = c.field().generator();
  CHECK(h.at(1, 1) == z * z);
  CHECK(c.d() == 4);
}

TEST_CASE("construction preconditions") {
  const FieldPtr f = FieldCtx::create(2, 4);
  CHECK_THROWS_AS(GabidulinCode::with_default_h(f, 5, 1), InvalidInput);
  CHECK_THROWS_AS(GabidulinCode::with_default_h(f, 4, 4), InvalidInput);
  CHECK_THROWS_AS(GabidulinCode::with_default_h(f, 4, 0), InvalidInput);
  const Element z = f->generator();
  CHECK_THROWS_AS(GabidulinCode(f, 3, 1, {f->one(), z, f->one() + z}), InvalidInput);
}

TEST_CASE("generator matrix") {
  for (const GabidulinCode& c : {code_a(), code_b()}) {
    const MatrixFqm& g = c.generator_matrix();
    CHECK(g.rows() == c.k());
    CHECK(rank(g) == c.k());
    const MatrixFqm prod = g * c.parity_check_matrix().transposed();
    CHECK(prod == MatrixFqm(c.field(), c.k(), c.n() - c.k()));
    for (std::size_t r = 0; r < c.k(); ++r) CHECK(rank_over_fq(g.row(r)) >= c.d());
  }
}

TEST_CASE("minimum rank distance of the F_16 code by exhaustion") {
  const GabidulinCode c = code_a();
  unsigned min_rank = 99;
  for (std::uint32_t v = 1; v < 16; ++v) {
    const Word cw = c.encode(std::vector<Element>{oracle::from_mask(c.field(), v)});
    CHECK(c.is_codeword(cw));
    min_rank = std::min(min_rank, oracle::rank_norm_f2(cw));
  }
  CHECK(min_rank == 4);
}

TEST_CASE("encoding and syndromes") {
  const GabidulinCode c = GabidulinCode::with_default_h(FieldCtx::create(2, 6), 6, 3);
  Rng rng(60);
  CHECK(c.encode(zero_word(c.field(), 3)) == zero_word(c.field(), 6));
  for (std::size_t i = 0; i < 3; ++i) {
    Word unit = zero_word(c.field(), 3);
    unit[i] = c.field().one();
    CHECK(c.encode(unit) == c.generator_matrix().row(i));
  }
  CHECK_THROWS_AS(c.encode(zero_word(c.field(), 2)), InvalidInput);
  for (int trial = 0; trial < 200; ++trial) {
    const Word cw = c.encode(random_message(c, rng));
    CHECK(c.syndrome(cw).is_zero());
    const Word e = random_error(c, 1 + trial % 3, rng);
    CHECK(c.syndrome(add_words(cw, e)) == c.syndrome(e));
    // F_{q^m}-linearity.
    const Element a = random_element(c.field(), rng);
    Word ae = e;
    for (auto& x : ae) x = a * x;
    CHECK(c.syndrome(ae) == a * c.syndrome(e));
    CHECK(c.syndrome(e).q_degree() <= QDegree(static_cast<int>(c.d()) - 2));
  }
}

TEST_CASE("rank-1 worked syndrome") {
  const GabidulinCode c = code_a();
  const Element z = c.field().generator();
  Word e = zero_word(c.field(), 4);
  e[0] = z;
  const Syndrome s = c.syndrome(e);
  CHECK(s == LinPoly(c.field(), {z, z, z}));
}

TEST_CASE("sampled errors have the requested rank") {
  for (const GabidulinCode& c : {code_a(), code_b()}) {
    Rng rng(61);
    CHECK(random_error(c, 0, rng) == zero_word(c.field(), c.n()));
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t t = static_cast<std::size_t>(trial) % (c.n() + 1);
      const ErrorSample s = sample_error(c, t, rng);
      CHECK(rank_over_fq(s.error) == t);
      CHECK(oracle::rank_norm_f2(s.error) == t);
      CHECK(rank(s.y) == t);
    }
    CHECK_THROWS_AS(random_error(c, c.n() + 1, rng), InvalidInput);
  }
}
