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

#include "rankdec/random.hpp"
#include "rankdec/seea.hpp"

using namespace rankdec;

namespace {

void check_trace(const SeeaTrace& t) {
  const int deg_b = t.b.q_degree().value();
  const int deg_a = t.a.q_degree().value();
  for (const auto& st : t.steps) {
    const long i = static_cast<long>(st.index);
    CHECK(st.remainder == symbolic_product(st.u, t.a) + symbolic_product(st.v, t.b));
    CHECK(st.remainder.q_degree() < t.remainder(i - 1).q_degree());
    CHECK(st.u.q_degree().value() + t.remainder(i - 1).q_degree().value() == deg_b);
    if (i >= 2) {
      CHECK(st.v.q_degree().value() + t.remainder(i - 1).q_degree().value() == deg_a);
      CHECK(st.quotient.q_degree().value() ==
            t.remainder(i - 2).q_degree().value() - t.remainder(i - 1).q_degree().value());
      CHECK(st.quotient.q_degree() >= QDegree(1));
    }
    // The division step itself.
    CHECK(t.remainder(i - 2) == symbolic_product(st.quotient, t.remainder(i - 1)) + st.remainder);
  }
  REQUIRE(!t.rsgcd.is_zero());
  CHECK(t.rsgcd.is_monic());
  CHECK(right_divide(t.a, t.rsgcd).remainder.is_zero());
  CHECK(right_divide(t.b, t.rsgcd).remainder.is_zero());
}

}  // namespace

TEST_CASE("monomial divisibility") {
  const FieldPtr f = FieldCtx::create(2, 4);
  const SeeaTrace t = seea(LinPoly::monomial(*f, 3), LinPoly::monomial(*f, 1));
  CHECK(t.rsgcd == LinPoly::monomial(*f, 1));
  CHECK(t.steps.size() == 1);
}

TEST_CASE("A = 0 and bad degree order") {
  const FieldPtr f = FieldCtx::create(2, 4);
  const LinPoly b(*f, {f->generator(), f->one(), f->generator()});
  const SeeaTrace t = seea(b, LinPoly(*f));
  CHECK(t.steps.empty());
  CHECK(t.rsgcd == make_monic(b));
  CHECK_THROWS_AS(seea(LinPoly::monomial(*f, 1), LinPoly::monomial(*f, 2)), InvalidInput);
  CHECK_THROWS_AS(seea(LinPoly::monomial(*f, 1), LinPoly::monomial(*f, 1)), InvalidInput);
}

TEST_CASE("identities on random pairs over F_16 and F_64") {
  for (unsigned m : {4u, 6u}) {
    const FieldPtr f = FieldCtx::create(2, m);
    Rng rng(derive_seed(50, {m}));
    for (int trial = 0; trial < 1000; ++trial) {
      const int db = 1 + static_cast<int>(rng() % 7);
      const int da = static_cast<int>(rng() % static_cast<unsigned>(db));
      check_trace(seea(random_poly(*f, db, rng), random_poly(*f, da, rng)));
    }
  }
}

TEST_CASE("rsgcd recovers a planted right factor") {
  const FieldPtr f = FieldCtx::create(2, 6);
  Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const LinPoly g = random_poly(*f, 1 + static_cast<int>(rng() % 3), rng);
    const LinPoly x = random_poly(*f, 2 + static_cast<int>(rng() % 2), rng);
    const LinPoly y = random_poly(*f, static_cast<int>(rng() % 2), rng);
    // gcd of X (x) G and Y (x) G is rsgcd(X, Y) (x) G up to scalar; it contains G.
    const SeeaTrace t = seea(symbolic_product(x, g), symbolic_product(y, g));
    check_trace(t);
    CHECK(right_divide(t.rsgcd, g).remainder.is_zero());
    if (seea(x, y).rsgcd.q_degree() == QDegree(0)) CHECK(t.rsgcd == make_monic(g));
  }
  const LinPoly g = random_poly(*f, 2, rng);
  const LinPoly x = random_poly(*f, 3, rng);
  CHECK(seea(symbolic_product(x, g), g).rsgcd == make_monic(g));
}

TEST_CASE("stopping at a degree bound") {
  const FieldPtr f = FieldCtx::create(2, 6);
  Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const LinPoly b = random_poly(*f, 6, rng);
    const LinPoly a = random_poly(*f, static_cast<int>(rng() % 6), rng);
    const SeeaTrace full = seea(b, a);
    const int bound = static_cast<int>(rng() % 7);
    const SeeaStop stop = seea_until_degree(b, a, bound);
    if (stop.index == 0) {
      CHECK(a.q_degree() < QDegree(bound));
      continue;
    }
    const long i = static_cast<long>(stop.index);
    CHECK(full.remainder(i - 1).q_degree() >= QDegree(bound));
    CHECK(full.remainder(i).q_degree() < QDegree(bound));
    CHECK(stop.prefix.steps.size() == stop.index);
    CHECK(stop.prefix.steps.back().u == full.steps[stop.index - 1].u);
  }
  CHECK_THROWS_AS(seea_until_degree(LinPoly::monomial(*f, 3), LinPoly::monomial(*f, 1), 4),
                  InvalidInput);
  CHECK(seea_until_degree(LinPoly::monomial(*f, 3), LinPoly::monomial(*f, 1), 3).index == 0);
}
