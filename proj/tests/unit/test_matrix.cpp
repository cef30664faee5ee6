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

#include <algorithm>

#include "rankdec/matrix.hpp"
#include "rankdec/random.hpp"
#include "support/oracles.hpp"

using namespace rankdec;

namespace {

MatrixFqm random_matrix(const FieldCtx& f, std::size_t r, std::size_t c, Rng& rng) {
  MatrixFqm m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_element(f, rng);
  }
  return m;
}

bool annihilates(const MatrixFqm& m, const std::vector<Element>& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Element acc = m.field().zero();
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("F_4 rank examples") {
  const FieldPtr f4 = FieldCtx::create(2, 2, {1, 1, 1});
  const Element z = f4->generator();
  const Element zp1 = f4->from_coords({1, 1});
  CHECK(rank_over_fq(std::vector<Element>{z, zp1}) == 2);
  CHECK(rank_over_fq(std::vector<Element>{z, z}) == 1);
}

TEST_CASE("rank norm basics") {
  const FieldPtr f = FieldCtx::create(2, 6);
  std::vector<Element> basis;
  Element p = f->one();
  for (int i = 0; i < 6; ++i) {
    basis.push_back(p);
    p *= f->generator();
  }
  CHECK(rank_over_fq(basis) == 6);
  CHECK(rank_over_fq(std::vector<Element>(4, f->zero())) == 0);
}

TEST_CASE("rank over F_2 matches span enumeration and is permutation invariant") {
  const FieldPtr f = FieldCtx::create(2, 6);
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Element> v;
    const std::size_t n = 1 + trial % 7;
    // Mix in dependent columns now and then.
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= 2 && trial % 3 == 0) {
        v.push_back(v[j - 1] + v[j - 2]);
      } else {
        v.push_back(random_element(*f, rng));
      }
    }
    const std::size_t r = rank_over_fq(v);
    CHECK(r == oracle::rank_norm_f2(v));
    std::reverse(v.begin(), v.end());
    CHECK(rank_over_fq(v) == r);
  }
}

TEST_CASE("rank over F_3 is invariant under F_q scaling") {
  const FieldPtr f = FieldCtx::create(3, 4);
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Element> v;
    for (int j = 0; j < 5; ++j) v.push_back(random_element(*f, rng));
    const std::size_t r = rank_over_fq(v);
    for (auto& e : v) e = e.scaled(2);
    CHECK(rank_over_fq(v) == r);
  }
}

TEST_CASE("kernel over F_{q^m}") {
  const FieldPtr f = FieldCtx::create(2, 4);
  SUBCASE("zero matrix gives unit vectors") {
    const MatrixFqm z(*f, 2, 3);
    CHECK(kernel_fqm(z).size() == 3);
  }
  SUBCASE("identity gives nothing") {
    MatrixFqm id(*f, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = f->one();
    CHECK(kernel_fqm(id).empty());
  }
  SUBCASE("planted kernel vectors are found") {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
      MatrixFqm m = random_matrix(*f, 3, 5, rng);
      std::vector<Element> v;
      for (int j = 0; j < 5; ++j) v.push_back(random_element(*f, rng));
      if (std::all_of(v.begin(), v.end(), [](const Element& e) { return e.is_zero(); })) continue;
      // Force m v = 0 by fixing the column of the last nonzero entry of v.
      std::size_t piv = 4;
      while (v[piv].is_zero()) --piv;
      for (std::size_t i = 0; i < 3; ++i) {
        Element acc = f->zero();
        for (std::size_t j = 0; j < 5; ++j) {
          if (j != piv) acc += m.at(i, j) * v[j];
        }
        m.at(i, piv) = -(acc / v[piv]);
      }
      REQUIRE(annihilates(m, v));
      const auto ker = kernel_fqm(m);
      CHECK(ker.size() == 5 - rank(m));
      for (const auto& k : ker) CHECK(annihilates(m, k));
      // v in span(ker): adding it does not raise the rank.
      std::vector<std::vector<Element>> rows = ker;
      const std::size_t before = rank(matrix_from_rows(*f, rows));
      rows.push_back(v);
      CHECK(rank(matrix_from_rows(*f, rows)) == before);
    }
  }
  SUBCASE("random square matrices are usually invertible") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
      const MatrixFqm m = random_matrix(*f, 4, 4, rng);
      CHECK((rank(m) == 4) == kernel_fqm(m).empty());
    }
  }
}

TEST_CASE("solve over F_q") {
  const MatrixFq id = MatrixFq::identity(5, 3);
  const std::vector<Residue> b{1, 4, 2};
  CHECK(solve_fq(id, b) == b);
  const MatrixFq zero(5, 2, 2);
  CHECK_FALSE(solve_fq(zero, std::vector<Residue>{0, 1}).has_value());
  CHECK(solve_fq(zero, std::vector<Residue>{0, 0}).has_value());

  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    MatrixFq a(3, 4, 6);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 6; ++j) a.at(i, j) = random_residue(rng, 3);
    }
    std::vector<Residue> x(6), rhs(4, 0);
    for (auto& e : x) e = random_residue(rng, 3);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 6; ++j) rhs[i] = (rhs[i] + a.at(i, j) * x[j]) % 3;
    }
    const auto sol = solve_fq(a, rhs);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < 4; ++i) {
      Residue acc = 0;
      for (std::size_t j = 0; j < 6; ++j) acc = (acc + a.at(i, j) * (*sol)[j]) % 3;
      CHECK(acc == rhs[i]);
    }
    for (const auto& k : kernel_fq(a)) {
      for (std::size_t i = 0; i < 4; ++i) {
        Residue acc = 0;
        for (std::size_t j = 0; j < 6; ++j) acc = (acc + a.at(i, j) * k[j]) % 3;
        CHECK(acc == 0);
      }
    }
    CHECK(kernel_fq(a).size() == 6 - rank(a));
  }
}
