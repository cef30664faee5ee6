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

#ifndef RANKDEC_KEYEQ_HPP
#define RANKDEC_KEYEQ_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rankdec/gabidulin.hpp"
#include "rankdec/linpoly.hpp"
#include "rankdec/matrix.hpp"

/**
 * @file keyeq.hpp
 * Solvers for the Gabidulin key equation
 *
 *     Omega(x) = Lambda(x) (x) S(x)  mod x^[d-1],   deg Omega < deg Lambda.
 *
 * solve_unique() is the classical Euclidean solver for radius
 * floor((d-1)/2). solution_basis() runs the same recursion to the end,
 * fills the q-degree gaps of the cofactor sequence with x^[1] (x) ..., and
 * keeps the pairs with deg Delta <= tau and deg P < tau: a basis of every
 * solution with deg Lambda <= tau for a radius tau beyond half the distance.
 * oracle_solutions() computes the same space by Gaussian elimination on the
 * syndrome matrix and is kept as an independent check.
 *
 * Orientation: a pair (Delta, P) always satisfies
 * P = Delta (x) S mod x^[d-1], so Delta plays Lambda and P plays Omega.
 */

namespace rankdec {

/// solution_basis was asked about an all-zero syndrome (no error).
class ZeroSyndrome : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// truncate(lambda (x) s, d - 1) == omega.
bool satisfies_key_equation(const LinPoly& lambda, const LinPoly& omega, const Syndrome& s,
                            std::size_t d);

enum class KeyEqStatus {
  solved,
  /// Lambda has fewer independent roots than its q-degree, exceeds the
  /// radius, or deg Omega >= deg Lambda.
  improper,
};

struct UniqueSolution {
  KeyEqStatus status;
  LinPoly lambda;  // monic
  LinPoly omega;
  std::size_t seea_steps;
  std::size_t root_space_dim;

  bool ok() const noexcept { return status == KeyEqStatus::solved; }
};

/// Unique solution for radius floor((d-1)/2). S = 0 gives (x^[0], 0).
UniqueSolution solve_unique(const Syndrome& s, std::size_t d);

enum class PairOrigin {
  initial,    // (x^[0], S)
  seea,       // (U_i, R_i)
  gap_fill,   // x^[1] (x) previous pair, inside the recursion
  tail_fill,  // x^[1] (x) previous pair, after an early stop
};

struct SolutionPair {
  LinPoly delta;
  LinPoly p;
  PairOrigin origin;
};

/**
 * The full Delta/P sequence. Entry j has deg_q Delta = j for j = 0..d-1.
 * tail_filled is set when the recursion stopped before Delta reached
 * q-degree d-1, which happens exactly when S_0 = 0 (the remainders share
 * the right factor x^[1]).
 */
struct SolutionSequence {
  std::vector<SolutionPair> pairs;
  std::size_t seea_steps = 0;
  bool tail_filled = false;
};

SolutionSequence solution_sequence(const Syndrome& s, std::size_t d);

/**
 * Selected pairs, ascending in deg Delta. When rank(syndrome matrix) is
 * d-1-tau the basis has 2*tau + 2 - d elements; this is 2*tau0 + 1 for odd
 * d and 2*tau0 for even d.
 */
struct KeyEqBasis {
  std::size_t tau = 0;
  std::size_t tau0 = 0;
  std::vector<SolutionPair> pairs;
  bool tail_filled = false;

  std::size_t size() const noexcept { return pairs.size(); }
  std::vector<LinPoly> deltas() const;
  std::vector<LinPoly> ps() const;
};

/// Throws InvalidInput unless floor((d-1)/2) < tau < d-1 and deg S <= d-2,
/// and ZeroSyndrome for S = 0.
KeyEqBasis solution_basis(const Syndrome& s, std::size_t d, std::size_t tau);

/// (sum beta_i Delta_i, sum beta_i P_i).
std::pair<LinPoly, LinPoly> combine(const KeyEqBasis& basis, std::span<const Element> betas);

/**
 * (d-tau-1) x (tau+1) matrix whose row r holds the coefficients of
 * x^[tau+r] in Lambda (x) S against (Lambda_tau, ..., Lambda_0):
 * entry (r, c) = S_{r+c}^[tau-c].
 */
MatrixFqm syndrome_matrix(const Syndrome& s, std::size_t d, std::size_t tau);

/// Kernel of syndrome_matrix, as polynomials of q-degree <= tau.
std::vector<LinPoly> oracle_solutions(const Syndrome& s, std::size_t d, std::size_t tau);

/// Rank over F_{q^m} of the coefficient vectors (width = max degree + 1).
std::size_t span_rank(std::span<const LinPoly> polys);

/// Both families span the same F_{q^m}-space of polynomials.
bool spans_equal(std::span<const LinPoly> a, std::span<const LinPoly> b);

}  // namespace rankdec

#endif  // RANKDEC_KEYEQ_HPP
