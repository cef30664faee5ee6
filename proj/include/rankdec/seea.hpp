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

#ifndef RANKDEC_SEEA_HPP
#define RANKDEC_SEEA_HPP

#include <cstddef>
#include <vector>

#include "rankdec/linpoly.hpp"

namespace rankdec {

/// One division step R_{i-2} = Q_i (x) R_{i-1} + R_i with its cofactors.
struct SeeaStep {
  std::size_t index;  // i, starting at 1
  LinPoly quotient;
  LinPoly remainder;
  LinPoly u;
  LinPoly v;
};

/**
 * Transcript of the symbolic extended Euclidean algorithm on R_{-1} = B,
 * R_0 = A. Every step satisfies R_i = U_i (x) A + V_i (x) B and
 * deg U_i + deg R_{i-1} = deg B.
 */
struct SeeaTrace {
  LinPoly b;
  LinPoly a;
  std::vector<SeeaStep> steps;
  /// Monic last nonzero remainder.
  LinPoly rsgcd;

  /// R_i for i >= -1.
  const LinPoly& remainder(long i) const;
  /// U_i for i >= -1.
  LinPoly u(long i) const;
};

/**
 * Incremental driver of the recursion. Holds (R_{i-1}, R_i) and
 * (U_{i-1}, U_i), plus the V pair when requested; the key-equation solvers
 * step it directly so they do not pay for V.
 */
class SeeaStepper {
 public:
  SeeaStepper(const LinPoly& b, const LinPoly& a, bool track_v);

  /// Index i of the current remainder R_i (0 before the first step).
  std::size_t index() const noexcept { return index_; }
  bool done() const noexcept { return r_cur_.is_zero(); }

  const LinPoly& prev_remainder() const noexcept { return r_prev_; }
  const LinPoly& remainder() const noexcept { return r_cur_; }
  const LinPoly& u() const noexcept { return u_cur_; }
  const LinPoly& v() const noexcept { return v_cur_; }
  const LinPoly& quotient() const noexcept { return quotient_; }

  /// Computes Q_{i+1}, R_{i+1}, U_{i+1} (and V_{i+1}). Requires !done().
  void step();

 private:
  bool track_v_;
  std::size_t index_ = 0;
  LinPoly r_prev_, r_cur_;
  LinPoly u_prev_, u_cur_;
  LinPoly v_prev_, v_cur_;
  LinPoly quotient_;
};

/**
 * Full run until the remainder vanishes. Requires deg B > deg A >= 0, or
 * A = 0 (empty trace, rsgcd = monic B); anything else is InvalidInput.
 */
SeeaTrace seea(const LinPoly& b, const LinPoly& a);

struct SeeaStop {
  /// The unique i with deg R_{i-1} >= bound > deg R_i; 0 means no step ran.
  std::size_t index;
  SeeaTrace prefix;
};

/// Runs until the remainder degree first drops below bound. Requires
/// bound <= deg B in addition to the seea preconditions.
SeeaStop seea_until_degree(const LinPoly& b, const LinPoly& a, int bound);

}  // namespace rankdec

#endif  // RANKDEC_SEEA_HPP
