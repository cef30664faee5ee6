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

#include "rankdec/seea.hpp"

#include <utility>

namespace rankdec {

namespace {

void check_inputs(const LinPoly& b, const LinPoly& a) {
  if (!b.field().equals(a.field())) throw ContextError("polynomials belong to different fields");
  if (b.is_zero()) throw InvalidInput("SEEA needs a nonzero first input");
  if (!a.is_zero() && !(b.q_degree() > a.q_degree())) {
    throw InvalidInput("SEEA needs deg_q B > deg_q A");
  }
}

SeeaTrace empty_trace(const LinPoly& b, const LinPoly& a) {
  return SeeaTrace{b, a, {}, make_monic(b)};
}

}  // namespace

const LinPoly& SeeaTrace::remainder(long i) const {
  if (i == -1) return b;
  if (i == 0) return a;
  if (i < -1 || static_cast<std::size_t>(i) > steps.size()) {
    throw InvalidInput("remainder index outside the trace");
  }
  return steps[static_cast<std::size_t>(i) - 1].remainder;
}

LinPoly SeeaTrace::u(long i) const {
  if (i == -1) return LinPoly(b.field());
  if (i == 0) return LinPoly::monomial(b.field(), 0);
  if (i < -1 || static_cast<std::size_t>(i) > steps.size()) {
    throw InvalidInput("cofactor index outside the trace");
  }
  return steps[static_cast<std::size_t>(i) - 1].u;
}

SeeaStepper::SeeaStepper(const LinPoly& b, const LinPoly& a, bool track_v)
    : track_v_(track_v),
      r_prev_(b),
      r_cur_(a),
      u_prev_(b.field()),
      u_cur_(LinPoly::monomial(b.field(), 0)),
      v_prev_(track_v ? LinPoly::monomial(b.field(), 0) : LinPoly(b.field())),
      v_cur_(b.field()),
      quotient_(b.field()) {
  check_inputs(b, a);
}

void SeeaStepper::step() {
  if (done()) throw InvalidInput("SEEA already terminated");
  auto [q, r] = right_divide(r_prev_, r_cur_);
  // U_i = -Q_i (x) U_{i-1} + U_{i-2}; same for V.
  LinPoly u_next = u_prev_ - symbolic_product(q, u_cur_);
  u_prev_ = std::exchange(u_cur_, std::move(u_next));
  if (track_v_) {
    LinPoly v_next = v_prev_ - symbolic_product(q, v_cur_);
    v_prev_ = std::exchange(v_cur_, std::move(v_next));
  }
  r_prev_ = std::exchange(r_cur_, std::move(r));
  quotient_ = std::move(q);
  ++index_;
}

SeeaTrace seea(const LinPoly& b, const LinPoly& a) {
  check_inputs(b, a);
  if (a.is_zero()) return empty_trace(b, a);
  SeeaTrace trace{b, a, {}, LinPoly(b.field())};
  SeeaStepper run(b, a, true);
  while (!run.done()) {
    run.step();
    trace.steps.push_back({run.index(), run.quotient(), run.remainder(), run.u(), run.v()});
  }
  trace.rsgcd = make_monic(run.prev_remainder());
  return trace;
}

SeeaStop seea_until_degree(const LinPoly& b, const LinPoly& a, int bound) {
  check_inputs(b, a);
  if (QDegree(bound) > b.q_degree()) {
    throw InvalidInput("degree bound exceeds deg_q B; the remainders never straddle it");
  }
  SeeaStop stop{0, SeeaTrace{b, a, {}, LinPoly(b.field())}};
  if (a.q_degree() < QDegree(bound)) {
    // deg R_{-1} >= bound > deg R_0: straddle before any step.
    stop.prefix.rsgcd = make_monic(a.is_zero() ? b : a);
    return stop;
  }
  SeeaStepper run(b, a, true);
  while (!run.done()) {
    run.step();
    stop.prefix.steps.push_back({run.index(), run.quotient(), run.remainder(), run.u(), run.v()});
    if (run.remainder().q_degree() < QDegree(bound)) break;
  }
  stop.index = run.index();
  // Last nonzero remainder seen so far.
  stop.prefix.rsgcd = make_monic(run.done() ? run.prev_remainder() : run.remainder());
  return stop;
}

}  // namespace rankdec
