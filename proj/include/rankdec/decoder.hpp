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

#ifndef RANKDEC_DECODER_HPP
#define RANKDEC_DECODER_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankdec/gabidulin.hpp"
#include "rankdec/keyeq.hpp"

namespace rankdec {

inline constexpr std::uint64_t kDefaultCombinationLimit = 1'000'000;

/// decode_beyond would have to enumerate more combinations than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RecoveryStatus {
  ok,
  improper_lambda,  // fewer independent roots than the q-degree
  inconsistent,     // no rank-t error with these roots has this syndrome
};

struct RecoveredError {
  RecoveryStatus status;
  Word error;  // empty unless status == ok
};

/**
 * Error with syndrome S whose column space is the root space of lambda.
 *
 * With E_1..E_t a root basis, the unknown is the t x n matrix Y over F_q in
 * e = E Y; the syndrome conditions S_l = sum_{j,k} Y_jk E_j h_k^[l] are
 * linear over F_q after coordinate expansion. Requires lambda monic with
 * q-degree >= 1.
 */
RecoveredError recover_error(const GabidulinCode& code, const LinPoly& lambda, const Syndrome& s);

enum class OutcomeKind { codeword, list, failure };

struct DecodeDiagnostics {
  bool syndrome_zero = false;
  int lambda_degree = -1;
  std::size_t root_space_dim = 0;
  std::size_t basis_size = 0;
  bool tail_filled = false;
  std::uint64_t basis_multiplications = 0;
  std::uint64_t combinations = 0;
  std::uint64_t proper_lambdas = 0;
  std::uint64_t recovered = 0;
  std::string failure;
};

struct DecodeOutcome {
  OutcomeKind kind;
  std::vector<Word> codewords;
  DecodeDiagnostics diagnostics;
};

/// Bounded-minimum-distance decoding up to floor((d-1)/2).
DecodeOutcome decode_bmd(const GabidulinCode& code, std::span<const Element> received);

/**
 * Every codeword within rank distance tau of the received word, for
 * floor((d-1)/2) < tau < d-1. Builds the key-equation basis, tries each
 * Lambda of q-degree exactly tau in its span (one per scalar class), and
 * adds the bounded-distance result. The list is sorted by serialization.
 *
 * Throws BudgetExceeded when (q^m)^(basis size) > limit. jobs > 1 splits
 * the enumeration across threads; the result does not depend on it.
 */
DecodeOutcome decode_beyond(const GabidulinCode& code, std::span<const Element> received,
                            std::size_t tau, std::uint64_t limit = kDefaultCombinationLimit,
                            unsigned jobs = 1);

const char* to_string(OutcomeKind kind) noexcept;

}  // namespace rankdec

#endif  // RANKDEC_DECODER_HPP
