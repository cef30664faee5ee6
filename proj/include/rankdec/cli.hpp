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

#ifndef RANKDEC_CLI_HPP
#define RANKDEC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rankdec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;

/**
 * Runs one subcommand. args excludes the program name. JSON goes to out,
 * messages to err. Kept separate from main() so tests can drive it in
 * process.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankdec::cli

#endif  // RANKDEC_CLI_HPP
