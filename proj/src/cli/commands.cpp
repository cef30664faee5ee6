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

#include "rankdec/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rankdec/decoder.hpp"
#include "rankdec/gabidulin.hpp"
#include "rankdec/keyeq.hpp"
#include "rankdec/random.hpp"
#include "rankdec/seea.hpp"
#include "rankdec/serialize.hpp"

namespace rankdec::cli {

namespace {

// Inline JSON, or @path to read it from a file.
Json load_json(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidInput("cannot read " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

struct CodeArgs {
  std::string code;
  unsigned q = 2;
  unsigned m = 4;
  std::size_t n = 4;
  std::size_t k = 1;
  std::vector<Residue> modulus;
};

void add_field_options(CLI::App* sub, CodeArgs& a) {
  sub->add_option("--q", a.q, "Characteristic (prime)")->capture_default_str();
  sub->add_option("--m", a.m, "Extension degree")->capture_default_str();
  sub->add_option("--modulus", a.modulus,
                  "Monic irreducible modulus, ascending coefficients (default: first in base-q order)")
      ->delimiter(',');
}

void add_code_options(CLI::App* sub, CodeArgs& a) {
  sub->add_option("--code", a.code, "Code JSON, inline or @file; overrides --q/--m/--n/--k");
  add_field_options(sub, a);
  sub->add_option("--n", a.n, "Code length")->capture_default_str();
  sub->add_option("--k", a.k, "Code dimension")->capture_default_str();
}

FieldPtr make_field(const CodeArgs& a) {
  if (a.modulus.empty()) return FieldCtx::create(a.q, a.m);
  return FieldCtx::create(a.q, a.m, a.modulus);
}

GabidulinCode make_code(const CodeArgs& a) {
  if (!a.code.empty()) return code_from_json(load_json(a.code));
  return GabidulinCode::with_default_h(make_field(a), a.n, a.k);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// One simulated transmission.
struct TrialResult {
  bool success = false;
  bool budget_exceeded = false;
  std::size_t list_size = 0;
  std::size_t basis_size = 0;
  bool tail_filled = false;
  std::uint64_t multiplications = 0;
  std::uint64_t basis_multiplications = 0;
};

TrialResult run_trial(const GabidulinCode& code, std::size_t rank, bool list_mode,
                      std::size_t tau, std::uint64_t limit, std::uint64_t seed) {
  Rng rng(seed);
  const Word codeword = code.encode(random_message(code, rng));
  const Word received = add_words(codeword, random_error(code, rank, rng));
  TrialResult res;
  const OpCounter counter;
  if (!list_mode) {
    const DecodeOutcome out = decode_bmd(code, received);
    res.success = out.kind == OutcomeKind::codeword && out.codewords.front() == codeword;
    res.list_size = out.codewords.size();
  } else {
    try {
      const DecodeOutcome out = decode_beyond(code, received, tau, limit);
      res.success = std::find(out.codewords.begin(), out.codewords.end(), codeword) !=
                    out.codewords.end();
      res.list_size = out.codewords.size();
      res.basis_size = out.diagnostics.basis_size;
      res.tail_filled = out.diagnostics.tail_filled;
      res.basis_multiplications = out.diagnostics.basis_multiplications;
    } catch (const BudgetExceeded&) {
      res.budget_exceeded = true;
    }
  }
  res.multiplications = counter.elapsed().multiplications;
  return res;
}

Json histogram(const std::map<std::size_t, std::uint64_t>& h) {
  Json j = Json::object();
  for (const auto& [key, count] : h) j[std::to_string(key)] = count;
  return j;
}

struct SimArgs {
  CodeArgs code;
  std::vector<std::size_t> ranks{1};
  std::optional<std::size_t> tau;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string mode = "unique";
  std::uint64_t limit = kDefaultCombinationLimit;
};

Json simulate(const SimArgs& a) {
  const GabidulinCode code = make_code(a.code);
  const bool list_mode = a.mode == "list";
  const std::size_t half = (code.d() - 1) / 2;
  if (list_mode && !a.tau) throw InvalidInput("list mode needs --tau");
  const std::size_t tau = a.tau.value_or(half);
  if (list_mode && !(half < tau && tau + 1 < code.d())) {
    throw InvalidInput("radius must satisfy floor((d-1)/2) < tau < d-1");
  }
  if (!list_mode && tau != half) throw InvalidInput("unique mode decodes at tau = floor((d-1)/2)");
  for (std::size_t t : a.ranks) {
    if (t > std::min<std::size_t>(code.field().m(), code.n())) {
      throw InvalidInput("error rank cannot exceed min(m, n)");
    }
  }

  Json report;
  report["code"] = to_json(code);
  report["mode"] = a.mode;
  report["tau"] = tau;
  report["seed"] = a.seed;
  report["trials"] = a.trials;
  Json buckets = Json::array();
  for (std::size_t t : a.ranks) {
    std::vector<TrialResult> results(a.trials);
    auto work = [&](std::uint64_t first) {
      for (std::uint64_t i = first; i < a.trials; i += std::max(1u, a.jobs)) {
        results[i] = run_trial(code, t, list_mode, tau, a.limit, derive_seed(a.seed, {t, i}));
      }
    };
    if (a.jobs <= 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < a.jobs; ++w) threads.emplace_back(work, w);
    }

    std::uint64_t success = 0, failure = 0, budget = 0, tails = 0, mults = 0, basis_mults = 0;
    std::map<std::size_t, std::uint64_t> list_sizes, basis_sizes;
    for (const auto& r : results) {
      if (r.budget_exceeded) {
        ++budget;
        continue;
      }
      (r.success ? success : failure) += 1;
      mults += r.multiplications;
      basis_mults += r.basis_multiplications;
      if (list_mode) {
        ++list_sizes[r.list_size];
        ++basis_sizes[r.basis_size];
        tails += r.tail_filled ? 1 : 0;
      }
    }
    Json b;
    b["rank"] = t;
    b["trials"] = a.trials;
    b["success"] = success;
    b["failure"] = failure;
    b["budget_exceeded"] = budget;
    b["success_rate"] = a.trials == 0 ? 0.0 : static_cast<double>(success) / static_cast<double>(a.trials);
    if (list_mode) {
      b["list_sizes"] = histogram(list_sizes);
      b["basis_sizes"] = histogram(basis_sizes);
      b["tail_filled"] = tails;
    }
    b["multiplications"] = {{"decoder_total", mults}, {"basis_total", basis_mults}};
    buckets.push_back(std::move(b));
  }
  report["ranks"] = std::move(buckets);
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linearized polynomials, Gabidulin codes and key-equation decoding"};
  app.name("rankdec");
  app.require_subcommand(1);

  CodeArgs gen;
  auto* gencode = app.add_subcommand("gencode", "Print the JSON of a Gabidulin code");
  add_field_options(gencode, gen);
  gencode->add_option("--n", gen.n, "Code length")->capture_default_str();
  gencode->add_option("--k", gen.k, "Code dimension")->capture_default_str();

  CodeArgs enc_code;
  std::string message;
  auto* encode = app.add_subcommand("encode", "Encode a message");
  add_code_options(encode, enc_code);
  encode->add_option("--message", message, "Message word, JSON array of k elements")->required();

  CodeArgs syn_code;
  std::string syn_word;
  auto* syndrome = app.add_subcommand("syndrome", "Syndrome polynomial of a word");
  add_code_options(syndrome, syn_code);
  syndrome->add_option("--word", syn_word, "Word, JSON array of n elements")->required();

  CodeArgs ke_code;
  std::string ke_word;
  std::string ke_mode = "unique";
  std::optional<std::size_t> ke_tau;
  bool ke_trace = false;
  auto* keyeq = app.add_subcommand("keyeq", "Solve the key equation of a received word");
  add_code_options(keyeq, ke_code);
  keyeq->add_option("--word", ke_word, "Received word, JSON array")->required();
  keyeq->add_option("--mode", ke_mode, "unique, basis or oracle")
      ->check(CLI::IsMember({"unique", "basis", "oracle"}))
      ->capture_default_str();
  keyeq->add_option("--tau", ke_tau, "Decoding radius");
  keyeq->add_flag("--trace", ke_trace, "Include the Euclidean transcript (basis mode)");

  CodeArgs dec_code;
  std::string dec_word;
  std::optional<std::size_t> dec_tau;
  unsigned dec_jobs = 1;
  std::uint64_t limit = kDefaultCombinationLimit;
  auto* decode = app.add_subcommand("decode", "Decode a received word");
  add_code_options(decode, dec_code);
  decode->add_option("--word", dec_word, "Received word, JSON array")->required();
  decode->add_option("--tau", dec_tau, "List-decoding radius; omit for unique decoding");
  decode->add_option("--jobs", dec_jobs, "Worker threads")->capture_default_str();
  decode->add_option("--limit", limit, "Enumeration budget")
      ->envname("RANKDEC_LIMIT")
      ->capture_default_str();

  SimArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Seeded Monte-Carlo decoding runs");
  add_code_options(simulate_cmd, sim.code);
  simulate_cmd->add_option("--rank", sim.ranks, "Error ranks")->delimiter(',');
  simulate_cmd->add_option("--tau", sim.tau, "Decoding radius (list mode)");
  simulate_cmd->add_option("--trials", sim.trials, "Trials per rank")->capture_default_str();
  simulate_cmd->add_option("--seed", sim.seed, "64-bit seed")->capture_default_str();
  simulate_cmd->add_option("--jobs", sim.jobs, "Worker threads")->capture_default_str();
  simulate_cmd->add_option("--mode", sim.mode, "unique or list")
      ->check(CLI::IsMember({"unique", "list"}))
      ->capture_default_str();
  simulate_cmd->add_option("--limit", sim.limit, "Enumeration budget per trial")
      ->envname("RANKDEC_LIMIT")
      ->capture_default_str();

  CodeArgs tr_field;
  std::string tr_b, tr_a;
  auto* trace = app.add_subcommand("seea-trace", "Transcript of the symbolic Euclidean algorithm");
  add_field_options(trace, tr_field);
  trace->add_option("--b", tr_b, "B as a JSON array of elements")->required();
  trace->add_option("--a", tr_a, "A as a JSON array of elements, deg A < deg B")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "rankdec: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*gencode) {
      emit(out, to_json(make_code(gen)));
    } else if (*encode) {
      const GabidulinCode code = make_code(enc_code);
      const Word msg = word_from_json(code.field(), load_json(message));
      if (msg.size() != code.k()) throw InvalidInput("message must have k elements");
      emit(out, word_to_json(code.encode(msg)));
    } else if (*syndrome) {
      const GabidulinCode code = make_code(syn_code);
      const Word w = word_from_json(code.field(), load_json(syn_word));
      if (w.size() != code.n()) throw InvalidInput("word must have n elements");
      const Syndrome s = code.syndrome(w);
      Json j;
      j["syndrome"] = to_json(s);
      j["degree"] = degree_json(s);
      j["zero"] = s.is_zero();
      emit(out, j);
    } else if (*keyeq) {
      const GabidulinCode code = make_code(ke_code);
      const Word w = word_from_json(code.field(), load_json(ke_word));
      if (w.size() != code.n()) throw InvalidInput("word must have n elements");
      const Syndrome s = code.syndrome(w);
      const std::size_t d = code.d();
      const std::size_t half = (d - 1) / 2;
      Json j;
      j["mode"] = ke_mode;
      j["syndrome"] = to_json(s);
      if (ke_mode == "unique") {
        if (ke_tau && *ke_tau != half) throw InvalidInput("unique mode solves at tau = floor((d-1)/2)");
        j["tau"] = half;
        j["solution"] = to_json(solve_unique(s, d));
      } else {
        if (!ke_tau) throw InvalidInput("--tau is required in basis and oracle modes");
        const std::size_t tau = *ke_tau;
        if (!(half < tau && tau + 1 < d)) {
          throw InvalidInput("radius must satisfy floor((d-1)/2) < tau < d-1");
        }
        j["tau"] = tau;
        const std::vector<LinPoly> oracle = oracle_solutions(s, d, tau);
        if (ke_mode == "oracle") {
          Json kernel = Json::array();
          for (const auto& p : oracle) kernel.push_back(to_json(p));
          j["matrix_rank"] = rank(syndrome_matrix(s, d, tau));
          j["dimension"] = oracle.size();
          j["kernel"] = std::move(kernel);
        } else {
          const KeyEqBasis basis = solution_basis(s, d, tau);
          const std::vector<LinPoly> deltas = basis.deltas();
          j["basis"] = to_json(basis);
          j["size"] = basis.size();
          j["tail_filled"] = basis.tail_filled;
          j["oracle_dimension"] = oracle.size();
          j["span_equal"] = spans_equal(deltas, oracle);
          if (ke_trace) {
            j["trace"] = to_json(seea(LinPoly::monomial(code.field(), static_cast<unsigned>(d - 1)), s));
          }
        }
      }
      emit(out, j);
    } else if (*decode) {
      const GabidulinCode code = make_code(dec_code);
      const Word w = word_from_json(code.field(), load_json(dec_word));
      const DecodeOutcome res =
          dec_tau ? decode_beyond(code, w, *dec_tau, limit, dec_jobs) : decode_bmd(code, w);
      emit(out, to_json(res));
    } else if (*simulate_cmd) {
      emit(out, simulate(sim));
    } else if (*trace) {
      const FieldPtr field = make_field(tr_field);
      const LinPoly b = poly_from_json(*field, load_json(tr_b));
      const LinPoly a = poly_from_json(*field, load_json(tr_a));
      const SeeaTrace t = seea(b, a);
      Json j;
      j["field"] = to_json(*field);
      j["steps"] = to_json(t);
      j["rsgcd"] = to_json(t.rsgcd);
      emit(out, j);
    }
  } catch (const BudgetExceeded& e) {
    err << "rankdec: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ZeroSyndrome& e) {
    err << "rankdec: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    // InvalidInput and ContextError.
    err << "rankdec: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "rankdec: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace rankdec::cli
