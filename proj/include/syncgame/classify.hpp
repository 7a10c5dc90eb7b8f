/*
 * Copyright 2026 The syncgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "syncgame/builtin.hpp"
#include "syncgame/dfa.hpp"
#include "syncgame/dfa_io.hpp"
#include "syncgame/game.hpp"
#include "syncgame/green.hpp"
#include "syncgame/monoid.hpp"
#include "syncgame/semilattice.hpp"
#include "syncgame/strategy.hpp"
#include "syncgame/sync.hpp"

namespace syncgame {

/// Every classifier applied to one automaton.
struct ClassificationReport {
  std::size_t n = 0;
  std::size_t k = 0;
  bool synchronizing = false;
  /// Same question answered through the kernel of the monoid.
  bool synchronizing_via_kernel = false;
  std::optional<Word> shortest_reset;
  std::optional<std::size_t> reset_length;
  std::size_t monoid_size = 0;
  bool in_ds = false;
  std::optional<bool> a_automaton;
  std::optional<std::size_t> definite_degree;
  bool weakly_acyclic = false;
  bool commutative = false;
  bool r_trivial = false;
  std::optional<std::size_t> m;
  std::optional<std::size_t> height;
  std::optional<bool> kernel_equality;
  /// Set for synchronizing DS automata: both verification modes passed.
  std::optional<bool> strategy_verified;
  std::optional<std::size_t> strategy_max_letters;
  std::optional<std::size_t> strategy_bound;
  std::string strategy_failure;
  /// Definite automata only: every word of length definite_degree resets
  /// (checked by brute force when the degree is at most 8).
  std::optional<bool> definite_words_reset;
  /// Definite automata only: every non-identity element has a power in Ker S.
  std::optional<bool> definite_nilpotent;
  /// Definite automata only: Alice wins whatever letters she picks.
  std::optional<bool> definite_any_policy_wins;
};

struct ClassifyOptions {
  bool verify_strategy = true;
  std::size_t monoid_cap = kDefaultMonoidCap;
};

namespace detail {

/// True when every word of length k maps all states to one.
inline bool all_words_reset(const Dfa& dfa, std::size_t k) {
  std::vector<Letter> word(k, 0);
  const StateSet full = StateSet::full(static_cast<unsigned>(dfa.states()));
  for (;;) {
    if (!image(dfa, full, word).is_singleton()) return false;
    std::size_t i = 0;
    while (i < k && ++word[i] == dfa.letters()) word[i++] = 0;
    if (i == k) return true;
  }
}

/// From the start, with Alice and Bob both choosing arbitrarily, no reachable
/// position is lost for Alice.
inline bool any_alice_policy_wins(const GameSolution& sol) {
  std::unordered_set<std::uint64_t> seen;
  std::deque<GamePosition> queue{initial_position(sol.dfa())};
  while (!queue.empty()) {
    const GamePosition p = queue.front();
    queue.pop_front();
    if (!sol.alice_wins(p)) return false;
    if (p.terminal()) continue;
    for (Letter a = 0; a < sol.dfa().letters(); ++a) {
      const GamePosition next = sol.successor(p, a);
      const auto key = (static_cast<std::uint64_t>(next.tokens.bits()) << 1) | static_cast<std::uint64_t>(next.turn);
      if (seen.insert(key).second) queue.push_back(next);
    }
  }
  return true;
}

}  // namespace detail

inline ClassificationReport classify(const Dfa& dfa, const ClassifyOptions& options = {}) {
  ClassificationReport r;
  r.n = dfa.states();
  r.k = dfa.letters();
  r.synchronizing = is_synchronizing(dfa);
  r.weakly_acyclic = is_weakly_acyclic(dfa);

  const Monoid m = transition_monoid(dfa, options.monoid_cap);
  r.monoid_size = m.size();
  r.synchronizing_via_kernel = is_synchronizing_via_kernel(m);
  const GreenStructure gs = green_relations(m);
  r.in_ds = is_in_ds(m, gs).in_ds;
  r.r_trivial = is_r_trivial(m, gs);
  r.commutative = is_commutative(m);
  r.definite_degree = definite_degree(m);

  const bool game_sized = dfa.states() <= kGameStateCap;
  std::optional<GameSolution> sol;
  if (game_sized) {
    r.shortest_reset = shortest_reset_word(dfa);
    if (r.shortest_reset) r.reset_length = r.shortest_reset->size();
    sol.emplace(solve(dfa));
    r.a_automaton = sol->winner_from_start() == Player::Alice;
  }

  if (r.in_ds) {
    const SemilatticeDecomposition d = decompose(m, gs);
    r.m = d.m;
    r.height = d.height;
    r.kernel_equality = d.kernel_equality;
    if (r.synchronizing && options.verify_strategy && game_sized) {
      const auto early = verify_exhaustive(dfa, {.full_playout = false});
      const auto full = verify_exhaustive(dfa, {.full_playout = true});
      r.strategy_verified = early.passed && full.passed;
      r.strategy_max_letters = std::max(early.max_letters, full.max_letters);
      r.strategy_bound = early.bound;
      if (!early.passed) r.strategy_failure = "early-stop: " + early.failure;
      if (!full.passed) r.strategy_failure += (r.strategy_failure.empty() ? "" : "; ") + ("full-playout: " + full.failure);
    }
  }

  if (r.definite_degree) {
    const std::size_t k = *r.definite_degree;
    if (k <= 8) r.definite_words_reset = detail::all_words_reset(dfa, k);
    const auto ker = kernel(m);
    bool nilpotent = true;
    for (Element e = 1; e < m.size() && nilpotent; ++e) nilpotent = ker.contains(idempotent_power(m, e));
    r.definite_nilpotent = nilpotent;
    if (sol) r.definite_any_policy_wins = detail::any_alice_policy_wins(*sol);
  }
  return r;
}

/// Implications every record must satisfy; returns the ones that fail.
inline std::vector<std::string> check_implications(const ClassificationReport& r) {
  std::vector<std::string> bad;
  auto require = [&](bool condition, const char* what) {
    if (!condition) bad.emplace_back(what);
  };
  require(r.synchronizing == r.synchronizing_via_kernel, "pair closure and kernel test disagree");
  if (r.a_automaton) require(!*r.a_automaton || r.synchronizing, "a_automaton => synchronizing");
  if (r.in_ds && r.synchronizing) {
    if (r.a_automaton) require(*r.a_automaton, "in_ds & synchronizing => a_automaton");
    if (r.strategy_verified) require(*r.strategy_verified, "in_ds & synchronizing => strategy_verified");
    if (r.reset_length) require(*r.reset_length + 1 <= r.n, "in_ds & synchronizing => reset_length <= n-1");
  }
  if (r.definite_degree) {
    require(r.in_ds, "definite => in_ds");
    require(r.synchronizing, "definite => synchronizing");
    if (r.a_automaton) require(*r.a_automaton, "definite => a_automaton");
    if (r.definite_words_reset) require(*r.definite_words_reset, "definite => all length-k words reset");
    if (r.definite_nilpotent) require(*r.definite_nilpotent, "definite => nilpotent over kernel");
    if (r.definite_any_policy_wins) require(*r.definite_any_policy_wins, "definite => every Alice policy wins");
  }
  if (r.weakly_acyclic) require(r.r_trivial, "weakly_acyclic => r_trivial");
  if (r.r_trivial) require(r.in_ds, "r_trivial => in_ds");
  if (r.commutative) require(r.in_ds, "commutative => in_ds");
  return bad;
}

/// True when the record is a synchronizing DS automaton on which Alice does
/// not provably win.
inline bool ds_win_violated(const ClassificationReport& r) {
  if (!(r.in_ds && r.synchronizing)) return false;
  return (r.a_automaton && !*r.a_automaton) || (r.strategy_verified && !*r.strategy_verified);
}

/// Record as JSON with a fixed field order.
inline nlohmann::ordered_json report_to_json(const ClassificationReport& r) {
  auto opt = [](const auto& v) -> nlohmann::ordered_json {
    if (v) return *v;
    return nullptr;
  };
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["synchronizing"] = r.synchronizing;
  j["reset_length"] = opt(r.reset_length);
  j["in_ds"] = r.in_ds;
  j["a_automaton"] = opt(r.a_automaton);
  j["definite_degree"] = opt(r.definite_degree);
  j["weakly_acyclic"] = r.weakly_acyclic;
  j["commutative"] = r.commutative;
  j["r_trivial"] = r.r_trivial;
  j["m"] = opt(r.m);
  j["height"] = opt(r.height);
  j["strategy_verified"] = opt(r.strategy_verified);
  return j;
}

enum class BatchMode { Exhaustive, Sample };

struct BatchOptions {
  std::size_t n = 3;
  std::size_t k = 2;
  BatchMode mode = BatchMode::Exhaustive;
  std::size_t count = 500;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct BatchRecord {
  Dfa dfa;
  ClassificationReport report;
  std::vector<std::string> violations;
};

struct BatchResult {
  std::vector<BatchRecord> records;
  std::size_t synchronizing = 0;
  std::size_t in_ds = 0;
  std::size_t sync_ds = 0;
  std::size_t a_automata = 0;
  std::size_t strategy_verified = 0;
  std::size_t ds_win_violations = 0;
  std::size_t implication_violations = 0;
  std::size_t sync_check_disagreements = 0;
  /// Every synchronizing DS automaton had a reset word of length <= n - 1.
  bool ds_reset_bound_holds = true;
  /// A-automata whose shortest reset word is longer than n - 1 (record indices).
  std::vector<std::size_t> long_reset;
};

/// Automaton number `index` in the exhaustive enumeration: digit a*n + q (base
/// n, least significant first) is the target of state q under letter a.
inline Dfa enumerate_dfa(std::size_t n, std::size_t k, std::uint64_t index) {
  std::vector<std::vector<State>> delta(k, std::vector<State>(n));
  for (auto& row : delta) {
    for (auto& target : row) {
      target = static_cast<State>(index % n);
      index /= n;
    }
  }
  return Dfa(n, default_letter_names(k), std::move(delta));
}

/// Automata of a batch: all (n^n)^k tables, or `count` random ones whose
/// seeds are the successive outputs of SplitMix64(seed).
inline std::vector<Dfa> batch_automata(const BatchOptions& options) {
  std::vector<Dfa> out;
  if (options.mode == BatchMode::Exhaustive) {
    if (options.n > 3 || options.k > 2) {
      throw PreconditionError("bad_params", "exhaustive mode needs n <= 3 and k <= 2");
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < options.n * options.k; ++i) total *= options.n;
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(enumerate_dfa(options.n, options.k, i));
  } else {
    SplitMix64 seeds(options.seed);
    for (std::size_t i = 0; i < options.count; ++i) out.push_back(random_dfa(options.n, options.k, seeds.next()));
  }
  return out;
}

inline BatchResult run_batch(const std::vector<Dfa>& automata, unsigned threads = 0,
                             const ClassifyOptions& classify_options = {}) {
  BatchResult result;
  std::vector<std::optional<ClassificationReport>> reports(automata.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < automata.size() && !failed;) {
      try {
        reports[i] = classify(automata[i], classify_options);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < automata.size(); ++i) {
    const auto& r = *reports[i];
    BatchRecord rec{automata[i], r, check_implications(r)};
    result.synchronizing += r.synchronizing;
    result.in_ds += r.in_ds;
    result.sync_ds += r.in_ds && r.synchronizing;
    result.a_automata += r.a_automaton.value_or(false);
    result.strategy_verified += r.strategy_verified.value_or(false);
    result.ds_win_violations += ds_win_violated(r);
    result.implication_violations += !rec.violations.empty();
    result.sync_check_disagreements += r.synchronizing != r.synchronizing_via_kernel;
    if (r.in_ds && r.synchronizing && r.reset_length && *r.reset_length + 1 > r.n) {
      result.ds_reset_bound_holds = false;
    }
    if (r.a_automaton.value_or(false) && r.reset_length && *r.reset_length + 1 > r.n) {
      result.long_reset.push_back(i);
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

inline BatchResult run_batch(const BatchOptions& options) {
  return run_batch(batch_automata(options), options.threads);
}

inline nlohmann::ordered_json batch_summary_json(const BatchResult& b) {
  nlohmann::ordered_json j;
  j["automata"] = b.records.size();
  j["synchronizing"] = b.synchronizing;
  j["in_ds"] = b.in_ds;
  j["synchronizing_ds"] = b.sync_ds;
  j["a_automata"] = b.a_automata;
  j["strategy_verified"] = b.strategy_verified;
  j["ds_win_violations"] = b.ds_win_violations;
  j["implication_violations"] = b.implication_violations;
  j["sync_check_disagreements"] = b.sync_check_disagreements;
  j["ds_reset_bound_holds"] = b.ds_reset_bound_holds;
  auto q2 = nlohmann::ordered_json::array();
  for (auto i : b.long_reset) {
    nlohmann::ordered_json entry;
    entry["index"] = i;
    entry["reset_length"] = *b.records[i].report.reset_length;
    entry["automaton"] = dfa_to_json(b.records[i].dfa);
    q2.push_back(std::move(entry));
  }
  j["long_reset_a_automata"] = std::move(q2);
  return j;
}

}  // namespace syncgame
