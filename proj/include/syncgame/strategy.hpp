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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syncgame/builtin.hpp"
#include "syncgame/dfa.hpp"
#include "syncgame/error.hpp"
#include "syncgame/game.hpp"
#include "syncgame/green.hpp"
#include "syncgame/monoid.hpp"
#include "syncgame/semilattice.hpp"
#include "syncgame/sync.hpp"
#include "syncgame/token_image.hpp"

namespace syncgame {

class NotSynchronizing : public PreconditionError {
 public:
  NotSynchronizing(State p, State q)
      : PreconditionError("not_synchronizing", "automaton is not synchronizing: states " +
                                                   std::to_string(p) + " and " + std::to_string(q) +
                                                   " can never be merged"),
        pair(p, q) {}

  std::pair<State, State> pair;
};

class NotDs : public PreconditionError {
 public:
  NotDs(const DsWitness& w, const std::string& detail)
      : PreconditionError("not_ds", "transition monoid is not in DS: " + detail), witness(w) {}

  DsWitness witness;
};

/// Everything the round strategy reads; built once and shared by all copies
/// of a StrategyState.
struct StrategyContext {
  Dfa dfa;
  Monoid monoid;
  GreenStructure green;
  SemilatticeDecomposition decomposition;
};

/// Throws NotSynchronizing or NotDs (checked in that order).
inline std::shared_ptr<const StrategyContext> make_strategy_context(const Dfa& dfa,
                                                                   std::size_t monoid_cap = kDefaultMonoidCap) {
  if (auto pair = find_unmergeable_pair(dfa)) throw NotSynchronizing(pair->first, pair->second);
  Monoid m = transition_monoid(dfa, monoid_cap);
  GreenStructure gs = green_relations(m);
  const DsVerdict verdict = is_in_ds(m, gs);
  if (!verdict.in_ds) {
    const auto& w = *verdict.witness;
    throw NotDs(w, "'" + format_word(dfa, m.witness(w.a)) + "' * '" + format_word(dfa, m.witness(w.b)) +
                       "' leaves regular D-class " + std::to_string(w.d_class));
  }
  SemilatticeDecomposition d = decompose(m, gs);
  return std::make_shared<const StrategyContext>(
      StrategyContext{dfa, std::move(m), std::move(gs), std::move(d)});
}

enum class Awaiting : std::uint8_t { AliceFirst, BobReply, AliceDescent };

/// How Alice opens each round. Any opener works; the default is the first
/// letter so that play is reproducible.
enum class OpenerMode : std::uint8_t { FirstLetter, Seeded };

struct StrategyOptions {
  OpenerMode opener = OpenerMode::FirstLetter;
  std::uint64_t seed = 0;
};

/// Alice's m-round strategy as a small copyable state machine.
///
/// Each round, Alice opens freely, then after every Bob reply looks at the
/// component y of the round's word so far. If y is the least component z the
/// round closes; otherwise she plays the first letter a with y not <= y(a),
/// which pushes the round word strictly down in Y. After m closed rounds the
/// accumulated word is a product of m elements of S_z, hence in Ker S_z, hence
/// constant. Token positions are never consulted.
class StrategyState {
 public:
  StrategyState(std::shared_ptr<const StrategyContext> ctx, StrategyOptions options)
      : ctx_(std::move(ctx)), options_(options), rng_(options.seed) {}

  const StrategyContext& context() const { return *ctx_; }
  std::size_t round() const { return round_; }
  std::size_t pair_index() const { return pair_; }
  Element round_element() const { return round_element_; }
  Element word_element() const { return word_element_; }
  Awaiting awaiting() const { return awaiting_; }
  const Word& word() const { return word_; }
  /// Component the current descent started from, while a Bob reply is pending.
  std::optional<Component> descent_from() const { return descent_from_; }
  bool complete() const { return round_ > ctx_->decomposition.m; }
  Player to_move() const { return awaiting_ == Awaiting::BobReply ? Player::Bob : Player::Alice; }

 private:
  friend Letter alice_letter(const StrategyState& st);
  friend StrategyState observe(const StrategyState& st, Player player, Letter letter);

  std::shared_ptr<const StrategyContext> ctx_;
  StrategyOptions options_;
  SplitMix64 rng_;
  std::size_t round_ = 1;
  std::size_t pair_ = 0;
  Element round_element_ = Monoid::identity();
  Element word_element_ = Monoid::identity();
  Awaiting awaiting_ = Awaiting::AliceFirst;
  std::optional<Component> descent_from_;
  Word word_;
};

inline StrategyState new_strategy(const Dfa& dfa, StrategyOptions options = {}) {
  return StrategyState(make_strategy_context(dfa), options);
}

inline StrategyState new_strategy(std::shared_ptr<const StrategyContext> ctx, StrategyOptions options = {}) {
  return StrategyState(std::move(ctx), options);
}

/// Alice's next letter. Pure: calling it twice gives the same letter.
inline Letter alice_letter(const StrategyState& st) {
  if (st.complete()) throw PreconditionError("strategy_complete", "all rounds are closed");
  const auto& ctx = *st.ctx_;
  if (st.awaiting_ == Awaiting::BobReply) throw PreconditionError("out_of_turn", "Bob is to move");
  if (st.awaiting_ == Awaiting::AliceFirst) {
    if (st.options_.opener == OpenerMode::Seeded) {
      SplitMix64 peek = st.rng_;
      return static_cast<Letter>(peek.below(ctx.dfa.letters()));
    }
    return 0;
  }
  const auto& d = ctx.decomposition;
  const Component y = d.component_of[st.round_element_];
  if (y == d.z) throw InvariantViolation("descent requested from the least component");
  for (Letter a = 0; a < ctx.dfa.letters(); ++a) {
    if (!d.leq(y, d.letter_component[a])) return a;
  }
  throw InvariantViolation("no descent letter exists");
}

/// Records the letter just played by `player`.
inline StrategyState observe(const StrategyState& st, Player player, Letter letter) {
  if (st.complete()) throw PreconditionError("strategy_complete", "all rounds are closed");
  if (player != st.to_move()) {
    throw PreconditionError("out_of_turn", std::string("it is not ") + std::string(to_string(player)) +
                                               "'s turn");
  }
  const auto& ctx = *st.ctx_;
  if (letter >= ctx.dfa.letters()) throw PreconditionError("bad_letter", "letter index out of range");
  const auto& d = ctx.decomposition;
  const auto& m = ctx.monoid;
  StrategyState next = st;
  next.word_.push_back(letter);
  next.word_element_ = m.right(st.word_element_, letter);
  next.round_element_ = m.right(st.round_element_, letter);

  if (player == Player::Alice) {
    if (st.awaiting_ == Awaiting::AliceFirst) {
      if (st.options_.opener == OpenerMode::Seeded) next.rng_.below(ctx.dfa.letters());
      next.descent_from_.reset();
    } else {
      next.descent_from_ = d.component_of[st.round_element_];
    }
    next.awaiting_ = Awaiting::BobReply;
    return next;
  }

  ++next.pair_;
  const Component x = d.component_of[next.round_element_];
  if (st.descent_from_ && !d.less(x, *st.descent_from_)) {
    throw InvariantViolation("descent was not strict");
  }
  next.descent_from_.reset();
  if (x == d.z) {
    ++next.round_;
    next.pair_ = 0;
    next.round_element_ = Monoid::identity();
    next.awaiting_ = Awaiting::AliceFirst;
  } else {
    next.awaiting_ = Awaiting::AliceDescent;
  }
  return next;
}

/// Letters (both players) the strategy can use: m rounds, each at most
/// `height` pairs of moves.
inline std::size_t strategy_length_bound(const SemilatticeDecomposition& d) { return 2 * d.m * d.height; }

struct VerifyOptions {
  /// Keep playing past a single token until round m closes, then require the
  /// whole word to be a reset word.
  bool full_playout = false;
  /// Branch over every opener letter instead of the default one.
  bool all_openers = false;
  std::size_t node_cap = 4'000'000;
};

struct VerifyReport {
  bool passed = true;
  std::size_t nodes = 0;
  /// Root-to-leaf paths in the game tree (saturating).
  std::uint64_t branches = 0;
  std::size_t max_letters = 0;
  std::size_t bound = 0;
  std::size_t m = 0;
  std::size_t height = 0;
  /// Longest word built over a full playout; set only in that mode.
  std::optional<Word> longest_reset_word;
  std::string failure;
  Word counterexample;
};

namespace detail {

struct VerifyViolation {
  std::string reason;
  Word trace;
};

struct VerifyKey {
  std::uint32_t position;  // token bits, or the word element in full playout
  std::uint32_t round;
  std::uint32_t round_element;
  std::uint32_t descent_from;
  std::uint8_t awaiting;
  friend bool operator==(const VerifyKey&, const VerifyKey&) = default;
};

struct VerifyKeyHash {
  std::size_t operator()(const VerifyKey& k) const noexcept {
    std::uint64_t h = k.position;
    for (std::uint64_t v : {std::uint64_t{k.round}, std::uint64_t{k.round_element},
                            std::uint64_t{k.descent_from}, std::uint64_t{k.awaiting}}) {
      h = (h ^ v) * 0x100000001B3ULL + (h >> 29);
    }
    return static_cast<std::size_t>(h);
  }
};

struct VerifyNode {
  std::size_t remaining = 0;
  std::uint64_t paths = 0;
  Letter best = 0;
};

}  // namespace detail

/// Plays the strategy for Alice against every possible Bob reply and checks
/// that each branch ends in a single token (or, in full playout, a reset word)
/// within strategy_length_bound letters. Nodes are memoized on the token set
/// (word element in full playout) and the strategy state.
///
/// Throws NotSynchronizing / NotDs when the strategy does not apply; a failed
/// check is reported, with the offending play, rather than thrown.
inline VerifyReport verify_exhaustive(const Dfa& dfa, const VerifyOptions& options = {}) {
  auto ctx = make_strategy_context(dfa);
  const auto& d = ctx->decomposition;
  const auto& m = ctx->monoid;
  const TokenImageTable table(dfa);

  VerifyReport report;
  report.bound = strategy_length_bound(d);
  report.m = d.m;
  report.height = d.height;

  std::unordered_map<detail::VerifyKey, detail::VerifyNode, detail::VerifyKeyHash> memo;
  Word path;

  auto key_of = [&](const StrategyState& st, StateSet tokens) {
    return detail::VerifyKey{options.full_playout ? st.word_element() : tokens.bits(),
                             static_cast<std::uint32_t>(st.round()), st.round_element(),
                             st.descent_from().value_or(UINT32_MAX),
                             static_cast<std::uint8_t>(st.awaiting())};
  };
  auto is_leaf = [&](const StrategyState& st, StateSet tokens) {
    if (options.full_playout) {
      if (!st.complete()) return false;
      if (!m.is_constant(st.word_element()) || !d.kernel_z.contains(st.word_element())) {
        throw detail::VerifyViolation{"word after round m is not a reset word", path};
      }
      return true;
    }
    if (tokens.is_singleton()) return true;
    if (st.complete()) throw detail::VerifyViolation{"rounds closed with two or more tokens left", path};
    return false;
  };
  auto moves = [&](const StrategyState& st) {
    std::vector<Letter> letters;
    const bool branch_all = st.awaiting() == Awaiting::BobReply ||
                            (options.all_openers && st.awaiting() == Awaiting::AliceFirst);
    if (branch_all) {
      for (Letter a = 0; a < dfa.letters(); ++a) letters.push_back(a);
    } else {
      letters.push_back(alice_letter(st));
    }
    return letters;
  };

  std::function<detail::VerifyNode(const StrategyState&, StateSet)> explore =
      [&](const StrategyState& st, StateSet tokens) -> detail::VerifyNode {
    if (is_leaf(st, tokens)) return {0, 1, 0};
    if (path.size() > report.bound) {
      throw detail::VerifyViolation{"play exceeded the length bound", path};
    }
    const auto key = key_of(st, tokens);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    detail::VerifyNode node;
    for (Letter a : moves(st)) {
      path.push_back(a);
      StrategyState child = [&] {
        try {
          return observe(st, st.to_move(), a);
        } catch (const InvariantViolation& e) {
          throw detail::VerifyViolation{e.what(), path};
        }
      }();
      const auto sub = explore(child, table.image(tokens, a));
      path.pop_back();
      if (node.paths == 0 || sub.remaining + 1 > node.remaining) {
        node.remaining = sub.remaining + 1;
        node.best = a;
      }
      node.paths = node.paths > UINT64_MAX - sub.paths ? UINT64_MAX : node.paths + sub.paths;
    }
    if (memo.size() >= options.node_cap) throw CapExceeded("verification node cap reached");
    memo.emplace(key, node);
    return node;
  };

  const StrategyState root = new_strategy(ctx);
  const StateSet start = StateSet::full(static_cast<unsigned>(dfa.states()));
  try {
    const auto top = explore(root, start);
    report.nodes = memo.size();
    report.branches = top.paths;
    report.max_letters = top.remaining;
    if (report.max_letters > report.bound) {
      report.passed = false;
      report.failure = "play exceeded the length bound";
    }
    if (options.full_playout) {
      // Follow the recorded longest branch.
      StrategyState st = root;
      StateSet tokens = start;
      while (!st.complete()) {
        const auto it = memo.find(key_of(st, tokens));
        const Letter a = it->second.best;
        st = observe(st, st.to_move(), a);
        tokens = table.image(tokens, a);
      }
      report.longest_reset_word = st.word();
    }
  } catch (const detail::VerifyViolation& v) {
    report.passed = false;
    report.nodes = memo.size();
    report.failure = v.reason;
    report.counterexample = v.trace;
  }
  return report;
}

}  // namespace syncgame
