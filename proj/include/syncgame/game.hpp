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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "syncgame/dfa.hpp"
#include "syncgame/dfa_io.hpp"
#include "syncgame/error.hpp"
#include "syncgame/state_set.hpp"
#include "syncgame/token_image.hpp"

namespace syncgame {

enum class Player : std::uint8_t { Alice = 0, Bob = 1 };

constexpr Player opponent(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }

constexpr std::string_view to_string(Player p) { return p == Player::Alice ? "alice" : "bob"; }

inline Player parse_player(std::string_view text) {
  if (text == "alice") return Player::Alice;
  if (text == "bob") return Player::Bob;
  throw ParseError("player must be 'alice' or 'bob', got '" + std::string(text) + "'");
}

/// Tokens on the board and the player to move. Terminal once one token is left.
struct GamePosition {
  StateSet tokens;
  Player turn = Player::Alice;

  bool terminal() const { return tokens.is_singleton(); }
  friend bool operator==(const GamePosition&, const GamePosition&) = default;
};

/// Every state holds a token and Alice moves first.
inline GamePosition initial_position(const Dfa& dfa) {
  if (dfa.states() > StateSet::kMaxStates) throw CapExceeded("state sets support at most 32 states");
  return {StateSet::full(static_cast<unsigned>(dfa.states())), Player::Alice};
}

/// All tokens slide along `letter`; tokens meeting on a state merge.
inline GamePosition step(const Dfa& dfa, const GamePosition& p, Letter letter) {
  if (p.tokens.empty()) throw PreconditionError("empty_position", "position holds no tokens");
  if (p.terminal()) throw PreconditionError("terminal_position", "the game is already over");
  if (letter >= dfa.letters()) throw PreconditionError("bad_letter", "letter index out of range");
  return {image(dfa, p.tokens, letter), opponent(p.turn)};
}

/// Exact solution of the game over every (token set, player to move) pair.
class GameSolution {
 public:
  static constexpr std::int32_t kNotWon = -1;

  const Dfa& dfa() const { return dfa_; }

  bool alice_wins(const GamePosition& p) const { return dist_[index(p)] != kNotWon; }

  /// Plies until a single token remains under optimal play; nullopt where
  /// Bob can keep two tokens forever.
  std::optional<std::uint32_t> dist(const GamePosition& p) const {
    const auto d = dist_[index(p)];
    if (d == kNotWon) return std::nullopt;
    return static_cast<std::uint32_t>(d);
  }

  Player winner_from_start() const {
    return alice_wins(initial_position(dfa_)) ? Player::Alice : Player::Bob;
  }

  /// Successor without turn or terminal checks.
  GamePosition successor(const GamePosition& p, Letter a) const {
    return {table_.image(p.tokens, a), opponent(p.turn)};
  }

 private:
  friend GameSolution solve(const Dfa& dfa);

  explicit GameSolution(const Dfa& dfa) : dfa_(dfa), table_(dfa) {}

  static std::size_t index(StateSet tokens, Player turn) {
    return (static_cast<std::size_t>(tokens.bits()) << 1) | static_cast<std::size_t>(turn);
  }
  std::size_t index(const GamePosition& p) const {
    if (p.tokens.empty() || (p.tokens.bits() >> dfa_.states()) != 0) {
      throw PreconditionError("bad_position", "token set does not fit the automaton");
    }
    return index(p.tokens, p.turn);
  }

  Dfa dfa_;
  TokenImageTable table_;
  std::vector<std::int32_t> dist_;
};

/// Backward attractor for Alice, layer by layer. Layer 0 holds the singleton
/// positions; an Alice-to-move position joins layer d when some successor is
/// in an earlier layer, a Bob-to-move position when all of them are. Newly
/// won positions only become visible to the next layer, so each position's
/// layer is its distance: min over successors (+1) for Alice, max for Bob.
inline GameSolution solve(const Dfa& dfa) {
  if (dfa.states() > kGameStateCap) {
    throw CapExceeded("game solving supports at most " + std::to_string(kGameStateCap) + " states");
  }
  GameSolution sol(dfa);
  const std::uint32_t masks = std::uint32_t{1} << dfa.states();
  sol.dist_.assign(static_cast<std::size_t>(masks) * 2, GameSolution::kNotWon);

  std::vector<std::uint32_t> open;
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    for (Player turn : {Player::Alice, Player::Bob}) {
      const auto idx = GameSolution::index(StateSet(mask), turn);
      if (StateSet(mask).is_singleton()) {
        sol.dist_[idx] = 0;
      } else {
        open.push_back(static_cast<std::uint32_t>(idx));
      }
    }
  }

  std::vector<std::uint32_t> won_now;
  for (std::int32_t layer = 1;; ++layer) {
    won_now.clear();
    std::size_t keep = 0;
    for (std::uint32_t idx : open) {
      const StateSet tokens(idx >> 1);
      const Player turn = static_cast<Player>(idx & 1U);
      const Player next_turn = opponent(turn);
      bool any = false, all = true;
      for (Letter a = 0; a < dfa.letters(); ++a) {
        const auto d = sol.dist_[GameSolution::index(sol.table_.image(tokens, a), next_turn)];
        if (d != GameSolution::kNotWon) {
          any = true;
        } else {
          all = false;
        }
      }
      if (turn == Player::Alice ? any : all) {
        won_now.push_back(idx);
      } else {
        open[keep++] = idx;
      }
    }
    open.resize(keep);
    if (won_now.empty()) break;
    for (std::uint32_t idx : won_now) sol.dist_[idx] = layer;
  }
  return sol;
}

/// Alice takes a letter of least successor distance; Bob escapes to a
/// position Alice cannot win if there is one, otherwise delays by taking a
/// letter of greatest successor distance. Ties go to the earlier letter.
inline Letter optimal_move(const GameSolution& sol, const GamePosition& p) {
  if (p.terminal()) throw PreconditionError("terminal_position", "the game is already over");
  const Dfa& dfa = sol.dfa();
  Letter best = 0;
  if (p.turn == Player::Alice) {
    std::optional<std::uint32_t> best_dist;
    for (Letter a = 0; a < dfa.letters(); ++a) {
      const auto d = sol.dist(sol.successor(p, a));
      if (d && (!best_dist || *d < *best_dist)) {
        best_dist = d;
        best = a;
      }
    }
    return best;
  }
  std::optional<std::uint32_t> best_dist;
  for (Letter a = 0; a < dfa.letters(); ++a) {
    const auto d = sol.dist(sol.successor(p, a));
    if (!d) return a;
    if (!best_dist || *d > *best_dist) {
      best_dist = d;
      best = a;
    }
  }
  return best;
}

/// Play under mutual optimal moves.
struct PrincipalVariation {
  Word letters;
  /// A single token remained at the end.
  bool finished = false;
  /// Play returned to an earlier position; the letters cover one full lap.
  bool cyclic = false;
};

inline PrincipalVariation principal_variation(const GameSolution& sol, GamePosition from,
                                              std::size_t max_plies = 1000) {
  PrincipalVariation pv;
  std::unordered_set<std::uint64_t> seen;
  auto key = [](const GamePosition& p) {
    return (static_cast<std::uint64_t>(p.tokens.bits()) << 1) | static_cast<std::uint64_t>(p.turn);
  };
  while (pv.letters.size() < max_plies) {
    if (from.terminal()) {
      pv.finished = true;
      break;
    }
    if (!seen.insert(key(from)).second) {
      pv.cyclic = true;
      break;
    }
    const Letter a = optimal_move(sol, from);
    pv.letters.push_back(a);
    from = sol.successor(from, a);
  }
  if (!pv.finished && from.terminal()) pv.finished = true;
  return pv;
}

inline bool is_a_automaton(const Dfa& dfa) { return solve(dfa).winner_from_start() == Player::Alice; }

}  // namespace syncgame
