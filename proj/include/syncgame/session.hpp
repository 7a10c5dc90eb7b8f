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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "syncgame/dfa.hpp"
#include "syncgame/error.hpp"
#include "syncgame/game.hpp"
#include "syncgame/strategy.hpp"

namespace syncgame {

enum class EngineKind : std::uint8_t { RoundStrategy, OptimalSolver };

constexpr std::string_view to_string(EngineKind kind) {
  return kind == EngineKind::RoundStrategy ? "paper" : "optimal";
}

/// "paper", "optimal", or "auto" (nullopt).
inline std::optional<EngineKind> parse_engine_kind(std::string_view text) {
  if (text == "paper") return EngineKind::RoundStrategy;
  if (text == "optimal") return EngineKind::OptimalSolver;
  if (text == "auto" || text.empty()) return std::nullopt;
  throw ParseError("engine kind must be 'paper', 'optimal' or 'auto'");
}

struct SessionConfig {
  Player human = Player::Bob;
  /// nullopt selects the round strategy whenever it applies.
  std::optional<EngineKind> engine;
  /// Seeds the round strategy's round openers; unset means first letter.
  std::optional<std::uint64_t> seed;
};

/// One human-versus-engine game. Not thread-safe; callers serialize access.
class GameSession {
 public:
  enum class Status { Ongoing, Finished };

  GameSession(std::string id, const Dfa& dfa, const SessionConfig& config,
              std::shared_ptr<const GameSolution> solution = nullptr)
      : id_(std::move(id)),
        dfa_(dfa),
        human_(config.human),
        solution_(solution ? std::move(solution) : std::make_shared<const GameSolution>(solve(dfa))),
        position_(initial_position(dfa)) {
    const Player engine_side = opponent(human_);
    std::shared_ptr<const StrategyContext> ctx;
    std::string why_not;
    if (engine_side == Player::Alice) {
      try {
        ctx = make_strategy_context(dfa);
      } catch (const PreconditionError& e) {
        why_not = e.what();
      }
    } else {
      why_not = "the round strategy only plays Alice";
    }
    if (config.engine == EngineKind::RoundStrategy && !ctx) {
      throw PreconditionError("engine_unavailable", "round strategy unavailable: " + why_not);
    }
    engine_ = config.engine.value_or(ctx ? EngineKind::RoundStrategy : EngineKind::OptimalSolver);
    if (engine_ == EngineKind::RoundStrategy) {
      StrategyOptions options;
      if (config.seed) options = {OpenerMode::Seeded, *config.seed};
      strategy_ = new_strategy(ctx, options);
    }
    if (!finished() && position_.turn == engine_side) play_engine();
  }

  const std::string& id() const { return id_; }
  const Dfa& dfa() const { return dfa_; }
  const GamePosition& position() const { return position_; }
  const Word& history() const { return history_; }
  Player human_side() const { return human_; }
  EngineKind engine_kind() const { return engine_; }
  bool finished() const { return position_.terminal(); }
  Status status() const { return finished() ? Status::Finished : Status::Ongoing; }
  Player winner_prediction() const { return solution_->alice_wins(position_) ? Player::Alice : Player::Bob; }
  const GameSolution& solution() const { return *solution_; }

  /// Plays the human's letter, then the engine's reply if the game goes on.
  /// Returns the engine's reply, if any.
  std::optional<Letter> move(Letter letter) {
    if (finished()) throw PreconditionError("game_finished", "the game is over");
    if (position_.turn != human_) throw PreconditionError("not_your_turn", "it is the engine's turn");
    if (letter >= dfa_.letters()) throw PreconditionError("bad_letter", "letter index out of range");
    apply_move(letter);
    if (finished()) return std::nullopt;
    return play_engine();
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["game_id"] = id_;
    j["tokens"] = position_.tokens.states();
    j["turn"] = std::string(to_string(position_.turn));
    auto history = nlohmann::ordered_json::array();
    for (Letter a : history_) history.push_back(dfa_.letter_name(a));
    j["history"] = std::move(history);
    j["status"] = finished() ? "finished" : "ongoing";
    j["winner_prediction"] = std::string(to_string(winner_prediction()));
    j["winner"] = finished() ? nlohmann::ordered_json("alice") : nlohmann::ordered_json(nullptr);
    j["human_side"] = std::string(to_string(human_));
    j["engine_kind"] = std::string(to_string(engine_));
    return j;
  }

 private:
  void apply_move(Letter letter) {
    if (strategy_) strategy_ = observe(*strategy_, position_.turn, letter);
    position_ = step(dfa_, position_, letter);
    history_.push_back(letter);
  }

  Letter play_engine() {
    const Letter letter =
        engine_ == EngineKind::RoundStrategy ? alice_letter(*strategy_) : optimal_move(*solution_, position_);
    apply_move(letter);
    return letter;
  }

  std::string id_;
  Dfa dfa_;
  Player human_;
  std::shared_ptr<const GameSolution> solution_;
  GamePosition position_;
  EngineKind engine_ = EngineKind::OptimalSolver;
  std::optional<StrategyState> strategy_;
  Word history_;
};

}  // namespace syncgame
