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

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"
#include "syncgame/classify.hpp"
#include "syncgame/dfa.hpp"
#include "syncgame/dfa_io.hpp"
#include "syncgame/error.hpp"
#include "syncgame/game.hpp"
#include "syncgame/session.hpp"

namespace syncgame {

/// In-memory backend of the JSON game service. Transport independent: each
/// handler takes the request body / path ids and returns a status and body.
/// Automata are immutable once stored; each game has its own lock.
class GameService {
 public:
  struct Response {
    int status = 200;
    nlohmann::ordered_json body;
  };

  /// POST /automata
  Response create_automaton(const std::string& body) {
    return guarded([&] {
      Dfa dfa = parse_dfa(body, kGameStateCap);
      auto entry = std::make_shared<AutomatonEntry>(std::move(dfa));
      std::lock_guard lock(mutex_);
      const std::string id = "a" + std::to_string(++automaton_counter_);
      automata_.emplace(id, std::move(entry));
      nlohmann::ordered_json j;
      j["id"] = id;
      return Response{201, j};
    });
  }

  /// GET /automata/{id}/analysis
  Response analysis(const std::string& id) {
    return guarded([&] {
      auto entry = find_automaton(id);
      std::call_once(entry->report_once, [&] { entry->report = classify(entry->dfa); });
      auto j = report_to_json(*entry->report);
      return Response{200, j};
    });
  }

  /// GET /automata/{id}/solution
  Response solution(const std::string& id) {
    return guarded([&] {
      auto entry = find_automaton(id);
      auto sol = solution_of(*entry);
      const GamePosition start = initial_position(entry->dfa);
      const auto pv = principal_variation(*sol, start);
      nlohmann::ordered_json j;
      j["winner"] = std::string(to_string(sol->winner_from_start()));
      j["dist"] = sol->dist(start) ? nlohmann::ordered_json(*sol->dist(start)) : nlohmann::ordered_json(nullptr);
      auto letters = nlohmann::ordered_json::array();
      for (Letter a : pv.letters) letters.push_back(entry->dfa.letter_name(a));
      j["pv"] = std::move(letters);
      j["pv_cyclic"] = pv.cyclic;
      return Response{200, j};
    });
  }

  /// POST /games {automaton_id, human_side, engine_kind, seed}
  Response create_game(const std::string& body) {
    return guarded([&] {
      const auto req = parse_object(body);
      if (!req.contains("automaton_id") || !req["automaton_id"].is_string()) {
        throw ParseError("'automaton_id' is required");
      }
      auto entry = find_automaton(req["automaton_id"].get<std::string>());
      SessionConfig config;
      config.human = parse_player(string_field(req, "human_side", "bob"));
      config.engine = parse_engine_kind(string_field(req, "engine_kind", "auto"));
      if (req.contains("seed") && !req["seed"].is_null()) {
        if (!req["seed"].is_number_unsigned()) throw ParseError("'seed' must be a nonnegative integer");
        config.seed = req["seed"].get<std::uint64_t>();
      }
      std::string id;
      {
        std::lock_guard lock(mutex_);
        id = "g" + std::to_string(++game_counter_);
      }
      auto game = std::make_shared<GameEntry>(GameSession(id, entry->dfa, config, solution_of(*entry)));
      nlohmann::ordered_json j;
      j["game_id"] = id;
      j["position"] = game->session.to_json();
      {
        std::lock_guard lock(mutex_);
        games_.emplace(id, std::move(game));
      }
      return Response{201, j};
    });
  }

  /// GET /games/{id}
  Response game(const std::string& id) {
    return guarded([&] {
      auto game = find_game(id);
      std::lock_guard lock(game->mutex);
      return Response{200, game->session.to_json()};
    });
  }

  /// POST /games/{id}/moves {letter}
  Response move(const std::string& id, const std::string& body) {
    return guarded([&] {
      auto game = find_game(id);
      const auto req = parse_object(body);
      if (!req.contains("letter") || !req["letter"].is_string()) throw ParseError("'letter' is required");
      std::lock_guard lock(game->mutex);
      const auto& dfa = game->session.dfa();
      const auto letter = dfa.find_letter(req["letter"].get<std::string>());
      if (!letter) throw PreconditionError("bad_letter", "unknown letter '" + req["letter"].get<std::string>() + "'");
      const auto reply = game->session.move(*letter);
      auto j = game->session.to_json();
      j["engine_reply"] = reply ? nlohmann::ordered_json(dfa.letter_name(*reply)) : nlohmann::ordered_json(nullptr);
      return Response{200, j};
    });
  }

  static Response error(int status, const std::string& code, const std::string& message) {
    nlohmann::ordered_json j;
    j["code"] = code;
    j["message"] = message;
    return Response{status, j};
  }

 private:
  struct AutomatonEntry {
    explicit AutomatonEntry(Dfa d) : dfa(std::move(d)) {}

    Dfa dfa;
    std::once_flag solution_once;
    std::shared_ptr<const GameSolution> solution;
    std::once_flag report_once;
    std::optional<ClassificationReport> report;
  };

  struct GameEntry {
    explicit GameEntry(GameSession s) : session(std::move(s)) {}
    std::mutex mutex;
    GameSession session;
  };

  class NotFound : public Error {
   public:
    explicit NotFound(const std::string& what) : Error("not_found", what) {}
  };

  static int status_for(const std::string& code) {
    if (code == "not_found") return 404;
    if (code == "not_your_turn" || code == "game_finished") return 409;
    if (code == "parse_error" || code == "bad_letter") return 400;
    return 422;
  }

  template <typename F>
  Response guarded(F&& f) {
    try {
      return f();
    } catch (const Error& e) {
      return error(status_for(e.code()), e.code(), e.what());
    } catch (const std::exception& e) {
      return error(500, "internal_error", e.what());
    }
  }

  static nlohmann::json parse_object(const std::string& body) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("request body must be a JSON object");
    return j;
  }

  static std::string string_field(const nlohmann::json& j, const char* key, const char* fallback) {
    if (!j.contains(key) || j[key].is_null()) return fallback;
    if (!j[key].is_string()) throw ParseError(std::string("'") + key + "' must be a string");
    return j[key].get<std::string>();
  }

  std::shared_ptr<AutomatonEntry> find_automaton(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = automata_.find(id);
    if (it == automata_.end()) throw NotFound("no automaton '" + id + "'");
    return it->second;
  }

  std::shared_ptr<GameEntry> find_game(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = games_.find(id);
    if (it == games_.end()) throw NotFound("no game '" + id + "'");
    return it->second;
  }

  static std::shared_ptr<const GameSolution> solution_of(AutomatonEntry& entry) {
    std::call_once(entry.solution_once, [&] { entry.solution = std::make_shared<const GameSolution>(solve(entry.dfa)); });
    return entry.solution;
  }

  std::mutex mutex_;
  std::size_t automaton_counter_ = 0;
  std::size_t game_counter_ = 0;
  std::map<std::string, std::shared_ptr<AutomatonEntry>> automata_;
  std::map<std::string, std::shared_ptr<GameEntry>> games_;
};

}  // namespace syncgame
