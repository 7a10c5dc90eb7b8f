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

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "syncgame/dfa.hpp"

namespace syncgame {

/// State-count limit applied to commands that enumerate token sets.
inline constexpr std::size_t kGameStateCap = 24;

/// Parses the canonical automaton document
/// `{"states": n, "alphabet": [...], "delta": {letter: [targets]}}`.
/// `max_states`, when set, rejects larger automata with CapExceeded.
inline Dfa parse_dfa(std::string_view text, std::optional<std::size_t> max_states = std::nullopt) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("automaton must be a JSON object");
  for (const char* key : {"states", "alphabet", "delta"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  }
  const auto& states = doc["states"];
  if (!states.is_number_integer() || states.get<long long>() < 1) {
    throw ParseError("'states' must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(states.get<long long>());
  if (n > std::numeric_limits<State>::max()) throw ParseError("'states' is too large");
  if (max_states && n > *max_states) {
    throw CapExceeded("automaton has " + std::to_string(n) + " states; limit is " +
                      std::to_string(*max_states));
  }
  const auto& alphabet_json = doc["alphabet"];
  if (!alphabet_json.is_array()) throw ParseError("'alphabet' must be an array");
  std::vector<std::string> alphabet;
  for (const auto& letter : alphabet_json) {
    if (!letter.is_string()) throw ParseError("letter names must be strings");
    alphabet.push_back(letter.get<std::string>());
  }
  const auto& delta_json = doc["delta"];
  if (!delta_json.is_object()) throw ParseError("'delta' must be an object");
  if (delta_json.size() != alphabet.size()) {
    throw ParseError("'delta' keys must be exactly the alphabet");
  }
  std::vector<std::vector<State>> delta;
  for (const auto& name : alphabet) {
    if (!delta_json.contains(name)) throw ParseError("'delta' has no row for letter '" + name + "'");
    const auto& row = delta_json[name];
    if (!row.is_array()) throw ParseError("'delta' row for '" + name + "' must be an array");
    std::vector<State> targets;
    for (const auto& t : row) {
      if (!t.is_number_integer() || t.get<long long>() < 0) {
        throw ParseError("'delta' row for '" + name + "' must hold state indices");
      }
      const auto target = t.get<long long>();
      if (static_cast<unsigned long long>(target) >= n) {
        throw ParseError("letter '" + name + "': target " + std::to_string(target) +
                         " out of range");
      }
      targets.push_back(static_cast<State>(target));
    }
    delta.push_back(std::move(targets));
  }
  return Dfa(n, std::move(alphabet), std::move(delta));
}

inline nlohmann::ordered_json dfa_to_json(const Dfa& dfa) {
  nlohmann::ordered_json doc;
  doc["states"] = dfa.states();
  doc["alphabet"] = dfa.alphabet();
  nlohmann::ordered_json delta = nlohmann::ordered_json::object();
  for (Letter a = 0; a < dfa.letters(); ++a) {
    auto row = dfa.action(a);
    delta[dfa.letter_name(a)] = std::vector<State>(row.begin(), row.end());
  }
  doc["delta"] = std::move(delta);
  return doc;
}

/// Canonical compact serialization; keys in the order states, alphabet, delta
/// and delta rows in alphabet order.
inline std::string serialize_dfa(const Dfa& dfa) { return dfa_to_json(dfa).dump(); }

/// GraphViz rendering. States holding a token are filled gray.
inline std::string to_dot(const Dfa& dfa, std::optional<StateSet> tokens = std::nullopt) {
  std::ostringstream out;
  out << "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (State q = 0; q < dfa.states(); ++q) {
    out << "  " << q;
    if (tokens && q < StateSet::kMaxStates && tokens->contains(q)) {
      out << " [style=filled, fillcolor=gray]";
    }
    out << ";\n";
  }
  std::map<std::pair<State, State>, std::string> labels;
  for (Letter a = 0; a < dfa.letters(); ++a) {
    for (State q = 0; q < dfa.states(); ++q) {
      auto& label = labels[{q, dfa.next(q, a)}];
      if (!label.empty()) label += ",";
      for (char c : dfa.letter_name(a)) {
        if (c == '"' || c == '\\') label += '\\';
        label += c;
      }
    }
  }
  for (const auto& [edge, label] : labels) {
    out << "  " << edge.first << " -> " << edge.second << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace syncgame
