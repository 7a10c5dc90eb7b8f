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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "syncgame/error.hpp"
#include "syncgame/state_set.hpp"

namespace syncgame {

/// Index into a Dfa's alphabet.
using Letter = std::uint32_t;

/// Sequence of letter indices, read left to right.
using Word = std::vector<Letter>;

/// Complete deterministic automaton without initial or final states.
///
/// States are 0..states()-1. Letters are addressed by index internally and by
/// name at the boundaries (JSON, CLI, HTTP). Immutable once constructed.
class Dfa {
 public:
  /// `delta[a][q]` is the target of state q under letter a. Throws ParseError
  /// when the table is not total or the alphabet is malformed.
  Dfa(std::size_t states, std::vector<std::string> alphabet,
      std::vector<std::vector<State>> delta)
      : states_(states), alphabet_(std::move(alphabet)), delta_(std::move(delta)) {
    validate();
  }

  std::size_t states() const { return states_; }
  std::size_t letters() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& letter_name(Letter a) const { return alphabet_.at(a); }

  std::optional<Letter> find_letter(std::string_view name) const {
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (alphabet_[i] == name) return static_cast<Letter>(i);
    }
    return std::nullopt;
  }

  State next(State q, Letter a) const { return delta_[a][q]; }
  std::span<const State> action(Letter a) const { return delta_.at(a); }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  void validate() const {
    if (states_ == 0) throw ParseError("automaton must have at least one state");
    if (alphabet_.empty()) throw ParseError("alphabet must be nonempty");
    std::unordered_set<std::string> seen;
    for (const auto& name : alphabet_) {
      if (name.empty()) throw ParseError("letter names must be nonempty");
      if (!seen.insert(name).second) throw ParseError("duplicate letter '" + name + "'");
    }
    if (delta_.size() != alphabet_.size()) {
      throw ParseError("transition table must have one row per letter");
    }
    for (std::size_t a = 0; a < delta_.size(); ++a) {
      if (delta_[a].size() != states_) {
        throw ParseError("letter '" + alphabet_[a] + "' must map all " +
                         std::to_string(states_) + " states");
      }
      for (State target : delta_[a]) {
        if (target >= states_) {
          throw ParseError("letter '" + alphabet_[a] + "': target " + std::to_string(target) +
                           " out of range");
        }
      }
    }
  }

  std::size_t states_;
  std::vector<std::string> alphabet_;
  std::vector<std::vector<State>> delta_;
};

/// q.w, folding the letters of w from the left.
inline State apply(const Dfa& dfa, State q, std::span<const Letter> word) {
  for (Letter a : word) q = dfa.next(q, a);
  return q;
}

/// Image of a token set under a word. Requires states() <= StateSet::kMaxStates.
inline StateSet image(const Dfa& dfa, StateSet tokens, std::span<const Letter> word) {
  if (dfa.states() > StateSet::kMaxStates) {
    throw CapExceeded("state sets support at most 32 states");
  }
  for (Letter a : word) {
    StateSet next;
    for (std::uint32_t b = tokens.bits(); b != 0; b &= b - 1) {
      next.insert(dfa.next(static_cast<State>(std::countr_zero(b)), a));
    }
    tokens = next;
  }
  return tokens;
}

inline StateSet image(const Dfa& dfa, StateSet tokens, Letter a) {
  const Letter word[] = {a};
  return image(dfa, tokens, word);
}

namespace detail {
inline bool single_char_alphabet(const Dfa& dfa) {
  return std::all_of(dfa.alphabet().begin(), dfa.alphabet().end(),
                     [](const std::string& s) { return s.size() == 1; });
}
}  // namespace detail

/// Renders a word by letter names: concatenated when every name is a single
/// character, space separated otherwise.
inline std::string format_word(const Dfa& dfa, std::span<const Letter> word) {
  const bool compact = detail::single_char_alphabet(dfa);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += dfa.letter_name(word[i]);
  }
  return out;
}

/// Inverse of format_word. Space-separated tokens are always accepted.
inline Word parse_word(const Dfa& dfa, std::string_view text) {
  Word word;
  auto push = [&](std::string_view token) {
    auto letter = dfa.find_letter(token);
    if (!letter) throw ParseError("unknown letter '" + std::string(token) + "'");
    word.push_back(*letter);
  };
  const bool spaced = text.find(' ') != std::string_view::npos;
  if (!spaced && detail::single_char_alphabet(dfa)) {
    for (std::size_t i = 0; i < text.size(); ++i) push(text.substr(i, 1));
    return word;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    push(text.substr(pos, end - pos));
    pos = end;
  }
  return word;
}

}  // namespace syncgame
