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
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syncgame/detail/graph.hpp"
#include "syncgame/dfa.hpp"
#include "syncgame/dfa_io.hpp"
#include "syncgame/error.hpp"
#include "syncgame/monoid.hpp"
#include "syncgame/token_image.hpp"

namespace syncgame {

/// A pair of states that no word merges, or nullopt when every pair can be
/// merged. Backward search over the pair graph from the pairs that merge in
/// one letter; never touches the monoid.
inline std::optional<std::pair<State, State>> find_unmergeable_pair(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  if (n == 1) return std::nullopt;
  auto pair_id = [n](State p, State q) { return p < q ? p * n + q : q * n + p; };
  std::vector<std::vector<std::uint32_t>> preds(n * n);
  std::vector<bool> good(n * n, false);
  std::deque<std::uint32_t> queue;
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      const auto id = static_cast<std::uint32_t>(pair_id(p, q));
      for (Letter a = 0; a < dfa.letters(); ++a) {
        const State pa = dfa.next(p, a), qa = dfa.next(q, a);
        if (pa == qa) {
          if (!good[id]) {
            good[id] = true;
            queue.push_back(id);
          }
        } else {
          preds[pair_id(pa, qa)].push_back(id);
        }
      }
    }
  }
  while (!queue.empty()) {
    const auto id = queue.front();
    queue.pop_front();
    for (auto pred : preds[id]) {
      if (!good[pred]) {
        good[pred] = true;
        queue.push_back(pred);
      }
    }
  }
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      if (!good[pair_id(p, q)]) return std::pair{p, q};
    }
  }
  return std::nullopt;
}

/// A DFA is synchronizing iff every pair of states can be merged.
inline bool is_synchronizing(const Dfa& dfa) { return !find_unmergeable_pair(dfa).has_value(); }

/// Synchronizing iff the kernel of the transition monoid consists of
/// constant maps.
inline bool is_synchronizing_via_kernel(const Monoid& m) {
  const auto ker = kernel(m);
  return std::all_of(ker.elements().begin(), ker.elements().end(),
                     [&](Element e) { return m.is_constant(e); });
}

/// Shortest reset word, lexicographically least among the shortest, found by
/// breadth-first search of the power automaton from the full state set.
inline std::optional<Word> shortest_reset_word(const Dfa& dfa) {
  if (dfa.states() > kGameStateCap) {
    throw CapExceeded("shortest reset search supports at most " + std::to_string(kGameStateCap) +
                      " states");
  }
  const TokenImageTable table(dfa);
  const StateSet start = StateSet::full(static_cast<unsigned>(dfa.states()));
  if (start.is_singleton()) return Word{};
  struct Visit {
    std::uint32_t parent;
    Letter letter;
  };
  std::unordered_map<std::uint32_t, Visit> visited;
  visited.emplace(start.bits(), Visit{0, 0});
  std::deque<StateSet> queue{start};
  while (!queue.empty()) {
    const StateSet current = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.letters(); ++a) {
      const StateSet next = table.image(current, a);
      if (!visited.emplace(next.bits(), Visit{current.bits(), a}).second) continue;
      if (next.is_singleton()) {
        Word word;
        for (std::uint32_t s = next.bits(); s != start.bits();) {
          const Visit& v = visited.at(s);
          word.push_back(v.letter);
          s = v.parent;
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

/// Least k such that every word of length k acts as a constant map, or
/// nullopt when no such k exists.
///
/// Iterates the levels T_1 = {t_a}, T_{j+1} = T_j t_Sigma as subsets of the
/// monoid. All-constant levels are absorbing, so reaching a cycle (Brent's
/// detection) without one means the automaton is not definite. The search is
/// capped at 2|S| levels: a word of length |S| already has two equal prefix
/// transformations, so a definite automaton resets by then.
inline std::optional<std::size_t> definite_degree(const Monoid& m) {
  const std::size_t size = m.size();
  std::vector<bool> constant(size);
  for (Element e = 0; e < size; ++e) constant[e] = m.is_constant(e);

  using Level = std::vector<bool>;
  auto all_constant = [&](const Level& level) {
    for (Element e = 0; e < size; ++e) {
      if (level[e] && !constant[e]) return false;
    }
    return true;
  };
  auto advance = [&](const Level& level) {
    Level next(size, false);
    for (Element e = 0; e < size; ++e) {
      if (!level[e]) continue;
      for (Letter a = 0; a < m.letters(); ++a) next[m.right(e, a)] = true;
    }
    return next;
  };

  Level hare(size, false);
  for (Letter a = 0; a < m.letters(); ++a) hare[m.generator(a)] = true;
  std::size_t j = 1;
  if (all_constant(hare)) return j;
  Level tortoise = hare;
  std::size_t power = 1, lambda = 0;
  while (j < 2 * size) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = advance(hare);
    ++j;
    ++lambda;
    if (all_constant(hare)) return j;
    if (hare == tortoise) return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> definite_degree(const Dfa& dfa) {
  return definite_degree(transition_monoid(dfa));
}

/// Reachability is a partial order iff every strongly connected component of
/// the state graph is a single state (self-loops allowed).
inline bool is_weakly_acyclic(const Dfa& dfa) {
  std::vector<std::vector<State>> succ(dfa.states());
  for (State q = 0; q < dfa.states(); ++q) {
    for (Letter a = 0; a < dfa.letters(); ++a) succ[q].push_back(dfa.next(q, a));
  }
  std::size_t count = 0;
  detail::strongly_connected_components(
      dfa.states(), [&](std::uint32_t q) -> const std::vector<State>& { return succ[q]; }, &count);
  return count == dfa.states();
}

}  // namespace syncgame
