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

// Shared fixtures for the unit tests.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syncgame/syncgame.hpp"

namespace fixtures {

using syncgame::Dfa;
using syncgame::State;

/// Three states; 0 absorbs both letters, 1 -a-> 0, 1 -b-> 2, 2 -b-> 1.
inline Dfa copy_example() { return syncgame::builtin("paper_example"); }

/// Minimal automaton of (ab)*: a:[0,2,0], b:[0,0,1].
inline Dfa brandt() { return syncgame::builtin("brandt_minimal"); }

/// Two states, a = constant 0, b = identity.
inline Dfa const_id() { return Dfa(2, {"a", "b"}, {{0, 0}, {0, 1}}); }

/// Two states, a = identity, b = constant 0 (identity letter first).
inline Dfa id_const() { return Dfa(2, {"a", "b"}, {{0, 1}, {0, 0}}); }

inline Dfa one_state() { return Dfa(1, {"a"}, {{0}}); }

/// Two states and a single identity letter: not synchronizing.
inline Dfa identity2() { return Dfa(2, {"a"}, {{0, 1}}); }

/// A mixed pool of small automata for property checks: exhaustive 2-state
/// binary DFAs, the named examples and seeded random ones up to 5 states.
inline std::vector<Dfa> pool(std::size_t random_count = 150, std::uint64_t seed = 2026) {
  std::vector<Dfa> out;
  for (std::uint64_t i = 0; i < 16; ++i) out.push_back(syncgame::enumerate_dfa(2, 2, i));
  out.push_back(copy_example());
  out.push_back(brandt());
  out.push_back(syncgame::cerny_dfa(3));
  out.push_back(syncgame::cerny_dfa(4));
  out.push_back(one_state());
  out.push_back(identity2());
  syncgame::SplitMix64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t n = 2 + rng.below(4);
    const std::size_t k = 1 + rng.below(3);
    out.push_back(syncgame::random_dfa(n, k, rng.next()));
  }
  return out;
}

}  // namespace fixtures
