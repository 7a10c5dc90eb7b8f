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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syncgame/dfa.hpp"
#include "syncgame/error.hpp"

namespace syncgame {

/// SplitMix64. Portable and fully specified, so seeded automata reproduce
/// across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound) by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// "a", "b", ..., "z", then "l26", "l27", ...
inline std::vector<std::string> default_letter_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "l" + std::to_string(i));
  }
  return names;
}

/// Uniform random automaton; rows are drawn letter by letter, state by state.
inline Dfa random_dfa(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0 || k == 0) throw PreconditionError("bad_params", "random needs n >= 1 and k >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<State>> delta(k, std::vector<State>(n));
  for (auto& row : delta) {
    for (auto& target : row) target = static_cast<State>(rng.below(n));
  }
  return Dfa(n, default_letter_names(k), std::move(delta));
}

/// Černý automaton: a rotates the states, b sends 0 to 1 and fixes the rest.
inline Dfa cerny_dfa(std::size_t n) {
  if (n < 2) throw PreconditionError("bad_params", "cerny needs n >= 2");
  std::vector<State> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<State>((i + 1) % n);
    b[i] = static_cast<State>(i);
  }
  b[0] = 1;
  return Dfa(n, {"a", "b"}, {a, b});
}

/// Named generators: paper_example, brandt_minimal, cerny [n], random [n, k, seed].
inline Dfa builtin(std::string_view name, std::span<const std::int64_t> params = {}) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw PreconditionError("bad_params", std::string(name) + " takes " + std::to_string(count) +
                                                " parameter(s)");
    }
    for (auto p : params) {
      if (p < 0) throw PreconditionError("bad_params", "parameters must be nonnegative");
    }
  };
  if (name == "paper_example") {
    expect(0);
    return Dfa(3, {"a", "b"}, {{0, 0, 2}, {0, 2, 1}});
  }
  if (name == "brandt_minimal") {
    expect(0);
    return Dfa(3, {"a", "b"}, {{0, 2, 0}, {0, 0, 1}});
  }
  if (name == "cerny") {
    expect(1);
    return cerny_dfa(static_cast<std::size_t>(params[0]));
  }
  if (name == "random") {
    expect(3);
    return random_dfa(static_cast<std::size_t>(params[0]), static_cast<std::size_t>(params[1]),
                      static_cast<std::uint64_t>(params[2]));
  }
  throw PreconditionError("unknown_builtin", "unknown builtin automaton '" + std::string(name) + "'");
}

}  // namespace syncgame
