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

#include <bit>
#include <cstdint>
#include <vector>

namespace syncgame {

using State = std::uint32_t;

/// Set of states as a bit mask. Holds at most kMaxStates states.
class StateSet {
 public:
  static constexpr unsigned kMaxStates = 32;

  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr StateSet full(unsigned n) {
    return StateSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr StateSet singleton(State q) { return StateSet(std::uint32_t{1} << q); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(State q) const { return (bits_ >> q) & 1U; }
  constexpr void insert(State q) { bits_ |= std::uint32_t{1} << q; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_singleton() const { return std::has_single_bit(bits_); }

  std::vector<State> states() const {
    std::vector<State> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<State>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr bool operator==(StateSet, StateSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace syncgame
