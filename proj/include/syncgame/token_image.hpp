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

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "syncgame/dfa.hpp"
#include "syncgame/error.hpp"
#include "syncgame/state_set.hpp"

namespace syncgame {

/// Byte-sliced lookup tables for the image of a token set under one letter:
/// the image is the union of one table entry per byte of the mask.
class TokenImageTable {
 public:
  explicit TokenImageTable(const Dfa& dfa)
      : letters_(dfa.letters()), chunks_((dfa.states() + 7) / 8) {
    if (dfa.states() > StateSet::kMaxStates) throw CapExceeded("state sets support at most 32 states");
    table_.assign(letters_ * chunks_ * 256, 0);
    for (Letter a = 0; a < letters_; ++a) {
      for (std::size_t c = 0; c < chunks_; ++c) {
        for (std::uint32_t byte = 0; byte < 256; ++byte) {
          std::uint32_t out = 0;
          for (unsigned bit = 0; bit < 8; ++bit) {
            const std::size_t q = c * 8 + bit;
            if ((byte >> bit & 1U) && q < dfa.states()) out |= std::uint32_t{1} << dfa.next(static_cast<State>(q), a);
          }
          table_[(a * chunks_ + c) * 256 + byte] = out;
        }
      }
    }
  }

  StateSet image(StateSet tokens, Letter a) const {
    std::uint32_t out = 0;
    const std::uint32_t bits = tokens.bits();
    const std::uint32_t* row = &table_[a * chunks_ * 256];
    for (std::size_t c = 0; c < chunks_; ++c) out |= row[c * 256 + ((bits >> (8 * c)) & 0xFFU)];
    return StateSet(out);
  }

  std::size_t letters() const { return letters_; }

 private:
  std::size_t letters_;
  std::size_t chunks_;
  std::vector<std::uint32_t> table_;
};

}  // namespace syncgame
