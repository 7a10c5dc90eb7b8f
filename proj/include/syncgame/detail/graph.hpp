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
#include <cstdint>
#include <numeric>
#include <vector>

namespace syncgame::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when x and y were in different sets.
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
  }

  /// Class ids 0..count-1 numbered by the smallest member of each class.
  std::vector<std::uint32_t> canonical_ids(std::size_t* count = nullptr) {
    std::vector<std::uint32_t> root_id(parent_.size(), UINT32_MAX);
    std::vector<std::uint32_t> ids(parent_.size());
    std::uint32_t next = 0;
    for (std::uint32_t x = 0; x < parent_.size(); ++x) {
      auto& id = root_id[find(x)];
      if (id == UINT32_MAX) id = next++;
      ids[x] = id;
    }
    if (count) *count = next;
    return ids;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

/// Renumbers arbitrary class labels by order of first appearance.
inline std::vector<std::uint32_t> canonicalize(const std::vector<std::uint32_t>& labels,
                                               std::size_t* count = nullptr) {
  std::vector<std::uint32_t> remap;
  std::vector<std::uint32_t> out(labels.size());
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= remap.size()) remap.resize(labels[i] + 1, UINT32_MAX);
    auto& id = remap[labels[i]];
    if (id == UINT32_MAX) id = next++;
    out[i] = id;
  }
  if (count) *count = next;
  return out;
}

/// Strongly connected components (iterative Tarjan). `succ(v)` returns an
/// iterable of successor vertices. Component labels are canonical: numbered
/// by the smallest vertex they contain.
template <typename Successors>
std::vector<std::uint32_t> strongly_connected_components(std::size_t n, Successors succ,
                                                         std::size_t* count = nullptr) {
  constexpr std::uint32_t kUnvisited = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  struct Frame {
    std::uint32_t v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::uint32_t counter = 0, comps = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& out = succ(f.v);
      if (f.next < out.size()) {
        const std::uint32_t w = out[f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::uint32_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
    }
  }
  return canonicalize(comp, count);
}

}  // namespace syncgame::detail
