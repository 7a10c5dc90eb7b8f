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

// Brute-force reference implementations used only by the tests. They work on
// plain image vectors and std containers and share no code path with the
// library beyond the Dfa type itself.

#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "syncgame/dfa.hpp"

namespace oracle {

using syncgame::Dfa;
using syncgame::Letter;
using syncgame::State;

using Map = std::vector<State>;

inline Map mul(const Map& s, const Map& t) {
  Map out(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) out[q] = t[s[q]];
  return out;
}

inline Map letter_map(const Dfa& dfa, Letter a) {
  Map m(dfa.states());
  for (State q = 0; q < dfa.states(); ++q) m[q] = dfa.next(q, a);
  return m;
}

inline bool constant(const Map& m) {
  return std::all_of(m.begin(), m.end(), [&](State q) { return q == m.front(); });
}

/// All transformations of words (including the empty word), sorted.
inline std::vector<Map> enumerate(const Dfa& dfa) {
  Map id(dfa.states());
  for (State q = 0; q < dfa.states(); ++q) id[q] = q;
  std::set<Map> seen{id};
  std::deque<Map> queue{id};
  while (!queue.empty()) {
    Map cur = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.letters(); ++a) {
      Map next = mul(cur, letter_map(dfa, a));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Transformations of nonempty words.
inline std::vector<Map> enumerate_plus(const Dfa& dfa) {
  std::set<Map> seen;
  std::deque<Map> queue;
  for (Letter a = 0; a < dfa.letters(); ++a) {
    if (seen.insert(letter_map(dfa, a)).second) queue.push_back(letter_map(dfa, a));
  }
  while (!queue.empty()) {
    Map cur = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.letters(); ++a) {
      Map next = mul(cur, letter_map(dfa, a));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Finite semigroup given by its element list, with products by lookup.
struct Table {
  std::vector<Map> elems;
  std::vector<std::vector<std::size_t>> prod;

  explicit Table(std::vector<Map> e) : elems(std::move(e)) {
    std::map<Map, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
    prod.assign(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) prod[i][j] = index.at(mul(elems[i], elems[j]));
    }
  }
  std::size_t size() const { return elems.size(); }
  std::size_t find(const Map& m) const {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), m) - elems.begin());
  }
};

/// Equivalence from a boolean relation matrix: labels by smallest member.
inline std::vector<std::size_t> classes_of(const std::vector<std::vector<bool>>& rel) {
  std::vector<std::size_t> label(rel.size());
  for (std::size_t i = 0; i < rel.size(); ++i) {
    label[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (rel[i][j]) {
        label[i] = label[j];
        break;
      }
    }
  }
  return label;
}

inline void transitive_close(std::vector<std::vector<bool>>& rel) {
  const std::size_t n = rel.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
}

struct Green {
  std::vector<std::vector<bool>> r, l, d;
};

/// R, L from the definitions (a = bs, b = at with s, t in the monoid) and D
/// as the transitive closure of R union L.
inline Green green(const Table& t) {
  const std::size_t n = t.size();
  std::vector<std::set<std::size_t>> right(n), left(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t s = 0; s < n; ++s) {
      right[a].insert(t.prod[a][s]);
      left[a].insert(t.prod[s][a]);
    }
  }
  Green g;
  g.r.assign(n, std::vector<bool>(n));
  g.l = g.r;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      g.r[a][b] = right[a].count(b) && right[b].count(a);
      g.l[a][b] = left[a].count(b) && left[b].count(a);
    }
  }
  g.d = g.r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.d[a][b] = g.r[a][b] || g.l[a][b];
  transitive_close(g.d);
  return g;
}

inline bool regular(const Table& t, std::size_t a) {
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (t.prod[t.prod[a][s]][a] == a) return true;
  }
  return false;
}

/// Regular D-classes closed under the product, checked over all pairs.
inline bool in_ds(const Table& t) {
  const Green g = green(t);
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (!regular(t, a)) continue;
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (g.d[a][b] && !g.d[a][t.prod[a][b]]) return false;
    }
  }
  return true;
}

/// Intersection of all principal two-sided ideals.
inline std::set<std::size_t> kernel(const Table& t) {
  std::set<std::size_t> ker;
  for (std::size_t i = 0; i < t.size(); ++i) ker.insert(i);
  for (std::size_t a = 0; a < t.size(); ++a) {
    std::set<std::size_t> ideal;
    for (std::size_t s = 0; s < t.size(); ++s)
      for (std::size_t u = 0; u < t.size(); ++u) ideal.insert(t.prod[t.prod[s][a]][u]);
    std::set<std::size_t> both;
    std::set_intersection(ker.begin(), ker.end(), ideal.begin(), ideal.end(), std::inserter(both, both.begin()));
    ker = both;
  }
  return ker;
}

/// Kernel of the subsemigroup `sub` by the same construction.
inline std::set<std::size_t> kernel_of(const Table& t, const std::set<std::size_t>& sub) {
  std::set<std::size_t> ker = sub;
  for (std::size_t a : sub) {
    std::set<std::size_t> ideal{a};
    for (std::size_t s : sub) {
      ideal.insert(t.prod[s][a]);
      ideal.insert(t.prod[a][s]);
      for (std::size_t u : sub) ideal.insert(t.prod[t.prod[s][a]][u]);
    }
    std::set<std::size_t> both;
    std::set_intersection(ker.begin(), ker.end(), ideal.begin(), ideal.end(), std::inserter(both, both.begin()));
    ker = both;
  }
  return ker;
}

/// Least semilattice congruence from all seeds (x^2, x), (xy, yx), closed
/// under multiplication by every element until nothing changes.
inline std::vector<std::vector<bool>> semilattice_congruence(const Table& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  auto add = [&](std::size_t a, std::size_t b) { rel[a][b] = rel[b][a] = true; };
  for (std::size_t x = 0; x < n; ++x) {
    add(t.prod[x][x], x);
    for (std::size_t y = 0; y < n; ++y) add(t.prod[x][y], t.prod[y][x]);
  }
  for (bool changed = true; changed;) {
    changed = false;
    transitive_close(rel);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!rel[u][v]) continue;
        for (std::size_t s = 0; s < n; ++s) {
          for (auto [p, q] : {std::pair{t.prod[s][u], t.prod[s][v]}, std::pair{t.prod[u][s], t.prod[v][s]}}) {
            if (!rel[p][q]) {
              add(p, q);
              changed = true;
            }
          }
        }
      }
    }
  }
  return rel;
}

/// True when the partition is a congruence with a commutative idempotent
/// quotient.
inline bool is_semilattice_congruence(const Table& t, const std::vector<std::size_t>& label) {
  const std::size_t n = t.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (label[u] != label[v]) continue;
      for (std::size_t s = 0; s < n; ++s) {
        if (label[t.prod[s][u]] != label[t.prod[s][v]] || label[t.prod[u][s]] != label[t.prod[v][s]]) return false;
      }
    }
  for (std::size_t x = 0; x < n; ++x) {
    if (label[t.prod[x][x]] != label[x]) return false;
    for (std::size_t y = 0; y < n; ++y)
      if (label[t.prod[x][y]] != label[t.prod[y][x]]) return false;
  }
  return true;
}

inline std::size_t idempotent_power(const Table& t, std::size_t e) {
  std::size_t p = e;
  while (t.prod[p][p] != p) p = t.prod[p][e];
  return p;
}

/// Shortest reset length by BFS over std::set state sets.
inline std::optional<std::size_t> reset_length(const Dfa& dfa) {
  std::set<State> full;
  for (State q = 0; q < dfa.states(); ++q) full.insert(q);
  std::map<std::set<State>, std::size_t> dist{{full, 0}};
  std::deque<std::set<State>> queue{full};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur.size() == 1) return dist[cur];
    for (Letter a = 0; a < dfa.letters(); ++a) {
      std::set<State> next;
      for (State q : cur) next.insert(dfa.next(q, a));
      if (dist.emplace(next, dist[cur] + 1).second) queue.push_back(next);
    }
  }
  return std::nullopt;
}

/// Game values by plain value iteration over (set, turn), with distances.
struct NaiveGame {
  std::map<std::pair<std::set<State>, int>, std::size_t> dist;  // only won positions

  std::optional<std::size_t> at(const std::set<State>& s, int turn) const {
    auto it = dist.find({s, turn});
    if (it == dist.end()) return std::nullopt;
    return it->second;
  }
};

inline NaiveGame naive_solve(const Dfa& dfa) {
  std::vector<std::set<State>> sets;
  for (unsigned mask = 1; mask < (1U << dfa.states()); ++mask) {
    std::set<State> s;
    for (State q = 0; q < dfa.states(); ++q)
      if (mask >> q & 1U) s.insert(q);
    sets.push_back(s);
  }
  auto succ = [&](const std::set<State>& s, Letter a) {
    std::set<State> out;
    for (State q : s) out.insert(dfa.next(q, a));
    return out;
  };
  NaiveGame g;
  for (const auto& s : sets)
    if (s.size() == 1)
      for (int t : {0, 1}) g.dist[{s, t}] = 0;
  for (std::size_t level = 1;; ++level) {
    std::vector<std::pair<std::set<State>, int>> fresh;
    for (const auto& s : sets) {
      for (int t : {0, 1}) {
        if (g.dist.count({s, t})) continue;
        bool any = false, all = true;
        for (Letter a = 0; a < dfa.letters(); ++a) {
          if (g.dist.count({succ(s, a), 1 - t})) any = true;
          else all = false;
        }
        if (t == 0 ? any : all) fresh.emplace_back(s, t);
      }
    }
    if (fresh.empty()) break;
    for (auto& f : fresh) g.dist[f] = level;
  }
  return g;
}

/// Least k with every word of length k resetting, trying k = 1..max_k.
inline std::optional<std::size_t> definite_degree(const Dfa& dfa, std::size_t max_k) {
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<Letter> word(k, 0);
    bool all = true;
    for (;;) {
      std::set<State> s;
      for (State q = 0; q < dfa.states(); ++q) s.insert(syncgame::apply(dfa, q, word));
      if (s.size() != 1) {
        all = false;
        break;
      }
      std::size_t i = 0;
      while (i < k && ++word[i] == dfa.letters()) word[i++] = 0;
      if (i == k) break;
    }
    if (all) return k;
  }
  return std::nullopt;
}

/// Definite iff every idempotent produced by a nonempty word is constant.
inline bool definite_by_idempotents(const Dfa& dfa) {
  for (const Map& e : enumerate_plus(dfa)) {
    if (mul(e, e) == e && !constant(e)) return false;
  }
  return true;
}

/// Reachability relation is antisymmetric.
inline bool weakly_acyclic(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (State q = 0; q < n; ++q) {
    reach[q][q] = true;
    for (Letter a = 0; a < dfa.letters(); ++a) reach[q][dfa.next(q, a)] = true;
  }
  transitive_close(reach);
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      if (p != q && reach[p][q] && reach[q][p]) return false;
  return true;
}

}  // namespace oracle
