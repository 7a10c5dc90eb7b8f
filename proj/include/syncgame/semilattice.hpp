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
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syncgame/detail/graph.hpp"
#include "syncgame/error.hpp"
#include "syncgame/green.hpp"
#include "syncgame/monoid.hpp"

namespace syncgame {

/// Component id in the semilattice Y.
using Component = std::uint32_t;

/// Least semilattice congruence of the monoid, as canonical class labels.
///
/// Congruence closure over a union-find. Seeds are a^2 ~ a and ab ~ ba for
/// generators a, b: the quotient is then a commutative monoid generated by
/// idempotents, hence a semilattice, and every semilattice congruence must
/// contain these pairs. Each successful merge (u, v) is propagated to
/// (uc, vc) and (cu, cv) for every letter c, which closes the generated
/// equivalence under multiplication by all words.
inline std::vector<Component> least_semilattice_congruence(const Monoid& m,
                                                           std::size_t* count = nullptr) {
  detail::UnionFind uf(m.size());
  std::deque<std::pair<Element, Element>> pending;
  auto merge = [&](Element x, Element y) {
    if (uf.unite(x, y)) pending.emplace_back(x, y);
  };
  for (Letter a = 0; a < m.letters(); ++a) {
    const Element ga = m.generator(a);
    merge(m.right(ga, a), ga);
    for (Letter b = a + 1; b < m.letters(); ++b) {
      merge(m.right(ga, b), m.right(m.generator(b), a));
    }
  }
  while (!pending.empty()) {
    const auto [u, v] = pending.front();
    pending.pop_front();
    for (Letter c = 0; c < m.letters(); ++c) {
      merge(m.right(u, c), m.right(v, c));
      merge(m.left(u, c), m.left(v, c));
    }
  }
  return uf.canonical_ids(count);
}

/// S as a semilattice Y of subsemigroups S_y, plus the data Alice's round
/// strategy needs: the least component z, the nilpotency index of S_z over
/// its kernel, and the height of Y.
struct SemilatticeDecomposition {
  std::vector<Component> component_of;
  std::size_t component_count = 0;
  std::vector<std::vector<Element>> members;
  /// Flattened |Y| x |Y| product table of the quotient.
  std::vector<Component> y_table;
  Component z = 0;
  SubsemigroupRef s_z;
  SubsemigroupRef kernel_z;
  SubsemigroupRef kernel_s;
  /// Least m with every product of m elements of S_z inside kernel_z.
  std::size_t m = 1;
  /// m - 1 elements of S_z whose product escapes kernel_z (empty when m == 1).
  std::vector<Element> escape_factors;
  /// Number of elements in the longest strictly decreasing chain of Y.
  std::size_t height = 1;
  std::vector<Component> letter_component;
  /// Whether Ker S_z == Ker S was observed; recorded, never assumed.
  bool kernel_equality = false;
  /// Which S3 check ran: "pairwise" or "generators".
  std::string s3_check;

  Component product(Component x, Component y) const { return y_table[x * component_count + y]; }
  /// x <= y iff xy = x.
  bool leq(Component x, Component y) const { return product(x, y) == x; }
  bool less(Component x, Component y) const { return x != y && leq(x, y); }
};

inline Component component_of_transformation(const SemilatticeDecomposition& d, Element e) {
  return d.component_of.at(e);
}

/// Above this size S3 is verified through the Cayley graphs (x·a and a·x for
/// every element and letter, which implies S3 by induction on word length)
/// instead of over all |S|^2 pairs.
inline constexpr std::size_t kPairwiseVerifyLimit = 2000;

/// Builds and verifies the decomposition of a monoid in DS. Throws
/// PreconditionError("not_ds") for monoids outside DS and InvariantViolation
/// if any structural check fails.
inline SemilatticeDecomposition decompose(const Monoid& m, const GreenStructure& gs) {
  if (!is_in_ds(m, gs).in_ds) {
    throw PreconditionError("not_ds", "transition monoid is not in DS");
  }
  SemilatticeDecomposition d;
  d.component_of = least_semilattice_congruence(m, &d.component_count);
  const std::size_t ny = d.component_count;
  d.members.assign(ny, {});
  for (Element e = 0; e < m.size(); ++e) d.members[d.component_of[e]].push_back(e);

  d.y_table.resize(ny * ny);
  for (Component x = 0; x < ny; ++x) {
    for (Component y = 0; y < ny; ++y) {
      d.y_table[x * ny + y] = d.component_of[m.product(d.members[x].front(), d.members[y].front())];
    }
  }
  for (Component x = 0; x < ny; ++x) {
    if (d.product(x, x) != x) throw InvariantViolation("quotient is not idempotent");
    for (Component y = 0; y < ny; ++y) {
      if (d.product(x, y) != d.product(y, x)) throw InvariantViolation("quotient is not commutative");
    }
  }
  for (Letter a = 0; a < m.letters(); ++a) d.letter_component.push_back(d.component_of[m.generator(a)]);

  // (S2) and (S3).
  if (m.size() <= kPairwiseVerifyLimit) {
    d.s3_check = "pairwise";
    for (Element s = 0; s < m.size(); ++s) {
      for (Element t = 0; t < m.size(); ++t) {
        const Component expected = d.product(d.component_of[s], d.component_of[t]);
        if (d.component_of[m.product(s, t)] != expected) {
          throw InvariantViolation("(S3) fails for elements " + std::to_string(s) + ", " +
                                   std::to_string(t));
        }
      }
    }
  } else {
    d.s3_check = "generators";
    for (Element s = 0; s < m.size(); ++s) {
      for (Letter a = 0; a < m.letters(); ++a) {
        const Component cs = d.component_of[s], ca = d.letter_component[a];
        if (d.component_of[m.right(s, a)] != d.product(cs, ca) ||
            d.component_of[m.left(s, a)] != d.product(ca, cs)) {
          throw InvariantViolation("(S3) fails at element " + std::to_string(s));
        }
      }
    }
  }

  // Least element of Y.
  bool found = false;
  for (Component x = 0; x < ny && !found; ++x) {
    bool least = true;
    for (Component y = 0; y < ny && least; ++y) least = d.product(x, y) == x;
    if (least) {
      d.z = x;
      found = true;
    }
  }
  if (!found) throw InvariantViolation("semilattice has no least element");

  d.s_z = SubsemigroupRef::trusted(m, d.members[d.z]);
  d.kernel_s = kernel(m);
  d.kernel_z = kernel(m, d.s_z);
  if (!d.kernel_s.is_subset_of(d.s_z)) throw InvariantViolation("Ker S is not inside S_z");
  if (!d.kernel_z.is_subset_of(d.kernel_s)) throw InvariantViolation("Ker S_z is not inside Ker S");
  d.kernel_equality = d.kernel_z == d.kernel_s;

  // Nilpotency index: P_1 = S_z, P_{k+1} = P_k S_z, stop once P_k is inside
  // Ker S_z. The chain is decreasing since S_z is a subsemigroup.
  struct Origin {
    Element left = UINT32_MAX;
    Element factor = UINT32_MAX;
  };
  std::vector<std::vector<Origin>> origins;  // origins[k - 2][e] for level k >= 2
  std::vector<bool> level(m.size(), false);
  for (Element e : d.s_z.elements()) level[e] = true;
  auto inside_kernel = [&](const std::vector<bool>& set) {
    for (Element e = 0; e < m.size(); ++e) {
      if (set[e] && !d.kernel_z.contains(e)) return false;
    }
    return true;
  };
  std::size_t k = 1;
  while (!inside_kernel(level)) {
    if (k > d.s_z.size() + 1) throw InvariantViolation("S_z is not nilpotent over its kernel");
    std::vector<bool> next(m.size(), false);
    std::vector<Origin> origin(m.size());
    for (Element p = 0; p < m.size(); ++p) {
      if (!level[p]) continue;
      for (Element s : d.s_z.elements()) {
        const Element ps = m.product(p, s);
        if (!next[ps]) {
          next[ps] = true;
          origin[ps] = {p, s};
        }
      }
    }
    if (next == level) throw InvariantViolation("S_z is not nilpotent over its kernel");
    origins.push_back(std::move(origin));
    level = std::move(next);
    ++k;
  }
  d.m = k;
  if (d.m > 1) {
    // Re-derive P_{m-1} and walk the recorded factorizations back to P_1.
    std::vector<bool> prev(m.size(), false);
    for (Element e : d.s_z.elements()) prev[e] = true;
    for (std::size_t lvl = 2; lvl < d.m; ++lvl) {
      std::vector<bool> next(m.size(), false);
      for (Element e = 0; e < m.size(); ++e) next[e] = origins[lvl - 2][e].left != UINT32_MAX;
      prev = std::move(next);
    }
    Element x = UINT32_MAX;
    for (Element e = 0; e < m.size(); ++e) {
      if (prev[e] && !d.kernel_z.contains(e)) {
        x = e;
        break;
      }
    }
    if (x == UINT32_MAX) throw InvariantViolation("nilpotency index is not minimal");
    std::vector<Element> factors;
    for (std::size_t lvl = d.m - 1; lvl >= 2; --lvl) {
      const Origin o = origins[lvl - 2][x];
      factors.push_back(o.factor);
      x = o.left;
    }
    factors.push_back(x);
    std::reverse(factors.begin(), factors.end());
    d.escape_factors = std::move(factors);
  }

  // Height of Y, counted in elements.
  std::vector<std::size_t> chain(ny, 0);
  std::function<std::size_t(Component)> longest = [&](Component y) -> std::size_t {
    if (chain[y] != 0) return chain[y];
    std::size_t best = 1;
    for (Component x = 0; x < ny; ++x) {
      if (d.less(x, y)) best = std::max(best, longest(x) + 1);
    }
    return chain[y] = best;
  };
  for (Component y = 0; y < ny; ++y) d.height = std::max(d.height, longest(y));
  return d;
}

inline SemilatticeDecomposition decompose(const Monoid& m) { return decompose(m, green_relations(m)); }

}  // namespace syncgame
