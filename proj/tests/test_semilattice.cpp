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
#include <catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace syncgame;

namespace {

std::vector<std::size_t> table_index(const Monoid& m, const oracle::Table& table) {
  std::vector<std::size_t> out;
  for (Element e = 0; e < m.size(); ++e) out.push_back(table.find(m.transformation(e).images()));
  return out;
}

/// Every DS automaton of the shared pool plus a few hand-made ones.
std::vector<Dfa> ds_pool() {
  std::vector<Dfa> out{fixtures::const_id(), fixtures::id_const(), fixtures::one_state(), fixtures::identity2(),
                       Dfa(3, {"a", "b"}, {{1, 2, 2}, {0, 2, 2}}), Dfa(3, {"a"}, {{1, 2, 0}})};
  for (const Dfa& dfa : fixtures::pool(250, 77)) {
    const Monoid m = transition_monoid(dfa);
    if (m.size() <= 150 && is_in_ds(m, green_relations(m)).in_ds) out.push_back(dfa);
  }
  return out;
}

}  // namespace

TEST_CASE("semilattice of {1, const}") {
  const Monoid m = transition_monoid(fixtures::const_id());
  REQUIRE(m.size() == 2);
  const auto d = decompose(m);
  CHECK(d.component_count == 2);
  const Element zero = m.generator(0);
  CHECK(d.component_of[zero] == d.z);
  CHECK(d.component_of[m.identity()] != d.z);
  CHECK(d.less(d.z, d.component_of[m.identity()]));
  CHECK(d.m == 1);
  CHECK(d.height == 2);
  CHECK(d.escape_factors.empty());
  CHECK(d.kernel_equality);
  CHECK(d.letter_component == std::vector<Component>{d.z, d.component_of[m.identity()]});
}

TEST_CASE("trivial monoid decomposes into one component") {
  const auto d = decompose(transition_monoid(fixtures::one_state()));
  CHECK(d.component_count == 1);
  CHECK(d.height == 1);
  CHECK(d.m == 1);
}

TEST_CASE("decompose refuses monoids outside DS") {
  for (const Dfa& dfa : {fixtures::brandt(), fixtures::copy_example()}) {
    const Monoid m = transition_monoid(dfa);
    const bool ds = is_in_ds(m, green_relations(m)).in_ds;
    if (ds) {
      CHECK_NOTHROW(decompose(m));
    } else {
      CHECK_THROWS_MATCHES(decompose(m), PreconditionError,
                           Catch::Matchers::Predicate<PreconditionError>([](const auto& e) {
                             return std::string(e.code()) == "not_ds";
                           }));
    }
  }
  const Monoid mm = transition_monoid(fixtures::brandt());
  CHECK_THROWS_AS(decompose(mm), PreconditionError);
}

TEST_CASE("closure from generator seeds equals closure from all seeds") {
  for (const Dfa& dfa : fixtures::pool(150, 5)) {
    const Monoid m = transition_monoid(dfa);
    if (m.size() > 40) continue;
    const oracle::Table table(oracle::enumerate(dfa));
    const auto idx = table_index(m, table);
    const auto rel = oracle::semilattice_congruence(table);
    const auto labels = least_semilattice_congruence(m);
    std::vector<std::size_t> as_table(table.size());
    for (Element e = 0; e < m.size(); ++e) as_table[idx[e]] = labels[e];
    CHECK(oracle::is_semilattice_congruence(table, as_table));
    for (Element x = 0; x < m.size(); ++x)
      for (Element y = 0; y < m.size(); ++y) CHECK((labels[x] == labels[y]) == rel[idx[x]][idx[y]]);
  }
}

TEST_CASE("decomposition is sound on DS monoids") {
  std::size_t nontrivial_m = 0;
  for (const Dfa& dfa : ds_pool()) {
    const Monoid m = transition_monoid(dfa);
    const auto d = decompose(m);
    const oracle::Table table(oracle::enumerate(dfa));
    const auto idx = table_index(m, table);
    std::vector<std::size_t> label(table.size());
    for (Element e = 0; e < m.size(); ++e) label[idx[e]] = d.component_of[e];
    CHECK(oracle::is_semilattice_congruence(table, label));

    // Quotient product agrees with multiplying members; z is least.
    for (Component x = 0; x < d.component_count; ++x) {
      CHECK(d.product(d.z, x) == d.z);
      for (Component y = 0; y < d.component_count; ++y) {
        const Element u = d.members[x].back(), v = d.members[y].front();
        CHECK(d.component_of[m.product(u, v)] == d.product(x, y));
      }
    }

    // Kernels, by the ideal-intersection oracle.
    std::set<std::size_t> s_z, ker_z, ker;
    for (Element e : d.s_z.elements()) s_z.insert(idx[e]);
    for (Element e : d.kernel_z.elements()) ker_z.insert(idx[e]);
    for (Element e : d.kernel_s.elements()) ker.insert(idx[e]);
    CHECK(ker == oracle::kernel(table));
    CHECK(ker_z == oracle::kernel_of(table, s_z));
    CHECK(std::includes(s_z.begin(), s_z.end(), ker.begin(), ker.end()));
    CHECK(std::includes(ker.begin(), ker.end(), ker_z.begin(), ker_z.end()));
    CHECK(d.kernel_equality == (ker == ker_z));

    // m: every product of m elements of S_z is in Ker S_z, m is least.
    std::set<std::size_t> level = s_z;
    std::size_t k = 1;
    while (!std::includes(ker_z.begin(), ker_z.end(), level.begin(), level.end())) {
      std::set<std::size_t> next;
      for (auto p : level)
        for (auto s : s_z) next.insert(table.prod[p][s]);
      level = next;
      ++k;
      REQUIRE(k <= s_z.size() + 1);
    }
    CHECK(d.m == k);
    if (d.m > 1) {
      ++nontrivial_m;
      REQUIRE(d.escape_factors.size() == d.m - 1);
      Element prod = d.escape_factors.front();
      for (Element f : d.escape_factors) CHECK(d.s_z.contains(f));
      for (std::size_t i = 1; i < d.escape_factors.size(); ++i) prod = m.product(prod, d.escape_factors[i]);
      CHECK_FALSE(d.kernel_z.contains(prod));
    } else {
      CHECK(d.escape_factors.empty());
    }

    // Height: longest strictly decreasing chain, in elements.
    std::function<std::size_t(Component)> longest = [&](Component y) {
      std::size_t best = 1;
      for (Component x = 0; x < d.component_count; ++x) {
        if (x != y && d.component_of[m.product(d.members[x].front(), d.members[y].front())] == x) {
          best = std::max(best, 1 + longest(x));
        }
      }
      return best;
    };
    std::size_t height = 0;
    for (Component y = 0; y < d.component_count; ++y) height = std::max(height, longest(y));
    CHECK(d.height == height);

    for (Element e : d.kernel_s.elements()) CHECK(component_of_transformation(d, e) == d.z);
    for (Component y = 0; y < d.component_count; ++y) CHECK(d.leq(y, d.component_of[m.identity()]));
    for (Letter a = 0; a < m.letters(); ++a) CHECK(component_of_transformation(d, m.generator(a)) == d.letter_component[a]);
  }
  CHECK(nontrivial_m > 0);
}

TEST_CASE("large monoids fall back to the generator-based S3 check") {
  const Monoid small = transition_monoid(fixtures::const_id());
  CHECK(decompose(small).s3_check == "pairwise");
  // The cyclic group of order 2100 generated by a single permutation on
  // 4 + 25 + 7 + 3 states (cycle lengths 4, 25, 7, 3: lcm = 2100).
  std::vector<State> perm;
  State base = 0;
  for (State len : {4U, 25U, 7U, 3U}) {
    for (State i = 0; i < len; ++i) perm.push_back(base + (i + 1) % len);
    base += len;
  }
  const Dfa cyclic(perm.size(), {"a"}, {perm});
  const Monoid big = transition_monoid(cyclic);
  REQUIRE(big.size() == 2100);
  const auto d = decompose(big);
  CHECK(d.s3_check == "generators");
  CHECK(d.component_count == 1);
  CHECK(d.m == 1);
}
