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

#include "oracles.hpp"
#include "support.hpp"

using namespace syncgame;

namespace {

GamePosition pos(std::initializer_list<State> tokens, Player turn) {
  StateSet s;
  for (State q : tokens) s.insert(q);
  return {s, turn};
}

std::set<State> as_set(StateSet s) {
  const auto v = s.states();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("moves slide every token") {
  const Dfa ex = fixtures::copy_example();
  const auto p1 = step(ex, initial_position(ex), 0);
  CHECK(p1 == pos({0, 2}, Player::Bob));
  const auto p2 = step(ex, p1, 1);
  CHECK(p2 == pos({0, 1}, Player::Alice));
  const auto p3 = step(ex, p2, 0);
  CHECK(p3 == pos({0}, Player::Bob));
  CHECK(p3.terminal());
  CHECK_THROWS_AS(step(ex, p3, 0), PreconditionError);
  CHECK_THROWS_AS(step(ex, p2, 2), PreconditionError);
  CHECK_THROWS_AS(step(ex, GamePosition{StateSet(), Player::Alice}, 0), PreconditionError);
}

TEST_CASE("players") {
  CHECK(parse_player("alice") == Player::Alice);
  CHECK(parse_player("bob") == Player::Bob);
  CHECK_THROWS_AS(parse_player("carol"), ParseError);
  CHECK(opponent(Player::Alice) == Player::Bob);
  CHECK(to_string(Player::Bob) == "bob");
}

TEST_CASE("winners of the named examples") {
  const auto ex = solve(fixtures::copy_example());
  CHECK(ex.winner_from_start() == Player::Bob);
  CHECK_FALSE(ex.dist(initial_position(ex.dfa())));

  const auto m = solve(fixtures::brandt());
  CHECK(m.winner_from_start() == Player::Alice);
  const auto d = m.dist(initial_position(m.dfa()));
  REQUIRE(d);
  CHECK(*d <= 4);
  CHECK(*d == 3);

  CHECK(solve(cerny_dfa(3)).winner_from_start() == Player::Bob);
  CHECK(solve(cerny_dfa(4)).winner_from_start() == Player::Bob);
  CHECK(is_a_automaton(fixtures::brandt()));
  CHECK_FALSE(is_a_automaton(fixtures::copy_example()));
  CHECK(is_a_automaton(fixtures::one_state()));
  CHECK_FALSE(is_a_automaton(fixtures::identity2()));
  CHECK_THROWS_AS(solve(cerny_dfa(25)), CapExceeded);
}

TEST_CASE("solver agrees with value iteration on every position") {
  for (const Dfa& dfa : fixtures::pool(120, 21)) {
    const auto sol = solve(dfa);
    const auto naive = oracle::naive_solve(dfa);
    for (std::uint32_t mask = 1; mask < (1U << dfa.states()); ++mask) {
      for (Player turn : {Player::Alice, Player::Bob}) {
        const GamePosition p{StateSet(mask), turn};
        const auto expected = naive.at(as_set(p.tokens), static_cast<int>(turn));
        CHECK(sol.alice_wins(p) == expected.has_value());
        if (expected) CHECK(sol.dist(p) == std::optional<std::uint32_t>(static_cast<std::uint32_t>(*expected)));
      }
    }
  }
}

TEST_CASE("optimal moves") {
  const auto ex = solve(fixtures::copy_example());
  CHECK(optimal_move(ex, pos({0, 2}, Player::Bob)) == 0);
  const auto m = solve(fixtures::brandt());
  CHECK(optimal_move(m, initial_position(m.dfa())) == 0);
  // One move from the end the immediately winning letter is chosen.
  CHECK(optimal_move(m, pos({0, 2}, Player::Alice)) == 0);
  CHECK(optimal_move(m, pos({0, 1}, Player::Alice)) == 1);
  CHECK_THROWS_AS(optimal_move(m, pos({1}, Player::Alice)), PreconditionError);
}

TEST_CASE("optimal moves realise the distances") {
  for (const Dfa& dfa : fixtures::pool(120, 22)) {
    const auto sol = solve(dfa);
    for (std::uint32_t mask = 1; mask < (1U << dfa.states()); ++mask) {
      for (Player turn : {Player::Alice, Player::Bob}) {
        const GamePosition p{StateSet(mask), turn};
        if (p.terminal()) continue;
        const Letter a = optimal_move(sol, p);
        const auto next = sol.successor(p, a);
        if (sol.alice_wins(p)) {
          CHECK(sol.dist(next) == std::optional<std::uint32_t>(*sol.dist(p) - 1));
        } else {
          CHECK_FALSE(sol.alice_wins(next));
        }
        // Ties go to the alphabet-earlier letter.
        for (Letter b = 0; b < a; ++b) {
          const auto other = sol.dist(sol.successor(p, b));
          if (turn == Player::Alice) {
            CHECK((!other || !sol.dist(next) || *other > *sol.dist(next)));
          } else if (sol.alice_wins(p)) {
            CHECK(*other < *sol.dist(next));
          } else {
            CHECK(other.has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("principal variations") {
  const auto m = solve(fixtures::brandt());
  const auto pv = principal_variation(m, initial_position(m.dfa()));
  CHECK(pv.finished);
  CHECK_FALSE(pv.cyclic);
  CHECK(format_word(m.dfa(), pv.letters) == "abb");

  const auto ex = solve(fixtures::copy_example());
  const auto loop = principal_variation(ex, initial_position(ex.dfa()));
  CHECK_FALSE(loop.finished);
  CHECK(loop.cyclic);
  CHECK(format_word(ex.dfa(), loop.letters) == "aaa");

  for (const Dfa& dfa : fixtures::pool(80, 23)) {
    const auto sol = solve(dfa);
    const GamePosition start = initial_position(dfa);
    const auto line = principal_variation(sol, start);
    GamePosition p = start;
    for (Letter a : line.letters) p = step(dfa, p, a);
    CHECK(line.finished == p.terminal());
    CHECK(line.finished == sol.alice_wins(start));
    if (line.finished) CHECK(line.letters.size() == *sol.dist(start));
  }
}
