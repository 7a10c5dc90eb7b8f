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
// Command-line frontend: analysis, solving, strategy verification,
// interactive play, batch experiments and the JSON game service.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "syncgame/service.hpp"
#include "syncgame/service_http.hpp"
#include "syncgame/syncgame.hpp"

using namespace syncgame;
using ojson = nlohmann::ordered_json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw PreconditionError("io_error", "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Dfa load(const std::string& path, bool game_cap) {
  return parse_dfa(read_input(path), game_cap ? std::optional<std::size_t>(kGameStateCap) : std::nullopt);
}

ojson word_json(const Dfa& dfa, const std::optional<Word>& w) {
  return w ? ojson(format_word(dfa, *w)) : ojson(nullptr);
}

ojson analysis_json(const Dfa& dfa) {
  const auto report = classify(dfa);
  ojson j = report_to_json(report);
  j["monoid_size"] = report.monoid_size;
  j["synchronizing_via_kernel"] = report.synchronizing_via_kernel;
  j["shortest_reset_word"] = word_json(dfa, report.shortest_reset);

  const Monoid m = transition_monoid(dfa);
  const auto gs = green_relations(m);
  const auto ds = is_in_ds(m, gs);
  ojson green;
  green["r_classes"] = gs.r_count;
  green["l_classes"] = gs.l_count;
  green["d_classes"] = gs.d_count;
  green["regular_d_classes"] = gs.regular_d_count();
  if (ds.witness) {
    const auto w = *ds.witness;
    green["ds_witness"] = {{"a", format_word(dfa, m.witness(w.a))},
                           {"b", format_word(dfa, m.witness(w.b))},
                           {"product", format_word(dfa, m.witness(m.product(w.a, w.b)))}};
  }
  green["eggbox"] = eggbox_lines(dfa, m, gs);
  j["green"] = std::move(green);

  if (report.in_ds) {
    const auto d = decompose(m, gs);
    ojson lattice;
    lattice["components"] = d.component_count;
    lattice["z"] = d.z;
    lattice["m"] = d.m;
    lattice["height"] = d.height;
    lattice["kernel_equality"] = d.kernel_equality;
    lattice["s3_check"] = d.s3_check;
    ojson letters = ojson::object();
    for (Letter a = 0; a < dfa.letters(); ++a) letters[dfa.letter_name(a)] = d.letter_component[a];
    lattice["letter_component"] = std::move(letters);
    j["semilattice"] = std::move(lattice);
  }
  if (report.strategy_verified) {
    j["strategy"] = {{"verified", *report.strategy_verified},
                     {"max_letters", *report.strategy_max_letters},
                     {"bound", *report.strategy_bound}};
  }
  return j;
}

int cmd_solve(const Dfa& dfa) {
  const auto sol = solve(dfa);
  const auto start = initial_position(dfa);
  const auto pv = principal_variation(sol, start);
  ojson j;
  j["winner"] = std::string(to_string(sol.winner_from_start()));
  j["dist"] = sol.dist(start) ? ojson(*sol.dist(start)) : ojson(nullptr);
  j["pv"] = format_word(dfa, pv.letters);
  j["pv_cyclic"] = pv.cyclic;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Dfa& dfa, bool full, bool openers) {
  const auto r = verify_exhaustive(dfa, {.full_playout = full, .all_openers = openers});
  std::cout << (r.passed ? "pass" : "FAIL") << "\n"
            << "mode: " << (full ? "full-playout" : "early-stop") << (openers ? ", all openers" : "") << "\n"
            << "branches: " << r.branches << "\n"
            << "memo nodes: " << r.nodes << "\n"
            << "max letters: " << r.max_letters << "\n"
            << "bound (2*m*height): " << r.bound << " (m=" << r.m << ", height=" << r.height << ")\n";
  if (r.longest_reset_word) std::cout << "longest reset word: " << format_word(dfa, *r.longest_reset_word) << "\n";
  if (!r.passed) {
    std::cout << "failure: " << r.failure << "\ncounterexample: " << format_word(dfa, r.counterexample) << "\n";
  }
  return r.passed ? 0 : 1;
}

void show(const GameSession& s) {
  const auto& dfa = s.dfa();
  std::cout << "tokens {";
  bool first = true;
  for (State q : s.position().tokens.states()) {
    std::cout << (first ? "" : ",") << q;
    first = false;
  }
  std::cout << "}  history \"" << format_word(dfa, s.history()) << "\"  ";
  if (s.finished()) {
    std::cout << "one token left: alice wins\n";
  } else {
    std::cout << to_string(s.position().turn) << " to move (solver predicts " << to_string(s.winner_prediction())
              << ")\n";
  }
}

int cmd_play(const Dfa& dfa, const std::string& human_side, const std::string& engine, std::optional<std::uint64_t> seed) {
  GameSession s("cli", dfa, SessionConfig{parse_player(human_side), parse_engine_kind(engine), seed});
  std::cout << "engine: " << to_string(s.engine_kind()) << "; letters:";
  for (const auto& name : dfa.alphabet()) std::cout << ' ' << name;
  std::cout << "; 'quit' ends the game\n";
  show(s);
  std::string line;
  while (!s.finished() && std::cout << "> " << std::flush && std::getline(std::cin, line)) {
    if (line == "quit" || line == "q") break;
    if (line.empty()) continue;
    const auto letter = dfa.find_letter(line);
    if (!letter) {
      std::cout << "unknown letter '" << line << "'\n";
      continue;
    }
    if (const auto reply = s.move(*letter)) std::cout << "engine plays " << dfa.letter_name(*reply) << "\n";
    show(s);
  }
  return 0;
}

int cmd_batch(const BatchOptions& options, bool summary_only) {
  const auto result = run_batch(options);
  if (!summary_only) {
    for (const auto& rec : result.records) {
      ojson line;
      line["automaton"] = dfa_to_json(rec.dfa);
      line["report"] = report_to_json(rec.report);
      if (!rec.violations.empty()) line["violations"] = rec.violations;
      std::cout << line.dump() << "\n";
    }
  }
  ojson summary;
  summary["summary"] = batch_summary_json(result);
  std::cout << summary.dump() << "\n";
  return result.ds_win_violations == 0 && result.implication_violations == 0 ? 0 : 1;
}

int cmd_serve(const std::string& host, int port) {
  GameService service;
  httplib::Server server;
  mount_routes(server, service);
  std::cerr << "listening on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) throw PreconditionError("io_error", "cannot listen on port " + std::to_string(port));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronization games on finite automata"};
  app.require_subcommand(1);

  std::string file;
  bool dot = false, dump = false, full = false, openers = false, summary_only = false;

  auto* analyze = app.add_subcommand("analyze", "Classify an automaton and print a JSON report");
  analyze->add_option("file", file, "Automaton JSON ('-' for stdin)")->required();
  analyze->add_flag("--dot", dot, "Print a GraphViz rendering of the start position instead");
  analyze->add_flag("--dump-monoid", dump, "Print the transition monoid instead");

  auto* solve_cmd = app.add_subcommand("solve", "Solve the synchronization game");
  solve_cmd->add_option("file", file, "Automaton JSON ('-' for stdin)")->required();

  auto* verify = app.add_subcommand("verify", "Check the round strategy on every Bob reply");
  verify->add_option("file", file, "Automaton JSON ('-' for stdin)")->required();
  verify->add_flag("--full-playout", full, "Play all rounds and check the word is a reset word");
  verify->add_flag("--all-openers", openers, "Branch over every round-opening letter");

  std::string human = "bob", engine = "auto";
  std::optional<std::uint64_t> seed;
  auto* play = app.add_subcommand("play", "Play against the engine on the terminal");
  play->add_option("file", file, "Automaton JSON")->required();
  play->add_option("--human", human, "Side you play")->check(CLI::IsMember({"alice", "bob"}));
  play->add_option("--engine", engine, "Engine kind")->check(CLI::IsMember({"paper", "optimal", "auto"}));
  play->add_option("--seed", seed, "Seed for random round openers");

  BatchOptions batch_options;
  std::string mode = "exhaustive";
  auto* batch = app.add_subcommand("batch", "Classify many automata; JSON lines plus a summary");
  batch->add_option("--n", batch_options.n, "States")->check(CLI::Range(1, 24));
  batch->add_option("--k", batch_options.k, "Letters")->check(CLI::Range(1, 16));
  batch->add_option("--mode", mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  batch->add_option("--count", batch_options.count, "Sample size");
  batch->add_option("--seed", batch_options.seed, "Sample seed");
  batch->add_option("--threads", batch_options.threads, "Worker threads (0: all cores)");
  batch->add_flag("--summary-only", summary_only, "Print only the summary line");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the JSON game service");
  serve->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Address to bind");

  std::string builtin_name;
  std::vector<std::int64_t> params;
  auto* builtin_cmd = app.add_subcommand("builtin", "Print a built-in automaton as JSON");
  builtin_cmd->add_option("name", builtin_name, "paper_example, brandt_minimal, cerny or random")->required();
  builtin_cmd->add_option("params", params, "cerny: n; random: n k seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      const Dfa dfa = load(file, false);
      if (dot) {
        std::cout << to_dot(dfa, initial_position(dfa).tokens);
      } else if (dump) {
        std::cout << dump_monoid(dfa, transition_monoid(dfa));
      } else {
        std::cout << analysis_json(dfa).dump(2) << "\n";
      }
      return 0;
    }
    if (*solve_cmd) return cmd_solve(load(file, true));
    if (*verify) return cmd_verify(load(file, true), full, openers);
    if (*play) return cmd_play(load(file, true), human, engine, seed);
    if (*batch) {
      batch_options.mode = mode == "sample" ? BatchMode::Sample : BatchMode::Exhaustive;
      return cmd_batch(batch_options, summary_only);
    }
    if (*serve) return cmd_serve(host, port);
    if (*builtin_cmd) {
      std::cout << dfa_to_json(builtin(builtin_name, params)).dump() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
