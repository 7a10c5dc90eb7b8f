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

#include <string>

#include "httplib.h"
#include "syncgame/service.hpp"

namespace syncgame {

/// Routes the GameService endpoints on an httplib server.
inline void mount_routes(httplib::Server& server, GameService& service) {
  auto send = [](httplib::Response& res, const GameService::Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/automata", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.create_automaton(req.body));
  });
  server.Get(R"(/automata/([^/]+)/analysis)", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.analysis(req.matches[1]));
  });
  server.Get(R"(/automata/([^/]+)/solution)", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.solution(req.matches[1]));
  });
  server.Post("/games", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.create_game(req.body));
  });
  server.Get(R"(/games/([^/]+))", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.game(req.matches[1]));
  });
  server.Post(R"(/games/([^/]+)/moves)", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.move(req.matches[1], req.body));
  });
}

}  // namespace syncgame
