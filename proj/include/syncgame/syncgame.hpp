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

#include "syncgame/builtin.hpp"
#include "syncgame/classify.hpp"
#include "syncgame/dfa.hpp"
#include "syncgame/dfa_io.hpp"
#include "syncgame/game.hpp"
#include "syncgame/green.hpp"
#include "syncgame/monoid.hpp"
#include "syncgame/semilattice.hpp"
#include "syncgame/session.hpp"
#include "syncgame/strategy.hpp"
#include "syncgame/sync.hpp"
