// Copyright 2026 The plbr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON game and strategy files. Every number is written as a "p/q" string and
// read back exactly; plain JSON numbers and decimal strings are accepted on
// input.
//
// Strategy file:
//   {"boundaries": ["0", "1"],
//    "pieces": [["0", "0"], ["1", "0"], ["0", "0"]]}     // [slope, intercept]
//
// Game file, explicit symmetric form:
//   {"name": "fpsb", "symmetric": true, "alpha": "-1",
//    "region_bounds": ["0", "0"],
//    "regions": [["0","0","0","0","0"], ["1/2","-1/2","0","0","0"],
//                ["1","-1","0","0","0"]],                // theta rho theta' rho' phi
//    "distribution": {"breakpoints": ["0", "1"], "masses": ["1"]},
//    "parameters": {}}
// Asymmetric games replace alpha/region_bounds/regions/distribution with
//   "players": [{...player 0...}, {...player 1...}]
// Registry reference:
//   {"registry": "bargaining", "parameters": {"k": "1/2"}}
// Either form may add "action_clip": [lo, hi].

#ifndef PLBR_IO_H_
#define PLBR_IO_H_

#include <string>

#include "plbr/game_spec.h"
#include "plbr/pwl.h"

namespace plbr {

// All parse/load functions throw SpecError on malformed content.
Strategy ParseStrategy(const std::string& json_text);
std::string StrategyToJson(const Strategy& s);
Strategy LoadStrategyFile(const std::string& path);
void SaveStrategyFile(const std::string& path, const Strategy& s);

GameDefinition ParseGame(const std::string& json_text);
std::string GameToJson(const GameDefinition& game);
GameDefinition LoadGameFile(const std::string& path);

// Reads a whole file; throws SpecError if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace plbr

#endif  // PLBR_IO_H_
