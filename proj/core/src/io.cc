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

#include "plbr/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace plbr {
namespace {

using nlohmann::json;

Rational ToRational(const json& j, const std::string& what) {
  try {
    if (j.is_string()) return Rational::Parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) return Rational::Parse(j.dump());
  } catch (const std::exception& e) {
    throw SpecError(what + ": " + e.what());
  }
  throw SpecError(what + ": expected a number or \"p/q\" string");
}

std::vector<Rational> ToRationals(const json& j, const std::string& what) {
  if (!j.is_array()) throw SpecError(what + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(ToRational(j[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const json& Require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SpecError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

json ToJson(const Rational& r) { return r.ToString(); }

json ToJson(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(ToJson(r));
  return out;
}

Strategy StrategyFromJson(const json& j) {
  std::vector<Rational> boundaries =
      j.contains("boundaries") ? ToRationals(j.at("boundaries"), "boundaries")
                               : std::vector<Rational>{};
  const json& pieces_json = Require(j, "pieces");
  if (!pieces_json.is_array()) throw SpecError("pieces: expected an array");
  std::vector<LinearFunc> pieces;
  for (std::size_t k = 0; k < pieces_json.size(); ++k) {
    const json& p = pieces_json[k];
    const std::string where = "pieces[" + std::to_string(k) + "]";
    if (p.is_array() && p.size() == 2) {
      pieces.push_back({ToRational(p[0], where), ToRational(p[1], where)});
    } else if (p.is_object()) {
      pieces.push_back({ToRational(Require(p, "slope"), where),
                        ToRational(Require(p, "intercept"), where)});
    } else {
      throw SpecError(where + ": expected [slope, intercept]");
    }
  }
  try {
    return Strategy(std::move(boundaries), std::move(pieces));
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

json StrategyToJsonValue(const Strategy& s) {
  json pieces = json::array();
  for (const LinearFunc& f : s.pieces()) {
    pieces.push_back({ToJson(f.slope), ToJson(f.intercept)});
  }
  return {{"boundaries", ToJson(s.boundaries())}, {"pieces", pieces}};
}

PiecewiseUniform DistributionFromJson(const json& j) {
  try {
    return PiecewiseUniform(ToRationals(Require(j, "breakpoints"), "breakpoints"),
                            ToRationals(Require(j, "masses"), "masses"));
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

json DistributionToJson(const PiecewiseUniform& d) {
  return {{"breakpoints", ToJson(d.breakpoints())},
          {"masses", ToJson(d.masses())}};
}

PayoffSpec PayoffFromJson(const json& j) {
  PayoffSpec spec;
  spec.alpha = ToRational(Require(j, "alpha"), "alpha");
  spec.region_bounds = j.contains("region_bounds")
                           ? ToRationals(j.at("region_bounds"), "region_bounds")
                           : std::vector<Rational>{};
  const json& rows = Require(j, "regions");
  if (!rows.is_array()) throw SpecError("regions: expected an array");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<Rational> row =
        ToRationals(rows[r], "regions[" + std::to_string(r) + "]");
    if (row.size() != 5) {
      throw SpecError("regions[" + std::to_string(r) +
                      "]: expected [theta, rho, theta', rho', phi]");
    }
    spec.regions.push_back({row[0], row[1], row[2], row[3], row[4]});
  }
  spec.Validate();
  return spec;
}

json PayoffToJson(const PayoffSpec& spec) {
  json rows = json::array();
  for (const RegionCoeffs& c : spec.regions) {
    rows.push_back(ToJson({c.theta, c.rho, c.theta_other, c.rho_other, c.phi}));
  }
  return {{"alpha", ToJson(spec.alpha)},
          {"region_bounds", ToJson(spec.region_bounds)},
          {"regions", rows}};
}

Parameters ParametersFromJson(const json& j) {
  Parameters params;
  if (!j.is_object()) throw SpecError("parameters: expected an object");
  for (const auto& [key, value] : j.items()) {
    params[key] = ToRational(value, "parameters." + key);
  }
  return params;
}

GameDefinition GameFromJson(const json& j) {
  GameDefinition game;
  if (j.contains("registry")) {
    const json& name = j.at("registry");
    if (!name.is_string()) throw SpecError("registry: expected a game name");
    game = Registry(name.get<std::string>(),
                    j.contains("parameters") ? ParametersFromJson(j.at("parameters"))
                                             : Parameters{});
    if (j.contains("name")) game.name = j.at("name").get<std::string>();
  } else {
    game.name = j.value("name", std::string("custom"));
    game.symmetric = j.value("symmetric", true);
    if (j.contains("parameters")) {
      game.parameters = ParametersFromJson(j.at("parameters"));
    }
    if (j.contains("players")) {
      const json& players = j.at("players");
      if (!players.is_array() || players.size() != 2) {
        throw SpecError("players: expected exactly two entries");
      }
      for (int p = 0; p < 2; ++p) {
        game.payoffs[p] = PayoffFromJson(players[p]);
        if (players[p].contains("distribution")) {
          game.dists[p] = DistributionFromJson(players[p].at("distribution"));
        }
      }
    } else {
      const PayoffSpec spec = PayoffFromJson(j);
      game.payoffs = {spec, spec};
      if (j.contains("distribution")) {
        const PiecewiseUniform d = DistributionFromJson(j.at("distribution"));
        game.dists = {d, d};
      }
    }
  }
  if (j.contains("action_clip")) {
    std::vector<Rational> clip = ToRationals(j.at("action_clip"), "action_clip");
    if (clip.size() != 2) throw SpecError("action_clip: expected [lo, hi]");
    game.action_clip = std::make_pair(clip[0], clip[1]);
  }
  game.Validate();
  return game;
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Strategy ParseStrategy(const std::string& json_text) {
  try {
    return StrategyFromJson(ParseJson(json_text));
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed strategy: ") + e.what());
  }
}

std::string StrategyToJson(const Strategy& s) {
  return StrategyToJsonValue(s).dump(2);
}

Strategy LoadStrategyFile(const std::string& path) {
  return ParseStrategy(ReadFile(path));
}

void SaveStrategyFile(const std::string& path, const Strategy& s) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write '" + path + "'");
  out << StrategyToJson(s) << "\n";
}

GameDefinition ParseGame(const std::string& json_text) {
  try {
    return GameFromJson(ParseJson(json_text));
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed game: ") + e.what());
  }
}

std::string GameToJson(const GameDefinition& game) {
  json j;
  j["name"] = game.name;
  j["symmetric"] = game.symmetric;
  json params = json::object();
  for (const auto& [key, value] : game.parameters) params[key] = ToJson(value);
  j["parameters"] = params;
  if (game.symmetric) {
    j.update(PayoffToJson(game.payoffs[0]));
    j["distribution"] = DistributionToJson(game.dists[0]);
  } else {
    json players = json::array();
    for (int p = 0; p < 2; ++p) {
      json player = PayoffToJson(game.payoffs[p]);
      player["distribution"] = DistributionToJson(game.dists[p]);
      players.push_back(player);
    }
    j["players"] = players;
  }
  if (game.action_clip) {
    j["action_clip"] = ToJson({game.action_clip->first, game.action_clip->second});
  }
  return j.dump(2);
}

GameDefinition LoadGameFile(const std::string& path) {
  return ParseGame(ReadFile(path));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace plbr
