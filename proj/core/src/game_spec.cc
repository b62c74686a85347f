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

#include "plbr/game_spec.h"

#include <set>

namespace plbr {
namespace {

// Three-region auction layout: lose (a < a'), tie (a = a'), win (a > a').
PayoffSpec Auction(std::array<Rational, 3> theta, std::array<Rational, 3> rho,
                   std::array<Rational, 3> theta_other,
                   std::array<Rational, 3> rho_other) {
  PayoffSpec spec;
  spec.alpha = -1;
  spec.region_bounds = {0, 0};
  for (std::size_t r = 0; r < 3; ++r) {
    spec.regions.push_back({theta[r], rho[r], theta_other[r], rho_other[r], 0});
  }
  return spec;
}

Rational Get(const Parameters& params, const std::string& key,
             const Rational& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void CheckKnown(const std::string& game, const Parameters& params,
                std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : params) {
    if (!ok.count(key)) {
      throw SpecError("game '" + game + "' has no parameter '" + key + "'");
    }
  }
}

void RequireUnitInterval(const std::string& game, const Rational& k) {
  if (k < 0 || k > 1) {
    throw SpecError(game + " requires 0 <= k <= 1, got k = " + k.ToString());
  }
}

GameDefinition Symmetric(std::string name, PayoffSpec spec,
                         PiecewiseUniform dist, Parameters params) {
  GameDefinition game;
  game.name = std::move(name);
  game.symmetric = true;
  game.payoffs = {spec, spec};
  game.dists = {dist, dist};
  game.parameters = std::move(params);
  return game;
}

}  // namespace

void PayoffSpec::Validate() const {
  if (regions.empty()) throw SpecError("payoff needs at least one region");
  if (region_bounds.size() + 1 != regions.size()) {
    throw SpecError("payoff with " + std::to_string(regions.size()) +
                    " regions needs " + std::to_string(regions.size() - 1) +
                    " region bounds, got " +
                    std::to_string(region_bounds.size()));
  }
  for (std::size_t i = 1; i < region_bounds.size(); ++i) {
    if (region_bounds[i] < region_bounds[i - 1]) {
      throw SpecError("region bounds must be nondecreasing");
    }
  }
}

std::size_t RegionIndex(const PayoffSpec& spec, const Rational& z) {
  const auto& b = spec.region_bounds;
  const std::size_t n = spec.regions.size();
  for (std::size_t r = 0; r < n; ++r) {
    const bool has_lo = r > 0;
    const bool has_hi = r + 1 < n;
    if (PayoffSpec::IsClosed(r)) {
      if ((!has_lo || b[r - 1] <= z) && (!has_hi || z <= b[r])) return r;
    } else {
      if ((!has_lo || b[r - 1] < z) && (!has_hi || z < b[r])) return r;
    }
  }
  // Unreachable for a validated spec: the regions partition the line.
  throw SpecError("no payoff region contains z = " + z.ToString());
}

Rational Payoff(const PayoffSpec& spec, const Rational& t, const Rational& a,
                const Rational& t_other, const Rational& a_other) {
  const RegionCoeffs& c = spec.regions[RegionIndex(spec, a + spec.alpha * a_other)];
  return c.theta * t + c.rho * a + c.theta_other * t_other +
         c.rho_other * a_other + c.phi;
}

void GameDefinition::Validate() const {
  payoffs[0].Validate();
  payoffs[1].Validate();
  if (symmetric && (!(payoffs[0] == payoffs[1]) || !(dists[0] == dists[1]))) {
    throw SpecError("symmetric game '" + name +
                    "' must use one payoff and one distribution");
  }
  if (action_clip && action_clip->second < action_clip->first) {
    throw SpecError("action clip bounds are reversed");
  }
}

std::vector<std::string> RegistryNames() {
  return {"fpsb",       "vickrey",   "vicious_vickrey",
          "supply_chain", "bargaining", "all_pay",
          "voluntary_participation", "shared_good"};
}

PayoffSpec BargainingBuyerAsTabulated(const Rational& k) {
  PayoffSpec spec;
  spec.alpha = -1;
  spec.region_bounds = {0, 0};
  spec.regions = {{0, 0, 0, 0, 0},
                  {1, -k, 0, 1 - k, 0},
                  {1, -k, 0, 1 - k, 0}};
  return spec;
}

GameDefinition Registry(const std::string& name, const Parameters& params) {
  const Rational half(1, 2);
  if (name == "fpsb") {
    CheckKnown(name, params, {});
    return Symmetric(name,
                     Auction({0, half, 1}, {0, -half, -1}, {0, 0, 0}, {0, 0, 0}),
                     PiecewiseUniform::Uniform(0, 1), {});
  }
  if (name == "vickrey") {
    CheckKnown(name, params, {});
    return Symmetric(name,
                     Auction({0, half, 1}, {0, 0, 0}, {0, 0, 0}, {0, -half, -1}),
                     PiecewiseUniform::Uniform(0, 1), {});
  }
  if (name == "all_pay") {
    CheckKnown(name, params, {});
    return Symmetric(name,
                     Auction({0, half, 1}, {-1, -1, -1}, {0, 0, 0}, {0, 0, 0}),
                     PiecewiseUniform::Uniform(0, 1), {});
  }
  if (name == "vicious_vickrey") {
    CheckKnown(name, params, {"k"});
    const Rational k = Get(params, "k", half);
    RequireUnitInterval(name, k);
    return Symmetric(name,
                     Auction({0, (1 - k) / 2, 1 - k}, {k, k / 2, 0},
                             {-k, -k / 2, 0}, {0, (k - 1) / 2, k - 1}),
                     PiecewiseUniform::Uniform(0, 1), {{"k", k}});
  }
  if (name == "shared_good") {
    CheckKnown(name, params, {"A", "B"});
    const Rational lo = Get(params, "A", 0);
    const Rational hi = Get(params, "B", 1);
    if (!(lo < hi)) throw SpecError("shared_good requires A < B");
    return Symmetric(name,
                     Auction({0, half, 1}, {0, -Rational(1, 4), -half},
                             {0, 0, 0}, {half, Rational(1, 4), 0}),
                     PiecewiseUniform::Uniform(lo, hi), {{"A", lo}, {"B", hi}});
  }
  if (name == "supply_chain") {
    CheckKnown(name, params, {"v"});
    const Rational v = Get(params, "v", 2);
    if (v < 1) throw SpecError("supply_chain requires v >= 1");
    PayoffSpec spec;
    spec.alpha = 1;
    spec.region_bounds = {v, v};
    spec.regions = {{-1, 1, 0, 0, 0}, {-1, 1, 0, 0, 0}, {0, 0, 0, 0, 0}};
    return Symmetric(name, spec, PiecewiseUniform::Uniform(0, 1), {{"v", v}});
  }
  if (name == "voluntary_participation") {
    CheckKnown(name, params, {"C"});
    const Rational c = Get(params, "C", 1);
    PayoffSpec spec;
    spec.alpha = 1;
    spec.region_bounds = {c};
    spec.regions = {{0, 0, 0, 0, 0}, {1, -half, 0, half, -c / 2}};
    return Symmetric(name, spec, PiecewiseUniform::Uniform(0, 1), {{"C", c}});
  }
  if (name == "bargaining") {
    CheckKnown(name, params, {"k"});
    const Rational k = Get(params, "k", half);
    RequireUnitInterval(name, k);
    // Player 0 is the seller (type = cost, action = ask), player 1 the buyer
    // (type = value, action = bid). Trade happens when ask <= bid at price
    // (1 - k) ask + k bid.
    PayoffSpec seller;
    seller.alpha = -1;
    seller.region_bounds = {0, 0};
    seller.regions = {{-1, 1 - k, 0, k, 0}, {-1, 1 - k, 0, k, 0}, {0, 0, 0, 0, 0}};
    PayoffSpec buyer;
    buyer.alpha = -1;
    buyer.region_bounds = {0, 0};
    buyer.regions = {{0, 0, 0, 0, 0}, {1, -k, 0, k - 1, 0}, {1, -k, 0, k - 1, 0}};
    GameDefinition game;
    game.name = name;
    game.symmetric = false;
    game.payoffs = {seller, buyer};
    game.parameters = {{"k", k}};
    return game;
  }
  throw SpecError("unknown game '" + name + "'");
}

}  // namespace plbr
