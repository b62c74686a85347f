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

#include "plbr/dynamics.h"

#include <algorithm>
#include <stdexcept>

#include "plbr/io.h"

namespace plbr {
namespace {

BestResponseOptions OptionsFor(const GameDefinition& game) {
  BestResponseOptions opts;
  opts.action_clip = game.action_clip;
  return opts;
}

Rational SupportDistance(const GameDefinition& game, int player,
                         const Strategy& a, const Strategy& b) {
  const PiecewiseUniform& d = game.dist(player);
  return SupDistance(a, b, d.lo(), d.hi());
}

Rational StepDistance(const GameDefinition& game,
                      const std::vector<Strategy>& x,
                      const std::vector<Strategy>& y) {
  Rational d = 0;
  for (std::size_t p = 0; p < x.size(); ++p) {
    d = Max(d, SupportDistance(game, static_cast<int>(p), x[p], y[p]));
  }
  return d;
}

std::vector<Strategy> NextStep(const GameDefinition& game,
                               const std::vector<Strategy>& cur) {
  const BestResponseOptions opts = OptionsFor(game);
  if (cur.size() == 1) return {BestResponse(game, 0, cur[0], opts)};
  return {BestResponse(game, 0, cur[1], opts),
          BestResponse(game, 1, cur[0], opts)};
}

// Shared loop for both variants; a step holds one strategy (symmetric) or
// the pair (asymmetric).
IterationOutcome Iterate(const GameDefinition& game,
                         std::vector<Strategy> seed,
                         const IterationConfig& cfg) {
  cfg.Validate();
  const bool symmetric = seed.size() == 1;
  IterationOutcome out;
  out.history.push_back({std::move(seed), Rational(0)});

  auto pair_of = [&](const std::vector<Strategy>& a,
                     const std::vector<Strategy>& b) -> Profile {
    // (a as player 0, b as player 1) for symmetric runs.
    return symmetric ? Profile{a[0], b[0]} : Profile{a[0], a[1]};
  };

  for (std::size_t n = 1; n <= cfg.max_iters; ++n) {
    std::vector<Strategy> next = NextStep(game, out.history.back().strategies);
    const Rational d = StepDistance(game, next, out.history.back().strategies);
    out.history.push_back({std::move(next), d});
    out.iterations = n;
    const std::vector<Strategy>& cur = out.history.back().strategies;

    if ((cfg.exact_fixed_point && d.IsZero()) || d <= cfg.tolerance) {
      out.kind = IterationOutcome::Kind::kFixedPoint;
      out.period = 1;
      out.exact = d.IsZero();
      out.profile = cur;
      if (cfg.verify_grid > 0) {
        out.epsilon = Verify(game, pair_of(cur, cur), cfg.verify_grid).epsilon;
      }
      return out;
    }
    for (std::size_t p = 2; p <= cfg.max_cycle_period && p <= n; ++p) {
      const std::vector<Strategy>& back = out.history[n - p].strategies;
      if (StepDistance(game, cur, back) > cfg.tolerance) continue;
      out.kind = IterationOutcome::Kind::kCycle;
      out.period = p;
      for (std::size_t i = n - p + 1; i <= n; ++i) {
        for (const Strategy& s : out.history[i].strategies) {
          out.profile.push_back(s);
        }
      }
      if (p == 2 && cfg.verify_grid > 0) {
        const std::vector<Strategy>& prev = out.history[n - 1].strategies;
        // In a 2-cycle the latest strategy of one player answers the previous
        // strategy of the other, so (cur, prev) is a mutual best response.
        const Profile prof = symmetric ? Profile{cur[0], prev[0]}
                                       : Profile{cur[0], prev[1]};
        out.epsilon = Verify(game, prof, cfg.verify_grid).epsilon;
      }
      return out;
    }
    if (cfg.max_coefficient_bits > 0) {
      std::size_t bits = 0;
      for (const Strategy& s : cur) bits = std::max(bits, CoefficientBits(s));
      if (bits > cfg.max_coefficient_bits) {
        out.size_limited = true;
        break;
      }
    }
  }
  out.kind = IterationOutcome::Kind::kExhausted;
  out.profile = out.history.back().strategies;
  return out;
}

Rational Param(const GameDefinition& game, const std::string& key) {
  auto it = game.parameters.find(key);
  if (it == game.parameters.end()) {
    throw SpecError("game '" + game.name + "' has no parameter '" + key + "'");
  }
  return it->second;
}

Rational ParseArg(const std::string& text, const std::string& what) {
  try {
    return Rational::Parse(text);
  } catch (const std::exception&) {
    throw SpecError("bad number '" + text + "' in " + what);
  }
}

Strategy OnSupport(const GameDefinition& game, int player, const Strategy& s) {
  const PiecewiseUniform& d = game.dist(player);
  return Simplify(ZeroExtend(s, d.lo(), d.hi()));
}

Strategy OnSupport(const GameDefinition& game, int player,
                   const LinearFunc& f) {
  return OnSupport(game, player, Strategy({}, {f}));
}

// f on t <= c, g on t > c, restricted to the player's support.
Strategy TwoPiece(const GameDefinition& game, int player, const Rational& c,
                  const LinearFunc& f, const LinearFunc& g) {
  return OnSupport(game, player, Strategy({c}, {f, g}));
}

// Evaluates the regret of `s` at t, with `right` selecting right limits.
Rational RegretAt(const ActionPartition& eu, const Strategy& s,
                  const Strategy& br, const Rational& t, bool right) {
  const Rational a = right ? s.RightLimit(t) : s(t);
  const Rational b = right ? br.RightLimit(t) : br(t);
  return eu.Evaluate(t, b) - eu.Evaluate(t, a);
}

}  // namespace

void IterationConfig::Validate() const {
  if (tolerance.Sign() <= 0) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (max_iters == 0) throw std::invalid_argument("max_iters must be positive");
  if (max_cycle_period < 2) {
    throw std::invalid_argument("max_cycle_period must be at least 2");
  }
}

std::string ToString(IterationOutcome::Kind kind) {
  switch (kind) {
    case IterationOutcome::Kind::kFixedPoint:
      return "fixed-point";
    case IterationOutcome::Kind::kCycle:
      return "cycle";
    case IterationOutcome::Kind::kExhausted:
      return "exhausted";
  }
  return "unknown";
}

std::size_t CoefficientBits(const Strategy& s) {
  std::size_t bits = 0;
  auto widen = [&bits](const Rational& r) {
    bits = std::max({bits, mpz_sizeinbase(r.Numerator().get_mpz_t(), 2),
                     mpz_sizeinbase(r.Denominator().get_mpz_t(), 2)});
  };
  for (const Rational& c : s.boundaries()) widen(c);
  for (const LinearFunc& f : s.pieces()) {
    widen(f.slope);
    widen(f.intercept);
  }
  return bits;
}

IterationOutcome IterateSymmetric(const GameDefinition& game,
                                  const Strategy& seed,
                                  const IterationConfig& cfg) {
  if (!game.symmetric) {
    throw std::invalid_argument("IterateSymmetric needs a symmetric game");
  }
  return Iterate(game, {seed}, cfg);
}

IterationOutcome IterateAsymmetric(const GameDefinition& game,
                                   const Profile& seeds,
                                   const IterationConfig& cfg) {
  return Iterate(game, {seeds[0], seeds[1]}, cfg);
}

VerifyResult Verify(const GameDefinition& game, const Profile& profile,
                    std::size_t grid) {
  if (grid == 0) throw std::invalid_argument("Verify needs a positive grid");
  VerifyResult result;
  for (int p = 0; p < 2; ++p) {
    const Strategy& own = profile[p];
    const Strategy& opp = profile[1 - p];
    const PiecewiseUniform& d = game.dist(p);
    const ActionPartition eu(game.payoff(p), game.dist(1 - p), opp);
    const Strategy br = BestResponse(game, p, opp, OptionsFor(game));

    std::vector<Rational> points;
    for (std::size_t i = 1; i <= grid; ++i) {
      points.push_back(d.lo() + (d.hi() - d.lo()) * Rational(static_cast<long>(i)) /
                                    Rational(static_cast<long>(grid)));
    }
    for (const Strategy* s : {&own, &br}) {
      for (const Rational& c : s->boundaries()) {
        if (d.lo() < c && c <= d.hi()) points.push_back(c);
      }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Rational worst = RegretAt(eu, own, br, d.lo(), /*right=*/true);
    for (const Rational& t : points) {
      worst = Max(worst, RegretAt(eu, own, br, t, false));
      if (t < d.hi()) worst = Max(worst, RegretAt(eu, own, br, t, true));
    }
    result.player_epsilon[p] = Max(worst, 0);
  }
  result.epsilon = Max(result.player_epsilon[0], result.player_epsilon[1]);
  return result;
}

Strategy Seed(const std::string& name, const GameDefinition& game,
              int player) {
  if (player != 0 && player != 1) throw std::invalid_argument("bad player");
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? std::string() : name.substr(colon + 1);

  if (name == "truthful") return OnSupport(game, player, LinearFunc{1, 0});
  if (head == "constant" && !arg.empty()) {
    return OnSupport(game, player, LinearFunc{0, ParseArg(arg, name)});
  }
  if (head == "linear") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) {
      throw SpecError("linear seed needs linear:M,B");
    }
    return OnSupport(game, player,
                     LinearFunc{ParseArg(arg.substr(0, comma), name),
                                ParseArg(arg.substr(comma + 1), name)});
  }
  if (name == "supply-start") {
    const Rational v = Param(game, "v");
    return TwoPiece(game, player, v - 1,
                    LinearFunc{Rational(1, 2), v / 2 - Rational(1, 4)},
                    LinearFunc{Rational(3, 4), v / 4});
  }
  if (head == "file" && !arg.empty()) return LoadStrategyFile(arg);
  throw SpecError("unknown seed '" + name + "'");
}

Profile NamedProfile(const std::string& name, const GameDefinition& game) {
  auto both = [&](const LinearFunc& f) {
    return Profile{OnSupport(game, 0, f), OnSupport(game, 1, f)};
  };
  if (name == "supply-symmetric") {
    const Rational v = Param(game, "v");
    const Rational c = 2 * v / 3 - 1;
    const LinearFunc flat{0, 2 * v / 3 - Rational(1, 2)};
    const LinearFunc rising{Rational(1, 2), v / 3};
    return {TwoPiece(game, 0, c, flat, rising),
            TwoPiece(game, 1, c, flat, rising)};
  }
  if (name == "shared-good") {
    const Rational a = Param(game, "A");
    return both(LinearFunc{Rational(2, 3), a / 3});
  }
  if (name == "vicious-vickrey") {
    const Rational k = Param(game, "k");
    return both(LinearFunc{1 / (k + 1), k / (k + 1)});
  }
  if (name == "bargaining-linear") {
    if (Param(game, "k") != Rational(1, 2)) {
      throw SpecError("profile 'bargaining-linear' is defined for k = 1/2 only");
    }
    return {OnSupport(game, 0, LinearFunc{Rational(2, 3), Rational(1, 4)}),
            OnSupport(game, 1, LinearFunc{Rational(2, 3), Rational(1, 12)})};
  }
  if (name.rfind("demand:", 0) == 0) {
    const Rational v = Param(game, "v");
    const Rational x = ParseArg(name.substr(7), name);
    return {TwoPiece(game, 0, x, LinearFunc{0, x}, LinearFunc{0, v}),
            TwoPiece(game, 1, v - x, LinearFunc{0, v - x}, LinearFunc{0, v})};
  }
  if (name == "fpsb") return both(LinearFunc{Rational(1, 2), 0});
  return {Seed(name, game, 0), Seed(name, game, 1)};
}

}  // namespace plbr
