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

// Best-response dynamics: repeatedly replace each strategy by a best response
// to the other until the profile stops moving (a Bayes-Nash equilibrium) or
// starts repeating (for two players a period-2 cycle is itself an asymmetric
// equilibrium).

#ifndef PLBR_DYNAMICS_H_
#define PLBR_DYNAMICS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plbr/br_engine.h"
#include "plbr/game_spec.h"
#include "plbr/pwl.h"
#include "plbr/rational.h"

namespace plbr {

struct IterationConfig {
  Rational tolerance = Rational(1, 1000);
  std::size_t max_iters = 100;
  std::size_t max_cycle_period = 8;
  // Report a fixed point as soon as an iterate reproduces its predecessor
  // exactly, and mark it exact.
  bool exact_fixed_point = true;
  // Grid intervals used for the epsilon certificate (0 skips it).
  std::size_t verify_grid = 512;
  // Stop (as exhausted) once an iterate has a boundary or coefficient wider
  // than this many bits; exact arithmetic on non-converging runs otherwise
  // slows down round after round. 0 disables the check.
  std::size_t max_coefficient_bits = 1024;

  // Throws std::invalid_argument for tolerance <= 0 or period < 2.
  void Validate() const;
};

using Profile = std::array<Strategy, 2>;

struct IterationStep {
  // One entry for symmetric dynamics, two (player 0, player 1) otherwise.
  std::vector<Strategy> strategies;
  // Sup-distance to the previous step over the type support; zero for the
  // seed.
  Rational distance;
};

struct IterationOutcome {
  enum class Kind { kFixedPoint, kCycle, kExhausted };

  Kind kind = Kind::kExhausted;
  std::size_t period = 0;  // cycle length; 1 for a fixed point
  bool exact = false;      // fixed point reproduced with distance exactly 0
  // Fixed point: the strategy (symmetric) or pair (asymmetric).
  // Cycle: the members in iteration order (each member is a strategy for
  // symmetric runs, a pair flattened as [p0, p1] for asymmetric runs).
  // Exhausted: the last iterate.
  std::vector<Strategy> profile;
  std::vector<IterationStep> history;  // history[0] is the seed
  std::size_t iterations = 0;          // best-response rounds computed
  bool size_limited = false;  // exhausted because of max_coefficient_bits
  // Largest regret found by Verify on the reported profile (fixed points and
  // period-2 cycles), otherwise unset.
  std::optional<Rational> epsilon;
};

std::string ToString(IterationOutcome::Kind kind);

// Widest numerator or denominator, in bits, among the boundaries and piece
// coefficients of s.
std::size_t CoefficientBits(const Strategy& s);

// Iterates s <- BestResponse(s) from `seed`. Requires game.symmetric.
IterationOutcome IterateSymmetric(const GameDefinition& game,
                                  const Strategy& seed,
                                  const IterationConfig& cfg = {});

// Iterates (s0, s1) <- (BR_0(s1), BR_1(s0)); convergence and cycles use the
// larger of the two players' sup-distances.
IterationOutcome IterateAsymmetric(const GameDefinition& game,
                                   const Profile& seeds,
                                   const IterationConfig& cfg = {});

struct VerifyResult {
  std::array<Rational, 2> player_epsilon;
  Rational epsilon;  // max over players
};

// Largest regret sup_t [EU(t, br(t)) - EU(t, s(t))] of either player,
// evaluated exactly on `grid` equal intervals of the player's type support
// plus every piece boundary of s and br inside it. A lower bound on the true
// epsilon; zero at an exact equilibrium.
VerifyResult Verify(const GameDefinition& game, const Profile& profile,
                    std::size_t grid = 512);

// Named seed strategies, zero outside the player's type support:
//   truthful        a(t) = t
//   constant:C      a(t) = C
//   linear:M,B      a(t) = M t + B
//   supply-start    supply-chain heuristic (needs parameter v)
//   file:PATH       strategy file (see io.h)
// Throws SpecError for unknown names or malformed arguments.
Strategy Seed(const std::string& name, const GameDefinition& game,
              int player = 0);

// Known equilibrium candidates:
//   truthful           (t, t)
//   supply-symmetric   supply chain, v in [3/2, 3]: symmetric two-piece strategy
//   shared-good        shared good on U[A, B]: a(t) = (2t + A) / 3
//   vicious-vickrey    vicious Vickrey: a(t) = (k + t) / (k + 1)
//   bargaining-linear  bargaining, k = 1/2: (2/3 t + 1/4, 2/3 t + 1/12)
//   demand:X           supply chain: player 0 asks X up to type X, player 1
//                      asks v - X up to type v - X, both ask v otherwise
//   fpsb               a(t) = t / 2
// Also accepts any Seed() name, used for both players.
Profile NamedProfile(const std::string& name, const GameDefinition& game);

}  // namespace plbr

#endif  // PLBR_DYNAMICS_H_
