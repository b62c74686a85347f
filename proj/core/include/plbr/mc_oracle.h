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

// Monte Carlo estimates of expected utility, used to cross-check the exact
// engine. Sampling runs in double precision; opponent types are drawn as
// dyadic rationals so that draws landing on a payoff tie or a strategy
// boundary can be re-evaluated exactly.

#ifndef PLBR_MC_ORACLE_H_
#define PLBR_MC_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "plbr/game_spec.h"
#include "plbr/pwl.h"
#include "plbr/rational.h"

namespace plbr {

struct McConfig {
  std::size_t samples_per_cell = 100000;
  std::size_t type_grid = 41;    // points over the type support, ends included
  std::size_t action_grid = 41;  // points over [action_lo, action_hi]
  Rational action_lo = 0;
  Rational action_hi = 1;
  std::uint64_t rng_seed = 1;

  // Throws std::invalid_argument for zero counts or action_hi < action_lo.
  void Validate() const;
};

struct McEstimate {
  double mean = 0;
  double std_error = 0;
};

// Sample mean and standard error of payoff(t, a, T, opp(T)) for `player`,
// T drawn from the opponent's type distribution. `cell` selects the random
// stream: the draws depend only on (cfg.rng_seed, cell).
McEstimate MonteCarloExpectedUtility(const GameDefinition& game, int player,
                                     const Strategy& opp, const Rational& t,
                                     const Rational& a, const McConfig& cfg,
                                     std::uint64_t cell = 0);

struct EmpiricalPoint {
  double t = 0;
  double action = 0;  // arg max over the action grid
  double value = 0;
  double std_error = 0;
};

// For each type-grid point (cell index = grid index), the action-grid point
// with the highest estimate. All actions share the cell's draws; ties go to
// the smaller action.
std::vector<EmpiricalPoint> EmpiricalBestResponse(const GameDefinition& game,
                                                  int player,
                                                  const Strategy& opp,
                                                  const McConfig& cfg);

// Evenly spaced points lo + (hi - lo) i / (n - 1), i = 0..n-1 (the midpoint
// when n == 1).
std::vector<Rational> GridPoints(const Rational& lo, const Rational& hi,
                                 std::size_t n);

}  // namespace plbr

#endif  // PLBR_MC_ORACLE_H_
