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

// Exact best responses to piecewise-linear opponent strategies.
//
// Against an opponent playing s(T), T ~ piecewise uniform, the expected
// utility EU(t, a) is a sum over (payoff region r, opponent piece j) cells.
// Once s is refined at the distribution breakpoints, every cell is a
// quadratic in a (affine in t) between the constant "action cuts"
// b_r - alpha * s(c) taken at the piece ends c. The best response therefore
// only ever plays one of
//   * a cut constant, or
//   * the stationary point -q1(t) / (2 q2) of a segment's quadratic,
// all of which are lines in t; the response picks the best line per type
// range.

#ifndef PLBR_BR_ENGINE_H_
#define PLBR_BR_ENGINE_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plbr/distribution.h"
#include "plbr/game_spec.h"
#include "plbr/pwl.h"
#include "plbr/rational.h"

namespace plbr {

// One piece of the opponent strategy after refinement, with its probability.
struct OpponentPiece {
  std::optional<Rational> lo;  // nullopt = -inf
  std::optional<Rational> hi;  // nullopt = +inf
  LinearFunc action;
  Rational prob;     // Pr(lo < T <= hi)
  Rational density;  // type density on the piece (0 off the support)
  bool in_support = false;
};

// The opponent strategy refined at every distribution breakpoint, split into
// pieces that each lie inside one uniform segment or outside the support.
std::vector<OpponentPiece> PrepareOpponent(const PiecewiseUniform& dist,
                                           const Strategy& opp);

// EU restricted to one action segment: q2 a^2 + q1(t) a + q0(t).
struct EuPolynomial {
  Rational q2;
  LinearFunc q1;
  LinearFunc q0;

  Rational operator()(const Rational& t, const Rational& a) const {
    return (q2 * a + q1(t)) * a + q0(t);
  }
  EuPolynomial& operator+=(const EuPolynomial& o);
};

// Polynomial form of one (region, opponent piece) cell, valid on the action
// segment containing a_rep (and exactly at a_rep when a_rep is a cut).
EuPolynomial CellPolynomial(const PayoffSpec& spec, const OpponentPiece& piece,
                            std::size_t region, const Rational& a_rep);

class ActionPartition {
 public:
  ActionPartition(const PayoffSpec& spec, const PiecewiseUniform& dist,
                  const Strategy& opp);

  // Sorted, distinct actions where some cell changes form.
  const std::vector<Rational>& cuts() const { return cuts_; }
  // Polynomial on the open segment between cuts i-1 and i (segment 0 is
  // (-inf, cuts[0]), the last one (cuts.back(), +inf)).
  const std::vector<EuPolynomial>& segments() const { return segments_; }
  // Polynomial valid exactly at cuts[i] (ties resolved by the closed regions).
  const std::vector<EuPolynomial>& at_cuts() const { return at_cuts_; }

  // EU(t, a).
  Rational Evaluate(const Rational& t, const Rational& a) const;

 private:
  std::vector<Rational> cuts_;
  std::vector<EuPolynomial> segments_;
  std::vector<EuPolynomial> at_cuts_;
};

// EU(t, a) = E_T[u(t, a, T, opp(T))], summed cell by cell from interval
// probabilities and conditional means. Independent of ActionPartition.
Rational ExpectedUtility(const PayoffSpec& spec, const PiecewiseUniform& dist,
                         const Strategy& opp, const Rational& t,
                         const Rational& a);

struct CandidateLine {
  // kFlatInterior: an interior action of a segment on which the expected
  // utility does not depend on the action at all. Such a segment has no
  // stationary point, and its end actions may fall in a different region.
  enum class Origin { kRegionBoundary, kVertex, kFlatInterior };

  LinearFunc line;
  Origin origin = Origin::kRegionBoundary;
  // kRegionBoundary: region bound index and opponent piece index.
  std::size_t bound = 0;
  std::size_t piece = 0;
  // kVertex and kFlatInterior: action segment index.
  std::size_t segment = 0;
};

// Boundary constants for every region bound and every finite end of every
// refined opponent piece, followed by the stationary lines of the concave
// action segments. Duplicate lines are dropped (first occurrence kept, with
// stationary lines taking precedence over equal constants).
std::vector<CandidateLine> CandidateActions(const PayoffSpec& spec,
                                            const PiecewiseUniform& dist,
                                            const Strategy& opp);
std::vector<CandidateLine> CandidateActions(const PayoffSpec& spec,
                                            const PiecewiseUniform& dist,
                                            const Strategy& opp,
                                            const ActionPartition& partition);

struct BestResponseOptions {
  // Return the response on (t_lo, t_hi] and zero elsewhere, the same
  // encoding used for seed strategies.
  bool zero_extend = true;
  std::optional<std::pair<Rational, Rational>> action_clip;
  Rational root_tolerance = DefaultRootTolerance();
};

// Best response on the type range [t_lo, t_hi] to `opp`, whose types are
// distributed as `dist`. Among equally good lines a stationary line is
// preferred over a boundary constant, then the smaller action.
Strategy BestResponse(const PayoffSpec& spec, const PiecewiseUniform& dist,
                      const Strategy& opp, const Rational& t_lo,
                      const Rational& t_hi,
                      const BestResponseOptions& options = {});

// Best response of `player` in `game` to the other player's strategy.
Strategy BestResponse(const GameDefinition& game, int player,
                      const Strategy& opp,
                      const BestResponseOptions& options = {});

// 2 (I - 1)(J + K - 2): the type-boundary bound for a best response to a
// K-piece strategy under a J-piece distribution and an I-region payoff.
std::size_t PieceBoundaryBound(std::size_t regions, std::size_t dist_pieces,
                               std::size_t strategy_pieces);

}  // namespace plbr

#endif  // PLBR_BR_ENGINE_H_
