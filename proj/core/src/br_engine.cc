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

#include "plbr/br_engine.h"

#include <algorithm>

namespace plbr {
namespace {

// a -> slope * a + intercept.
struct Affine {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& a) const { return slope * a + intercept; }
};

// Region r covers z in (lower, upper) or [lower, upper]; nullopt = infinite.
std::optional<Rational> RegionLower(const PayoffSpec& spec, std::size_t r) {
  if (r == 0) return std::nullopt;
  return spec.region_bounds[r - 1];
}
std::optional<Rational> RegionUpper(const PayoffSpec& spec, std::size_t r) {
  if (r + 1 == spec.regions.size()) return std::nullopt;
  return spec.region_bounds[r];
}

// Opponent type T at which z = a + alpha * (m T + b) equals `bound`, as a
// function of a.
Affine TypeAtBound(const PayoffSpec& spec, const LinearFunc& action,
                   const Rational& bound) {
  const Rational am = spec.alpha * action.slope;
  return {-1 / am, (bound - spec.alpha * action.intercept) / am};
}

// Lower and upper T limits (as functions of a) of the event "z in region r";
// nullopt means unbounded on that side. Requires alpha * m != 0.
std::pair<std::optional<Affine>, std::optional<Affine>> TypeRange(
    const PayoffSpec& spec, const LinearFunc& action, std::size_t r) {
  std::optional<Affine> from_lower, from_upper;
  if (auto b = RegionLower(spec, r)) from_lower = TypeAtBound(spec, action, *b);
  if (auto b = RegionUpper(spec, r)) from_upper = TypeAtBound(spec, action, *b);
  if ((spec.alpha * action.slope).Sign() > 0) return {from_lower, from_upper};
  return {from_upper, from_lower};
}

std::vector<Rational> DistinctBounds(const PayoffSpec& spec) {
  std::vector<Rational> bounds = spec.region_bounds;
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  return bounds;
}

}  // namespace

EuPolynomial& EuPolynomial::operator+=(const EuPolynomial& o) {
  q2 += o.q2;
  q1.slope += o.q1.slope;
  q1.intercept += o.q1.intercept;
  q0.slope += o.q0.slope;
  q0.intercept += o.q0.intercept;
  return *this;
}

std::vector<OpponentPiece> PrepareOpponent(const PiecewiseUniform& dist,
                                           const Strategy& opp) {
  const Strategy refined = Refine(opp, dist.breakpoints());
  const auto& cuts = refined.boundaries();
  std::vector<OpponentPiece> pieces;
  pieces.reserve(refined.num_pieces());
  for (std::size_t k = 0; k < refined.num_pieces(); ++k) {
    OpponentPiece piece;
    if (k > 0) piece.lo = cuts[k - 1];
    if (k < cuts.size()) piece.hi = cuts[k];
    piece.action = refined.pieces()[k];
    piece.in_support = piece.lo && piece.hi && *piece.lo >= dist.lo() &&
                       *piece.hi <= dist.hi();
    if (piece.in_support) {
      piece.prob = dist.IntervalProb(*piece.lo, *piece.hi);
      const Rational mid = Midpoint(*piece.lo, *piece.hi);
      const auto& d = dist.breakpoints();
      const std::size_t j = static_cast<std::size_t>(
          std::upper_bound(d.begin(), d.end(), mid) - d.begin()) - 1;
      piece.density = dist.Density(j);
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

EuPolynomial CellPolynomial(const PayoffSpec& spec, const OpponentPiece& piece,
                            std::size_t region, const Rational& a_rep) {
  EuPolynomial out;
  if (!piece.in_support || piece.prob.IsZero()) return out;
  const RegionCoeffs& c = spec.regions[region];
  const Rational& m = piece.action.slope;
  const Rational& b = piece.action.intercept;
  const Rational g = c.theta_other + c.rho_other * m;

  if ((spec.alpha * m).IsZero()) {
    // The opponent's action is the constant b on the whole piece, so the
    // region is decided by a alone.
    if (RegionIndex(spec, a_rep + spec.alpha * b) != region) return out;
    const Rational mean = Midpoint(*piece.lo, *piece.hi);
    out.q1 = {0, c.rho * piece.prob};
    out.q0 = {c.theta * piece.prob,
              (g * mean + c.rho_other * b + c.phi) * piece.prob};
    return out;
  }

  const auto [lower, upper] = TypeRange(spec, piece.action, region);
  // mm(lo, hi, x) with the branch fixed by a_rep.
  auto clamp = [&](const std::optional<Affine>& x, bool is_lower) -> Affine {
    const Rational& lo = *piece.lo;
    const Rational& hi = *piece.hi;
    if (!x) return {0, is_lower ? lo : hi};
    const Rational v = (*x)(a_rep);
    if (v <= lo) return {0, lo};
    if (v >= hi) return {0, hi};
    return *x;
  };
  const Affine lo_t = clamp(lower, true);
  const Affine hi_t = clamp(upper, false);
  // p(a) = (U - L) * density, mean(a) = (L + U) / 2.
  const Rational w1 = (hi_t.slope - lo_t.slope) * piece.density;
  const Rational w0 = (hi_t.intercept - lo_t.intercept) * piece.density;
  const Rational s1 = (lo_t.slope + hi_t.slope) / 2;
  const Rational s0 = (lo_t.intercept + hi_t.intercept) / 2;
  // Payoff inside the cell: (rho + g s1) a + theta t + h.
  const Rational ra = c.rho + g * s1;
  const Rational h = g * s0 + c.rho_other * b + c.phi;
  out.q2 = ra * w1;
  out.q1 = {c.theta * w1, ra * w0 + h * w1};
  out.q0 = {c.theta * w0, h * w0};
  return out;
}

ActionPartition::ActionPartition(const PayoffSpec& spec,
                                 const PiecewiseUniform& dist,
                                 const Strategy& opp) {
  const std::vector<OpponentPiece> pieces = PrepareOpponent(dist, opp);
  const std::vector<Rational> bounds = DistinctBounds(spec);
  for (const OpponentPiece& p : pieces) {
    if (!p.in_support || p.prob.IsZero()) continue;
    for (const Rational& beta : bounds) {
      for (const Rational& end : {*p.lo, *p.hi}) {
        cuts_.push_back(beta - spec.alpha * p.action(end));
      }
    }
  }
  std::sort(cuts_.begin(), cuts_.end());
  cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());

  auto total = [&](const Rational& a_rep) {
    EuPolynomial sum;
    for (const OpponentPiece& p : pieces) {
      for (std::size_t r = 0; r < spec.regions.size(); ++r) {
        sum += CellPolynomial(spec, p, r, a_rep);
      }
    }
    return sum;
  };
  if (cuts_.empty()) {
    segments_.push_back(total(0));
    return;
  }
  segments_.push_back(total(cuts_.front() - 1));
  for (std::size_t i = 0; i + 1 < cuts_.size(); ++i) {
    segments_.push_back(total(Midpoint(cuts_[i], cuts_[i + 1])));
  }
  segments_.push_back(total(cuts_.back() + 1));
  for (const Rational& c : cuts_) at_cuts_.push_back(total(c));
}

Rational ActionPartition::Evaluate(const Rational& t, const Rational& a) const {
  const std::size_t i = static_cast<std::size_t>(
      std::lower_bound(cuts_.begin(), cuts_.end(), a) - cuts_.begin());
  if (i < cuts_.size() && cuts_[i] == a) return at_cuts_[i](t, a);
  return segments_[i](t, a);
}

Rational ExpectedUtility(const PayoffSpec& spec, const PiecewiseUniform& dist,
                         const Strategy& opp, const Rational& t,
                         const Rational& a) {
  Rational eu(0);
  for (const OpponentPiece& p : PrepareOpponent(dist, opp)) {
    if (!p.in_support || p.prob.IsZero()) continue;
    const Rational& m = p.action.slope;
    const Rational& b = p.action.intercept;
    if ((spec.alpha * m).IsZero()) {
      const RegionCoeffs& c = spec.regions[RegionIndex(spec, a + spec.alpha * b)];
      const Rational mean = dist.ConditionalMeanInPiece(*p.lo, *p.hi);
      eu += (c.theta * t + c.rho * a +
             (c.theta_other + c.rho_other * m) * mean + c.rho_other * b +
             c.phi) *
            p.prob;
      continue;
    }
    for (std::size_t r = 0; r < spec.regions.size(); ++r) {
      const RegionCoeffs& c = spec.regions[r];
      const auto [lower, upper] = TypeRange(spec, p.action, r);
      const Rational lo = lower ? Clamp(*p.lo, *p.hi, (*lower)(a)) : *p.lo;
      const Rational hi = upper ? Clamp(*p.lo, *p.hi, (*upper)(a)) : *p.hi;
      if (!(lo < hi)) continue;
      const Rational prob = dist.IntervalProb(lo, hi);
      if (prob.IsZero()) continue;
      const Rational mean = dist.ConditionalMeanInPiece(lo, hi);
      eu += (c.theta * t + c.rho * a +
             (c.theta_other + c.rho_other * m) * mean + c.rho_other * b +
             c.phi) *
            prob;
    }
  }
  return eu;
}

std::vector<CandidateLine> CandidateActions(const PayoffSpec& spec,
                                            const PiecewiseUniform& dist,
                                            const Strategy& opp) {
  return CandidateActions(spec, dist, opp, ActionPartition(spec, dist, opp));
}

std::vector<CandidateLine> CandidateActions(const PayoffSpec& spec,
                                            const PiecewiseUniform& dist,
                                            const Strategy& opp,
                                            const ActionPartition& partition) {
  std::vector<CandidateLine> out;
  auto add = [&](CandidateLine cand) {
    for (CandidateLine& existing : out) {
      if (existing.line == cand.line) {
        if (cand.origin == CandidateLine::Origin::kVertex) existing = cand;
        return;
      }
    }
    out.push_back(std::move(cand));
  };

  const std::vector<OpponentPiece> pieces = PrepareOpponent(dist, opp);
  const std::vector<Rational> bounds = DistinctBounds(spec);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const OpponentPiece& p = pieces[j];
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      for (const auto& end : {p.lo, p.hi}) {
        if (!end) continue;
        CandidateLine cand;
        cand.line = {0, bounds[i] - spec.alpha * p.action(*end)};
        cand.origin = CandidateLine::Origin::kRegionBoundary;
        cand.bound = i;
        cand.piece = j;
        add(std::move(cand));
      }
    }
  }
  for (std::size_t s = 0; s < partition.segments().size(); ++s) {
    const EuPolynomial& poly = partition.segments()[s];
    if (poly.q2.Sign() >= 0) continue;
    CandidateLine cand;
    cand.line = {-poly.q1.slope / (2 * poly.q2),
                 -poly.q1.intercept / (2 * poly.q2)};
    cand.origin = CandidateLine::Origin::kVertex;
    cand.segment = s;
    add(std::move(cand));
  }
  const std::vector<Rational>& cuts = partition.cuts();
  for (std::size_t s = 0; s < partition.segments().size(); ++s) {
    const EuPolynomial& poly = partition.segments()[s];
    if (!poly.q2.IsZero() || !(poly.q1 == LinearFunc{0, 0})) continue;
    Rational inside = 0;
    if (!cuts.empty()) {
      if (s == 0) {
        inside = cuts.front() - 1;
      } else if (s == cuts.size()) {
        inside = cuts.back() + 1;
      } else {
        inside = Midpoint(cuts[s - 1], cuts[s]);
      }
    }
    CandidateLine cand;
    cand.line = {0, inside};
    cand.origin = CandidateLine::Origin::kFlatInterior;
    cand.segment = s;
    if (std::none_of(out.begin(), out.end(), [&](const CandidateLine& c) {
          return c.line == cand.line;
        })) {
      out.push_back(std::move(cand));
    }
  }
  return out;
}

Strategy BestResponse(const PayoffSpec& spec, const PiecewiseUniform& dist,
                      const Strategy& opp, const Rational& t_lo,
                      const Rational& t_hi,
                      const BestResponseOptions& options) {
  const ActionPartition partition(spec, dist, opp);
  const std::vector<CandidateLine> candidates =
      CandidateActions(spec, dist, opp, partition);
  std::vector<LinearFunc> lines;
  EnvelopeOptions envelope;
  envelope.score_degree = 2;
  envelope.root_tolerance = options.root_tolerance;
  for (const CandidateLine& c : candidates) {
    lines.push_back(c.line);
    // Vertices first, then region-boundary constants; flat-segment interior
    // points only win when strictly better.
    envelope.tie_rank.push_back(
        c.origin == CandidateLine::Origin::kVertex
            ? 0
            : (c.origin == CandidateLine::Origin::kRegionBoundary ? 1 : 2));
  }
  Strategy response = SelectEnvelope(
      lines,
      [&](const Rational& t, const Rational& a) {
        return partition.Evaluate(t, a);
      },
      t_lo, t_hi, envelope);
  if (options.action_clip) {
    response = ClampActions(response, options.action_clip->first,
                            options.action_clip->second);
  }
  if (options.zero_extend) response = ZeroExtend(response, t_lo, t_hi);
  return Simplify(response);
}

Strategy BestResponse(const GameDefinition& game, int player,
                      const Strategy& opp, const BestResponseOptions& options) {
  BestResponseOptions opts = options;
  if (!opts.action_clip) opts.action_clip = game.action_clip;
  const PiecewiseUniform& own = game.dist(player);
  return BestResponse(game.payoff(player), game.dist(1 - player), opp,
                      own.lo(), own.hi(), opts);
}

std::size_t PieceBoundaryBound(std::size_t regions, std::size_t dist_pieces,
                               std::size_t strategy_pieces) {
  if (regions == 0 || dist_pieces + strategy_pieces < 2) return 0;
  return 2 * (regions - 1) * (dist_pieces + strategy_pieces - 2);
}

}  // namespace plbr
