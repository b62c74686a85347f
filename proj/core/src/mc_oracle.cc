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

#include "plbr/mc_oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

namespace plbr {
namespace {

// Draws closer than this (relative) to a strategy boundary or a payoff bound
// are redone in exact arithmetic.
constexpr double kNear = 1e-9;

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool Near(double x, double y) {
  return std::fabs(x - y) <= kNear * (1 + std::fabs(y));
}

struct Draw {
  std::uint64_t bits = 0;
  double t = 0;
  double action = 0;
  std::size_t piece = 0;
  std::optional<std::size_t> exact;  // index into the exact side table
};

struct ExactDraw {
  Rational t;
  Rational action;
};

// Common random numbers for one type cell: opponent draws shared by every
// action evaluated in that cell.
class CellSampler {
 public:
  CellSampler(const GameDefinition& game, int player, const Strategy& opp,
              std::size_t n, std::uint64_t seed)
      : spec_(game.payoff(player)), dist_(game.dist(1 - player)), opp_(opp) {
    for (const Rational& c : opp.boundaries()) bounds_d_.push_back(c.ToDouble());
    for (const Rational& b : spec_.region_bounds) beta_d_.push_back(b.ToDouble());
    for (const RegionCoeffs& c : spec_.regions) {
      coeffs_.push_back({c.theta.ToDouble(), c.rho.ToDouble(),
                         c.theta_other.ToDouble(), c.rho_other.ToDouble(),
                         c.phi.ToDouble()});
    }
    alpha_d_ = spec_.alpha.ToDouble();

    std::mt19937_64 rng(seed);
    draws_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Draw d;
      d.bits = rng();
      d.t = dist_.Quantile(UnitDyadic(d.bits));
      const auto it = std::lower_bound(bounds_d_.begin(), bounds_d_.end(), d.t);
      const bool near_boundary =
          (it != bounds_d_.end() && Near(d.t, *it)) ||
          (it != bounds_d_.begin() && Near(d.t, *(it - 1)));
      if (near_boundary) {
        MakeExact(d);
      } else {
        d.piece = static_cast<std::size_t>(it - bounds_d_.begin());
        const LinearFunc& f = opp_.pieces()[d.piece];
        d.action = f.slope.ToDouble() * d.t + f.intercept.ToDouble();
      }
      draws_.push_back(d);
    }
  }

  McEstimate Estimate(const Rational& t, const Rational& a) {
    const double td = t.ToDouble();
    const double ad = a.ToDouble();
    // Constant pieces put positive mass on one z, so their region is decided
    // exactly once per action.
    std::vector<std::optional<std::size_t>> const_region(opp_.num_pieces());
    for (std::size_t k = 0; k < opp_.num_pieces(); ++k) {
      const LinearFunc& f = opp_.pieces()[k];
      if (f.IsConstant()) {
        const_region[k] = RegionIndex(spec_, a + spec_.alpha * f.intercept);
      }
    }
    double mean = 0;
    double m2 = 0;
    std::size_t count = 0;
    for (Draw& d : draws_) {
      std::size_t region;
      if (const_region[d.piece]) {
        region = *const_region[d.piece];
      } else {
        const double z = ad + alpha_d_ * d.action;
        std::size_t above = 0;
        bool near = false;
        for (double b : beta_d_) {
          if (Near(z, b)) near = true;
          if (b < z) ++above;
        }
        if (near) {
          if (!d.exact) MakeExact(d);
          const ExactDraw& e = exact_[*d.exact];
          region = RegionIndex(spec_, a + spec_.alpha * e.action);
        } else {
          region = above;
        }
      }
      const auto& c = coeffs_[region];
      const double u = c[0] * td + c[1] * ad + c[2] * d.t + c[3] * d.action + c[4];
      ++count;
      const double delta = u - mean;
      mean += delta / static_cast<double>(count);
      m2 += delta * (u - mean);
    }
    McEstimate est;
    est.mean = mean;
    if (count > 1) {
      const double var = m2 / static_cast<double>(count - 1);
      est.std_error = std::sqrt(var / static_cast<double>(count));
    }
    return est;
  }

 private:
  void MakeExact(Draw& d) {
    ExactDraw e;
    e.t = dist_.Quantile(Rational::FromDouble(UnitDyadic(d.bits)));
    d.piece = opp_.PieceAt(e.t);
    e.action = opp_.pieces()[d.piece](e.t);
    d.t = e.t.ToDouble();
    d.action = e.action.ToDouble();
    d.exact = exact_.size();
    exact_.push_back(std::move(e));
  }

  const PayoffSpec& spec_;
  const PiecewiseUniform& dist_;
  const Strategy& opp_;
  std::vector<double> bounds_d_;
  std::vector<double> beta_d_;
  std::vector<std::array<double, 5>> coeffs_;
  double alpha_d_ = 0;
  std::vector<Draw> draws_;
  std::vector<ExactDraw> exact_;
};

std::uint64_t CellSeed(std::uint64_t rng_seed, std::uint64_t cell) {
  return SplitMix64(rng_seed ^ SplitMix64(cell));
}

}  // namespace

void McConfig::Validate() const {
  if (samples_per_cell == 0 || type_grid == 0 || action_grid == 0) {
    throw std::invalid_argument("Monte Carlo counts must be positive");
  }
  if (samples_per_cell < 2) {
    throw std::invalid_argument("a standard error needs at least 2 samples");
  }
  if (action_hi < action_lo) {
    throw std::invalid_argument("action range must satisfy lo <= hi");
  }
}

McEstimate MonteCarloExpectedUtility(const GameDefinition& game, int player,
                                     const Strategy& opp, const Rational& t,
                                     const Rational& a, const McConfig& cfg,
                                     std::uint64_t cell) {
  cfg.Validate();
  CellSampler sampler(game, player, opp, cfg.samples_per_cell,
                      CellSeed(cfg.rng_seed, cell));
  return sampler.Estimate(t, a);
}

std::vector<EmpiricalPoint> EmpiricalBestResponse(const GameDefinition& game,
                                                  int player,
                                                  const Strategy& opp,
                                                  const McConfig& cfg) {
  cfg.Validate();
  const PiecewiseUniform& own = game.dist(player);
  const std::vector<Rational> types = GridPoints(own.lo(), own.hi(), cfg.type_grid);
  const std::vector<Rational> actions =
      GridPoints(cfg.action_lo, cfg.action_hi, cfg.action_grid);
  std::vector<EmpiricalPoint> out;
  out.reserve(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    CellSampler sampler(game, player, opp, cfg.samples_per_cell,
                        CellSeed(cfg.rng_seed, i));
    EmpiricalPoint best;
    best.t = types[i].ToDouble();
    bool first = true;
    for (const Rational& a : actions) {
      const McEstimate est = sampler.Estimate(types[i], a);
      if (first || est.mean > best.value) {
        best.action = a.ToDouble();
        best.value = est.mean;
        best.std_error = est.std_error;
        first = false;
      }
    }
    out.push_back(best);
  }
  return out;
}

std::vector<Rational> GridPoints(const Rational& lo, const Rational& hi,
                                 std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {Midpoint(lo, hi)};
  std::vector<Rational> out;
  out.reserve(n);
  const Rational step = (hi - lo) / Rational(static_cast<long>(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(lo + step * Rational(static_cast<long>(i)));
  }
  return out;
}

}  // namespace plbr
