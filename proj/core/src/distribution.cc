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

#include "plbr/distribution.h"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace plbr {

PiecewiseUniform::PiecewiseUniform(std::vector<Rational> breakpoints,
                                   std::vector<Rational> masses)
    : breakpoints_(std::move(breakpoints)), masses_(std::move(masses)) {
  if (breakpoints_.size() < 2 || masses_.size() + 1 != breakpoints_.size()) {
    throw std::invalid_argument(
        "piecewise-uniform distribution needs J+1 breakpoints and J masses");
  }
  for (std::size_t j = 0; j + 1 < breakpoints_.size(); ++j) {
    if (!(breakpoints_[j] < breakpoints_[j + 1])) {
      throw std::invalid_argument(
          "distribution breakpoints must be strictly increasing");
    }
  }
  Rational total(0);
  cumulative_.push_back(0);
  for (const Rational& m : masses_) {
    if (m.Sign() < 0) throw std::invalid_argument("negative piece mass");
    total += m;
    cumulative_.push_back(total);
  }
  if (total != 1) {
    throw std::invalid_argument("distribution masses must sum to 1, got " +
                                total.ToString());
  }
  for (const Rational& d : breakpoints_) breakpoints_d_.push_back(d.ToDouble());
  for (const Rational& c : cumulative_) cumulative_d_.push_back(c.ToDouble());
}

PiecewiseUniform PiecewiseUniform::Uniform(const Rational& lo,
                                           const Rational& hi) {
  return PiecewiseUniform({lo, hi}, {Rational(1)});
}

Rational PiecewiseUniform::Density(std::size_t piece) const {
  return masses_.at(piece) / (breakpoints_[piece + 1] - breakpoints_[piece]);
}

Rational PiecewiseUniform::Cdf(const Rational& x) const {
  if (x <= lo()) return 0;
  if (x >= hi()) return 1;
  const std::size_t j = static_cast<std::size_t>(
      std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) -
      breakpoints_.begin()) - 1;
  return cumulative_[j] + (x - breakpoints_[j]) * Density(j);
}

Rational PiecewiseUniform::IntervalProb(const Rational& lo,
                                        const Rational& hi) const {
  return Max(Rational(0), Cdf(hi) - Cdf(lo));
}

Rational PiecewiseUniform::ConditionalMeanInPiece(const Rational& lo,
                                                  const Rational& hi) const {
  for (const Rational& d : breakpoints_) {
    if (lo < d && d < hi) {
      throw std::logic_error("interval [" + lo.ToString() + ", " +
                             hi.ToString() + "] straddles breakpoint " +
                             d.ToString());
    }
  }
  return Midpoint(lo, hi);
}

Rational PiecewiseUniform::Quantile(const Rational& u) const {
  if (u <= 0) return lo();
  if (u >= 1) return hi();
  for (std::size_t j = 0; j < masses_.size(); ++j) {
    if (masses_[j].IsZero() || u > cumulative_[j + 1]) continue;
    return breakpoints_[j] + (u - cumulative_[j]) / Density(j);
  }
  return hi();
}

double PiecewiseUniform::Quantile(double u) const {
  for (std::size_t j = 0; j < masses_.size(); ++j) {
    if (cumulative_d_[j + 1] <= cumulative_d_[j] || u > cumulative_d_[j + 1])
      continue;
    const double frac = (u - cumulative_d_[j]) /
                        (cumulative_d_[j + 1] - cumulative_d_[j]);
    return breakpoints_d_[j] + frac * (breakpoints_d_[j + 1] - breakpoints_d_[j]);
  }
  return breakpoints_d_.back();
}

std::vector<double> PiecewiseUniform::Sample(std::size_t n,
                                             std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Quantile(UnitDyadic(rng())));
  return out;
}

double UnitDyadic(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace plbr
