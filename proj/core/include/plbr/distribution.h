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

#ifndef PLBR_DISTRIBUTION_H_
#define PLBR_DISTRIBUTION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "plbr/rational.h"

namespace plbr {

// Scalar type distribution whose density is constant on each of J pieces
// [d_j, d_{j+1}]. Atomless, bounded support [d_1, d_{J+1}].
class PiecewiseUniform {
 public:
  // Throws std::invalid_argument unless breakpoints are strictly increasing,
  // masses.size() + 1 == breakpoints.size(), masses are nonnegative, and the
  // masses sum to exactly 1.
  PiecewiseUniform(std::vector<Rational> breakpoints,
                   std::vector<Rational> masses);

  // U[lo, hi].
  static PiecewiseUniform Uniform(const Rational& lo, const Rational& hi);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& masses() const { return masses_; }
  std::size_t num_pieces() const { return masses_.size(); }
  const Rational& lo() const { return breakpoints_.front(); }
  const Rational& hi() const { return breakpoints_.back(); }
  Rational Density(std::size_t piece) const;

  Rational Cdf(const Rational& x) const;
  // max(0, F(hi) - F(lo)); endpoints carry no mass.
  Rational IntervalProb(const Rational& lo, const Rational& hi) const;
  // E[T | lo <= T <= hi] = (lo + hi) / 2 when [lo, hi] sits inside one
  // uniform piece. Throws std::logic_error if the interval straddles a
  // breakpoint, which means the caller skipped breakpoint refinement.
  Rational ConditionalMeanInPiece(const Rational& lo, const Rational& hi) const;

  // Inverse cdf at u in [0, 1], exact.
  Rational Quantile(const Rational& u) const;
  double Quantile(double u) const;

  // n i.i.d. draws by inverse-cdf transform of a seeded mt19937_64 stream.
  std::vector<double> Sample(std::size_t n, std::uint64_t seed) const;

  friend bool operator==(const PiecewiseUniform&,
                         const PiecewiseUniform&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> masses_;
  std::vector<Rational> cumulative_;  // F(d_j)
  std::vector<double> breakpoints_d_;
  std::vector<double> cumulative_d_;
};

// Uniform draw on [0, 1) with 53 random bits; the value k / 2^53 is exact.
double UnitDyadic(std::uint64_t bits);

}  // namespace plbr

#endif  // PLBR_DISTRIBUTION_H_
