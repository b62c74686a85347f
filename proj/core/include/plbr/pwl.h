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

// Piecewise-linear functions of one variable over exact rationals.
//
// A Strategy with boundaries c_2 < ... < c_K and pieces (m_k, b_k) is the
// total function
//
//   s(t) = m_1 t + b_1   if        t <= c_2
//          m_k t + b_k   if c_k  < t <= c_{k+1}
//          m_K t + b_K   if c_K  < t
//
// so every piece is open on the left and closed on the right, and s is
// left-continuous at each boundary.

#ifndef PLBR_PWL_H_
#define PLBR_PWL_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plbr/rational.h"

namespace plbr {

struct LinearFunc {
  Rational slope;
  Rational intercept;

  Rational operator()(const Rational& t) const { return slope * t + intercept; }
  bool IsConstant() const { return slope.IsZero(); }

  friend bool operator==(const LinearFunc&, const LinearFunc&) = default;
};

// "1/2 t + 1/4", "t", "-3/4", ...
std::string ToString(const LinearFunc& f);

// Point where f and g intersect, if their slopes differ.
std::optional<Rational> Intersection(const LinearFunc& f, const LinearFunc& g);

class Strategy {
 public:
  // Throws std::invalid_argument unless boundaries are strictly increasing
  // and pieces.size() == boundaries.size() + 1.
  Strategy(std::vector<Rational> boundaries, std::vector<LinearFunc> pieces);

  static Strategy Linear(const Rational& slope, const Rational& intercept);
  static Strategy Constant(const Rational& value) { return Linear(0, value); }
  static Strategy Identity() { return Linear(1, 0); }

  const std::vector<Rational>& boundaries() const { return boundaries_; }
  const std::vector<LinearFunc>& pieces() const { return pieces_; }
  std::size_t num_pieces() const { return pieces_.size(); }

  // Index of the piece whose half-open interval (c_k, c_{k+1}] contains t.
  std::size_t PieceAt(const Rational& t) const;
  // Index of the piece in effect on (t, t + e) for small e > 0.
  std::size_t PieceRightOf(const Rational& t) const;

  Rational operator()(const Rational& t) const { return pieces_[PieceAt(t)](t); }
  // lim_{u -> t+} s(u).
  Rational RightLimit(const Rational& t) const {
    return pieces_[PieceRightOf(t)](t);
  }

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<Rational> boundaries_;
  std::vector<LinearFunc> pieces_;
};

inline Rational Eval(const Strategy& s, const Rational& t) { return s(t); }

// Same function, with `points` added to the boundary set (each point once).
Strategy Refine(const Strategy& s, std::span<const Rational> points);

// Merges adjacent pieces with identical slope and intercept.
Strategy Simplify(const Strategy& s);

// sup |s1 - s2| over (lo, hi]. Both functions are linear between the merged
// boundaries, so the supremum is the largest endpoint value (one-sided limits
// at interior boundaries) of one of those finitely many segments.
Rational SupDistance(const Strategy& s1, const Strategy& s2, const Rational& lo,
                     const Rational& hi);

// s restricted to (lo, hi] and equal to zero elsewhere; boundaries lo and hi
// are always present.
Strategy ZeroExtend(const Strategy& s, const Rational& lo, const Rational& hi);

// Number of boundaries strictly inside (lo, hi) at which s changes pieces.
std::size_t InteriorBoundaryCount(const Strategy& s, const Rational& lo,
                                  const Rational& hi);

// Pointwise min(hi, max(lo, s(t))).
Strategy ClampActions(const Strategy& s, const Rational& lo,
                      const Rational& hi);

// score(t, a): value of playing action a at type t.
using ScoreFn = std::function<Rational(const Rational& t, const Rational& a)>;

// 2^-64.
Rational DefaultRootTolerance();

struct EnvelopeOptions {
  // Lower rank wins among candidates whose scores tie. Empty means all equal.
  std::vector<int> tie_rank;
  // When >= 0, the caller promises that inside every cell of the candidate-line
  // arrangement, t -> score(t, c(t)) is a polynomial of at most this degree
  // (0..2) for each candidate c. Cells are then additionally split where the
  // leading candidate changes, so switches between candidates whose lines do
  // not intersect are not missed. -1 uses the arrangement cells only.
  int score_degree = -1;
  // Width to which irrational switch points are bracketed.
  Rational root_tolerance = DefaultRootTolerance();
};

// Chooses, on each sub-range of [lo, hi], the candidate line with the highest
// score at the sub-range midpoint. Ties go to the lower tie_rank, then to the
// smaller action at the midpoint, then to the earlier candidate. Adjacent
// sub-ranges with the same line are merged. The first and last pieces of the
// result extend to -inf and +inf. Throws std::invalid_argument when
// `candidates` is empty or lo >= hi.
Strategy SelectEnvelope(std::span<const LinearFunc> candidates,
                        const ScoreFn& score, const Rational& lo,
                        const Rational& hi,
                        const EnvelopeOptions& options = {});

}  // namespace plbr

#endif  // PLBR_PWL_H_
