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

#include "plbr/pwl.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace plbr {
namespace {

void SortUnique(std::vector<Rational>* v) {
  std::sort(v->begin(), v->end());
  v->erase(std::unique(v->begin(), v->end()), v->end());
}

// Rebuilds a strategy over the sorted breakpoints `cuts`, asking `pick` for
// the linear piece in effect on each segment given a point inside it.
template <typename Pick>
Strategy Rebuild(std::vector<Rational> cuts, Pick pick) {
  SortUnique(&cuts);
  std::vector<LinearFunc> pieces;
  pieces.reserve(cuts.size() + 1);
  if (cuts.empty()) {
    pieces.push_back(pick(Rational(0)));
  } else {
    pieces.push_back(pick(cuts.front() - 1));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      pieces.push_back(pick(Midpoint(cuts[i], cuts[i + 1])));
    }
    pieces.push_back(pick(cuts.back() + 1));
  }
  return Simplify(Strategy(std::move(cuts), std::move(pieces)));
}

// c0 + c1 t + c2 t^2.
struct Quadratic {
  Rational c0, c1, c2;

  Rational operator()(const Rational& t) const { return (c2 * t + c1) * t + c0; }
  Rational Derivative(const Rational& t) const { return 2 * c2 * t + c1; }
  Quadratic operator-(const Quadratic& o) const {
    return {c0 - o.c0, c1 - o.c1, c2 - o.c2};
  }
  bool IsZero() const { return c0.IsZero() && c1.IsZero() && c2.IsZero(); }
};

// Newton-form interpolation through up to three points.
Quadratic Interpolate(std::span<const Rational> xs,
                      std::span<const Rational> ys) {
  if (xs.size() == 1) return {ys[0], 0, 0};
  const Rational d1 = (ys[1] - ys[0]) / (xs[1] - xs[0]);
  if (xs.size() == 2) return {ys[0] - d1 * xs[0], d1, 0};
  const Rational d12 = (ys[2] - ys[1]) / (xs[2] - xs[1]);
  const Rational d2 = (d12 - d1) / (xs[2] - xs[0]);
  return {ys[0] - d1 * xs[0] + d2 * xs[0] * xs[1], d1 - d2 * (xs[0] + xs[1]),
          d2};
}

// Sign of q on (t, t + e) for small e > 0.
int SignRightOf(const Quadratic& q, const Rational& t) {
  if (int s = q(t).Sign(); s != 0) return s;
  if (int s = q.Derivative(t).Sign(); s != 0) return s;
  return q.c2.Sign();
}

// A dyadic k / 2^p in [lo, hi] (lo < hi) with p about log2(1 / (hi - lo)).
Rational DyadicBetween(const Rational& lo, const Rational& hi) {
  const Rational w = hi - lo;
  const long p = std::max<long>(
      0, static_cast<long>(mpz_sizeinbase(w.Denominator().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(w.Numerator().get_mpz_t(), 2)) + 1);
  const mpz_class scale = mpz_class(1) << p;
  const mpq_class scaled = lo.mpq() * scale;
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Rational(mpq_class(k, scale));
}

// A root of q strictly inside (lo, hi) where q(lo) < 0 < q(hi) and q is
// monotone on [lo, hi]. Returns the exact root when rational, otherwise the
// right end of a bracket no wider than `tol` (so q > 0 there).
Rational CrossingIn(const Quadratic& q, Rational lo, Rational hi,
                    const Rational& tol) {
  if (q.c2.IsZero()) return -q.c0 / q.c1;
  const Rational disc = q.c1 * q.c1 - 4 * q.c2 * q.c0;
  Rational root;
  if (ExactSqrt(disc, &root)) {
    for (const Rational& r : {(-q.c1 - root) / (2 * q.c2),
                              (-q.c1 + root) / (2 * q.c2)}) {
      if (lo < r && r < hi) return r;
    }
  }
  // Split at short dyadics in the middle half of the bracket, so repeated
  // root finding does not inflate denominators.
  while (hi - lo > tol) {
    const Rational quarter = (hi - lo) / 4;
    Rational mid = DyadicBetween(lo + quarter, hi - quarter);
    const int s = q(mid).Sign();
    if (s == 0) return mid;
    (s < 0 ? lo : hi) = std::move(mid);
  }
  return hi;
}

// First point in (from, to) where d turns from negative to positive, given d
// is negative just right of `from`.
std::optional<Rational> FirstUpCrossing(const Quadratic& d,
                                        const Rational& from,
                                        const Rational& to,
                                        const Rational& tol) {
  std::vector<Rational> stops{from};
  if (!d.c2.IsZero()) {
    Rational vertex = -d.c1 / (2 * d.c2);
    if (from < vertex && vertex < to) stops.push_back(std::move(vertex));
  }
  stops.push_back(to);
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    const int left = i == 0 ? -1 : SignRightOf(d, stops[i]);
    if (left >= 0) continue;
    if (d(stops[i + 1]).Sign() > 0) {
      return CrossingIn(d, stops[i], stops[i + 1], tol);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string ToString(const LinearFunc& f) {
  std::string out;
  if (!f.slope.IsZero()) {
    if (f.slope == 1) {
      out = "t";
    } else if (f.slope == -1) {
      out = "-t";
    } else {
      out = f.slope.ToString() + " t";
    }
    if (f.intercept.Sign() > 0) out += " + " + f.intercept.ToString();
    if (f.intercept.Sign() < 0) out += " - " + (-f.intercept).ToString();
    return out;
  }
  return f.intercept.ToString();
}

std::optional<Rational> Intersection(const LinearFunc& f,
                                     const LinearFunc& g) {
  if (f.slope == g.slope) return std::nullopt;
  return (g.intercept - f.intercept) / (f.slope - g.slope);
}

Strategy::Strategy(std::vector<Rational> boundaries,
                   std::vector<LinearFunc> pieces)
    : boundaries_(std::move(boundaries)), pieces_(std::move(pieces)) {
  if (pieces_.size() != boundaries_.size() + 1) {
    throw std::invalid_argument("strategy needs exactly one more piece than "
                                "boundaries");
  }
  for (std::size_t i = 1; i < boundaries_.size(); ++i) {
    if (!(boundaries_[i - 1] < boundaries_[i])) {
      throw std::invalid_argument("strategy boundaries must be strictly "
                                  "increasing");
    }
  }
}

Strategy Strategy::Linear(const Rational& slope, const Rational& intercept) {
  return Strategy({}, {LinearFunc{slope, intercept}});
}

std::size_t Strategy::PieceAt(const Rational& t) const {
  return static_cast<std::size_t>(
      std::lower_bound(boundaries_.begin(), boundaries_.end(), t) -
      boundaries_.begin());
}

std::size_t Strategy::PieceRightOf(const Rational& t) const {
  return static_cast<std::size_t>(
      std::upper_bound(boundaries_.begin(), boundaries_.end(), t) -
      boundaries_.begin());
}

Strategy Refine(const Strategy& s, std::span<const Rational> points) {
  std::vector<Rational> cuts = s.boundaries();
  cuts.insert(cuts.end(), points.begin(), points.end());
  SortUnique(&cuts);
  std::vector<LinearFunc> pieces;
  pieces.reserve(cuts.size() + 1);
  for (std::size_t k = 0; k <= cuts.size(); ++k) {
    // Piece k covers (cuts[k-1], cuts[k]]; its right end identifies it.
    pieces.push_back(k < cuts.size()
                         ? s.pieces()[s.PieceAt(cuts[k])]
                         : s.pieces().back());
  }
  return Strategy(std::move(cuts), std::move(pieces));
}

Strategy Simplify(const Strategy& s) {
  std::vector<Rational> cuts;
  std::vector<LinearFunc> pieces{s.pieces().front()};
  for (std::size_t k = 0; k < s.boundaries().size(); ++k) {
    if (s.pieces()[k + 1] == pieces.back()) continue;
    cuts.push_back(s.boundaries()[k]);
    pieces.push_back(s.pieces()[k + 1]);
  }
  return Strategy(std::move(cuts), std::move(pieces));
}

Rational SupDistance(const Strategy& s1, const Strategy& s2, const Rational& lo,
                     const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("SupDistance needs lo < hi");
  std::vector<Rational> points{lo, hi};
  for (const Strategy* s : {&s1, &s2}) {
    for (const Rational& c : s->boundaries()) {
      if (lo < c && c < hi) points.push_back(c);
    }
  }
  SortUnique(&points);
  Rational best(0);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    best = Max(best, (s1.RightLimit(points[i]) - s2.RightLimit(points[i])).Abs());
    best = Max(best, (s1(points[i + 1]) - s2(points[i + 1])).Abs());
  }
  return best;
}

Strategy ZeroExtend(const Strategy& s, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("ZeroExtend needs lo < hi");
  std::vector<Rational> cuts{lo};
  std::vector<LinearFunc> pieces{LinearFunc{0, 0}};
  pieces.push_back(s.pieces()[s.PieceRightOf(lo)]);
  for (std::size_t k = 0; k < s.boundaries().size(); ++k) {
    const Rational& c = s.boundaries()[k];
    if (!(lo < c && c < hi)) continue;
    cuts.push_back(c);
    pieces.push_back(s.pieces()[k + 1]);
  }
  cuts.push_back(hi);
  pieces.push_back(LinearFunc{0, 0});
  return Strategy(std::move(cuts), std::move(pieces));
}

std::size_t InteriorBoundaryCount(const Strategy& s, const Rational& lo,
                                  const Rational& hi) {
  const Strategy simple = Simplify(s);
  return static_cast<std::size_t>(std::count_if(
      simple.boundaries().begin(), simple.boundaries().end(),
      [&](const Rational& c) { return lo < c && c < hi; }));
}

Strategy ClampActions(const Strategy& s, const Rational& lo,
                      const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("ClampActions needs lo <= hi");
  std::vector<Rational> cuts = s.boundaries();
  for (std::size_t k = 0; k < s.num_pieces(); ++k) {
    const LinearFunc& f = s.pieces()[k];
    for (const Rational& level : {lo, hi}) {
      auto x = Intersection(f, LinearFunc{0, level});
      if (!x) continue;
      const bool after_left = k == 0 || s.boundaries()[k - 1] < *x;
      const bool before_right = k + 1 == s.num_pieces() || *x < s.boundaries()[k];
      if (after_left && before_right) cuts.push_back(*x);
    }
  }
  return Rebuild(std::move(cuts), [&](const Rational& t) {
    const Rational v = s(t);
    if (v < lo) return LinearFunc{0, lo};
    if (v > hi) return LinearFunc{0, hi};
    return s.pieces()[s.PieceAt(t)];
  });
}

Rational DefaultRootTolerance() {
  return Rational(mpq_class(mpz_class(1), mpz_class(mpz_class(1) << 64)));
}

Strategy SelectEnvelope(std::span<const LinearFunc> candidates,
                        const ScoreFn& score, const Rational& lo,
                        const Rational& hi, const EnvelopeOptions& options) {
  if (candidates.empty()) {
    throw std::invalid_argument("SelectEnvelope needs at least one candidate");
  }
  if (!(lo < hi)) throw std::invalid_argument("SelectEnvelope needs lo < hi");
  if (!options.tie_rank.empty() &&
      options.tie_rank.size() != candidates.size()) {
    throw std::invalid_argument("tie_rank must match the candidate count");
  }
  if (options.score_degree > 2) {
    throw std::invalid_argument("score_degree must be at most 2");
  }
  const std::size_t n = candidates.size();
  auto rank = [&](std::size_t k) {
    return options.tie_rank.empty() ? 0 : options.tie_rank[k];
  };

  // Cells of the line arrangement restricted to [lo, hi].
  std::vector<Rational> cuts{lo, hi};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto x = Intersection(candidates[i], candidates[j]);
      if (x && lo < *x && *x < hi) cuts.push_back(std::move(*x));
    }
  }
  SortUnique(&cuts);

  if (options.score_degree >= 0) {
    const std::size_t samples = static_cast<std::size_t>(options.score_degree) + 1;
    std::vector<Rational> extra;
    std::vector<Quadratic> polys(n);
    std::vector<Rational> xs(samples), ys(samples);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Rational& left = cuts[c];
      const Rational& right = cuts[c + 1];
      // Short dyadics near evenly spaced interior points keep the exact
      // score evaluations cheap.
      const Rational width = right - left;
      for (std::size_t s = 0; s < samples; ++s) {
        const Rational at = left + width * Rational(static_cast<long>(s + 1),
                                                    static_cast<long>(samples + 1));
        xs[s] = DyadicBetween(at - width / 16, at + width / 16);
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t s = 0; s < samples; ++s) {
          ys[s] = score(xs[s], candidates[k](xs[s]));
        }
        polys[k] = Interpolate(xs, ys);
      }
      // Sweep left to right, following the leader and stopping wherever
      // another candidate overtakes it.
      Rational cur = left;
      for (std::size_t guard = 0; guard < 4 * n * n + 4; ++guard) {
        std::size_t leader = 0;
        for (std::size_t k = 1; k < n; ++k) {
          if (SignRightOf(polys[k] - polys[leader], cur) > 0) leader = k;
        }
        std::optional<Rational> next;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == leader) continue;
          const Quadratic d = polys[k] - polys[leader];
          if (d.IsZero() || SignRightOf(d, cur) >= 0) continue;
          auto r = FirstUpCrossing(d, cur, next ? *next : right,
                                   options.root_tolerance);
          if (r) next = std::move(r);
        }
        if (!next) break;
        extra.push_back(*next);
        cur = std::move(*next);
      }
    }
    cuts.insert(cuts.end(), extra.begin(), extra.end());
    SortUnique(&cuts);
  }

  std::vector<Rational> boundaries;
  std::vector<LinearFunc> pieces;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const Rational quarter = (cuts[c + 1] - cuts[c]) / 4;
    const Rational mid = DyadicBetween(cuts[c] + quarter, cuts[c + 1] - quarter);
    std::size_t best = 0;
    Rational best_score = score(mid, candidates[0](mid));
    Rational best_action = candidates[0](mid);
    for (std::size_t k = 1; k < n; ++k) {
      const Rational action = candidates[k](mid);
      const Rational value = score(mid, action);
      bool better = value > best_score;
      if (value == best_score) {
        better = rank(k) < rank(best) ||
                 (rank(k) == rank(best) && action < best_action);
      }
      if (better) {
        best = k;
        best_score = value;
        best_action = action;
      }
    }
    if (pieces.empty()) {
      pieces.push_back(candidates[best]);
    } else if (!(candidates[best] == pieces.back())) {
      boundaries.push_back(cuts[c]);
      pieces.push_back(candidates[best]);
    }
  }
  return Strategy(std::move(boundaries), std::move(pieces));
}

}  // namespace plbr
