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

#ifndef PLBR_RATIONAL_H_
#define PLBR_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace plbr {

// Exact arbitrary-precision rational, always kept in canonical form
// (gcd(num, den) = 1, den > 0). Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(runtime/explicit)
  Rational(long v) : v_(v) {}  // NOLINT(runtime/explicit)
  Rational(long long v);  // NOLINT(runtime/explicit)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(mpq_class&& v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "p/q", and exact decimals such as "-0.125" or "1.5e-3".
  // Throws std::invalid_argument on malformed input or a zero denominator.
  static Rational Parse(std::string_view text);

  // Exact value of a finite double (every double is a dyadic rational).
  static Rational FromDouble(double d);

  const mpq_class& mpq() const { return v_; }
  mpz_class Numerator() const { return v_.get_num(); }
  mpz_class Denominator() const { return v_.get_den(); }

  double ToDouble() const { return v_.get_d(); }
  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;
  // Decimal rendering rounded to `digits` significant digits.
  std::string ToDecimal(int digits = 12) const;

  int Sign() const { return sgn(v_); }
  bool IsZero() const { return sgn(v_) == 0; }
  bool IsInteger() const { return v_.get_den() == 1; }
  Rational Abs() const { return Rational(mpq_class(abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline Rational Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
// mm(lo, hi, x) = min(hi, max(lo, x)).
inline Rational Clamp(const Rational& lo, const Rational& hi,
                      const Rational& x) {
  return Min(hi, Max(lo, x));
}
inline Rational Midpoint(const Rational& a, const Rational& b) {
  return (a + b) / 2;
}

// Exact square root when x is the square of a rational; false otherwise.
bool ExactSqrt(const Rational& x, Rational* root);

// Rational r with |r - sqrt(x)| < 10^-digits (x >= 0), truncated toward zero.
Rational ApproxSqrt(const Rational& x, int digits);

// The rational with the smallest denominator in [lo, hi] (lo <= hi).
Rational SimplestBetween(const Rational& lo, const Rational& hi);

}  // namespace plbr

#endif  // PLBR_RATIONAL_H_
