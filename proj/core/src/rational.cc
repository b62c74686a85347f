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

#include "plbr/rational.h"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace plbr {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class Pow10(unsigned long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

Rational ParseDecimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!AllDigits(exp_part) || exp_part.size() > 6) {
      throw std::invalid_argument("malformed exponent in '" +
                                  std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("malformed number: '" + std::string(text) +
                                  "'");
    }
    if ((!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      throw std::invalid_argument("malformed number: '" + std::string(text) +
                                  "'");
    }
    digits = std::string(whole) + std::string(frac);
    frac_digits = static_cast<long>(frac.size());
  } else {
    if (!AllDigits(s)) {
      throw std::invalid_argument("malformed number: '" + std::string(text) +
                                  "'");
    }
    digits = std::string(s);
  }
  mpq_class q(mpz_class(digits, 10));
  const long scale = exponent - frac_digits;
  if (scale > 0) q *= Pow10(static_cast<unsigned long>(scale));
  if (scale < 0) q /= Pow10(static_cast<unsigned long>(-scale));
  if (negative) q = -q;
  return Rational(std::move(q));
}

}  // namespace

Rational::Rational(long long v) {
  mpz_class z(std::to_string(v), 10);
  v_ = mpq_class(z);
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, 1);
  v_ /= den;
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.IsZero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = ParseInteger(text.substr(0, slash));
    mpz_class den = ParseInteger(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                  "'");
    }
    return Rational(mpq_class(num, den));
  }
  return ParseDecimal(text);
}

Rational Rational::FromDouble(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("non-finite double");
  return Rational(mpq_class(d));
}

std::string Rational::ToString() const {
  if (IsInteger()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::ToDecimal(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << ToDouble();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

bool ExactSqrt(const Rational& x, Rational* root) {
  if (x.Sign() < 0) return false;
  const mpz_class num = x.Numerator();
  const mpz_class den = x.Denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  *root = Rational(mpq_class(rn, rd));
  return true;
}

Rational ApproxSqrt(const Rational& x, int digits) {
  if (x.Sign() < 0) throw std::domain_error("square root of negative number");
  // floor(sqrt(x * 10^(2d))) / 10^d.
  const mpz_class scale = Pow10(static_cast<unsigned long>(digits));
  mpq_class scaled = x.mpq() * scale * scale;
  mpz_class floor_scaled = scaled.get_num() / scaled.get_den();
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), floor_scaled.get_mpz_t());
  return Rational(mpq_class(r, scale));
}

Rational SimplestBetween(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("SimplestBetween needs lo <= hi");
  if (lo.Sign() <= 0 && hi.Sign() >= 0) return Rational(0);
  if (hi.Sign() < 0) return -SimplestBetween(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.mpq().get_num_mpz_t(), lo.mpq().get_den_mpz_t());
  const Rational whole{mpq_class(fl)};
  if (whole == lo) return lo;
  if (whole + 1 <= hi) return whole + 1;
  // Both ends share the integer part; continue on the reciprocals.
  return whole + 1 / SimplestBetween(1 / (hi - whole), 1 / (lo - whole));
}

}  // namespace plbr
