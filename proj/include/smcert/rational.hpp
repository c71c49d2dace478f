//   Copyright 2026 The smcert Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#ifndef SMCERT_RATIONAL_HPP
#define SMCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace smcert {

// All probabilities, coefficients and certificate values are exact rationals.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "num", "num/den" or a plain decimal like "-1.25" into an exact value.
Rational parse_rational(const std::string& text);

// Canonical form: "num" when den == 1, otherwise "num/den".
std::string to_string(const Rational& value);

/// Extended non-negative value: a rational or +infinity. Used by the
/// lexicographic orders and the oracle, where next-time values may diverge.
class ExtRat {
 public:
  ExtRat() : finite_(0) {}
  ExtRat(Rational v) : finite_(std::move(v)) {}  // NOLINT: implicit by design
  ExtRat(long v) : finite_(rat(v)) {}            // NOLINT

  static ExtRat infinity() {
    ExtRat e;
    e.is_inf_ = true;
    return e;
  }

  bool is_infinite() const { return is_inf_; }
  const Rational& value() const {
    if (is_inf_) throw std::logic_error("ExtRat: value() on infinity");
    return finite_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.is_inf_ || b.is_inf_) return a.is_inf_ == b.is_inf_;
    return a.finite_ == b.finite_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  // Infinity is the maximum element.
  friend bool operator<=(const ExtRat& a, const ExtRat& b) {
    if (b.is_inf_) return true;
    if (a.is_inf_) return false;
    return a.finite_ <= b.finite_;
  }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }
  friend bool operator<(const ExtRat& a, const ExtRat& b) { return !(b <= a); }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return !(a <= b); }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.is_inf_ || b.is_inf_) return infinity();
    return ExtRat(a.finite_ + b.finite_);
  }
  friend ExtRat operator*(const Rational& c, const ExtRat& a) {
    if (a.is_inf_) {
      if (c == 0) return ExtRat(Rational(0));  // 0 * inf = 0 (measure-theory convention)
    return infinity();
    }
    return ExtRat(c * a.finite_);
  }

  std::string str() const { return is_inf_ ? "inf" : to_string(finite_); }

 private:
  Rational finite_;
  bool is_inf_ = false;
};

}  // namespace smcert

#endif  // SMCERT_RATIONAL_HPP
