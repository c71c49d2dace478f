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

#ifndef SMCERT_POLYNOMIAL_HPP
#define SMCERT_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "smcert/rational.hpp"

namespace smcert {

// Exponent vector over a fixed variable universe; entry i is the power of
// variable i. Length always equals the polynomial's variable count.
using Monomial = std::vector<uint32_t>;

/// Multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficients are stored; every stored monomial has
/// exactly var_count() entries.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(size_t var_count) : nvars_(var_count) {}

  static Polynomial constant(size_t var_count, Rational c);
  static Polynomial variable(size_t var_count, size_t index);

  size_t var_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 when absent).
  Rational constant_term() const;
  uint32_t total_degree() const;
  // Degree restricted to variables [0, first_n).
  uint32_t degree_in_first(size_t first_n) const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational eval(std::span<const Rational> point) const;

  // Replaces variable i by replacement[i]; every replacement polynomial must
  // share one variable universe, which becomes the result's universe.
  Polynomial substitute(std::span<const Polynomial> replacement) const;

  // Widens the variable universe to new_count, keeping existing indices.
  Polynomial extended(size_t new_count) const;

  std::string str(std::span<const std::string> var_names) const;

 private:
  size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Parses "+ - * ^" expressions with parentheses and integer/rational/decimal
// literals over the named variables, e.g. "2*x^2 - 1/3*y + 4".
Polynomial parse_polynomial(const std::string& text,
                            std::span<const std::string> var_names);

}  // namespace smcert

#endif  // SMCERT_POLYNOMIAL_HPP
