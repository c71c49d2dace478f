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

#include "smcert/rational.hpp"

#include <cctype>

namespace smcert {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) {
      throw std::invalid_argument("bad integer literal: " + text);
    }
    r.canonicalize();
    return r;
  }

  // Decimal: rationalize exactly from the literal.
  bool neg = false;
  std::string digits = s;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits = digits.substr(1);
  }
  dot = digits.find('.');
  std::string intpart = digits.substr(0, dot);
  std::string fracpart = digits.substr(dot + 1);
  if (intpart.empty()) intpart = "0";
  for (char c : intpart + fracpart) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad decimal literal: " + text);
    }
  }
  mpz_class num(intpart + fracpart);
  mpz_class den(1);
  for (size_t i = 0; i < fracpart.size(); ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace smcert
