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

#include "smcert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace smcert {

Polynomial Polynomial::constant(size_t var_count, Rational c) {
  Polynomial p(var_count);
  p.add_term(Monomial(var_count, 0), c);
  return p;
}

Polynomial Polynomial::variable(size_t var_count, size_t index) {
  Polynomial p(var_count);
  Monomial m(var_count, 0);
  m.at(index) = 1;
  p.add_term(m, rat(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          terms_.begin()->first == Monomial(nvars_, 0));
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

uint32_t Polynomial::total_degree() const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
  }
  return d;
}

uint32_t Polynomial::degree_in_first(size_t first_n) const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    uint32_t sum = 0;
    for (size_t i = 0; i < first_n && i < m.size(); ++i) sum += m[i];
    d = std::max(d, sum);
  }
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.nvars_);
      for (size_t i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial r(a.nvars_);
  if (c == 0) return r;
  for (const auto& [m, coef] : a.terms_) r.terms_.emplace(m, c * coef);
  return r;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("eval arity mismatch");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < nvars_; ++i) {
      for (uint32_t k = 0; k < m[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> replacement) const {
  if (replacement.size() != nvars_) {
    throw std::invalid_argument("substitute arity mismatch");
  }
  size_t out_vars = nvars_;
  if (!replacement.empty()) out_vars = replacement[0].var_count();
  Polynomial total(out_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(out_vars, c);
    for (size_t i = 0; i < nvars_; ++i) {
      for (uint32_t k = 0; k < m[i]; ++k) term = term * replacement[i];
    }
    total = total + term;
  }
  return total;
}

Polynomial Polynomial::extended(size_t new_count) const {
  if (new_count < nvars_) throw std::invalid_argument("extended shrinks universe");
  Polynomial r(new_count);
  for (const auto& [m, c] : terms_) {
    Monomial wide(new_count, 0);
    std::copy(m.begin(), m.end(), wide.begin());
    r.terms_.emplace(std::move(wide), c);
  }
  return r;
}

std::string Polynomial::str(std::span<const std::string> var_names) const {
  if (terms_.empty()) return "0";
  // Highest monomial first; the map is ordered, so this is deterministic.
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = std::any_of(m.begin(), m.end(), [](uint32_t e) { return e > 0; });
    if (!has_vars || abs != 1) {
      out << to_string(abs);
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << (i < var_names.size() ? var_names[i] : "v" + std::to_string(i));
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw std::invalid_argument("trailing input in polynomial: " + text_);
    }
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(uc(text_[pos_]))) ++pos_;
      if (start == pos_) throw std::invalid_argument("missing exponent in: " + text_);
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      Polynomial acc = Polynomial::constant(base.var_count(), rat(1));
      for (unsigned long k = 0; k < e; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') throw std::invalid_argument("missing ')' in: " + text_);
      ++pos_;
      return p;
    }
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    if (std::isdigit(uc(peek()))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(uc(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '/')) {
        ++pos_;
      }
      return Polynomial::constant(names_.size(),
                                  parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(uc(peek())) || peek() == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(uc(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return Polynomial::variable(names_.size(), i);
      }
      throw std::invalid_argument("unknown variable '" + name + "' in: " + text_);
    }
    throw std::invalid_argument("unexpected character in polynomial: " + text_);
  }

  static unsigned char uc(char c) { return static_cast<unsigned char>(c); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(uc(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  std::span<const std::string> names_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            std::span<const std::string> var_names) {
  return PolyParser(text, var_names).parse();
}

}  // namespace smcert
