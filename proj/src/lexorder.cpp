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

#include "smcert/lexorder.hpp"

#include <stdexcept>

namespace smcert {

std::vector<size_t> NestedVec::shape() const {
  std::vector<size_t> s;
  s.reserve(blocks.size());
  for (const auto& b : blocks) s.push_back(b.size());
  return s;
}

size_t NestedVec::flat_size() const {
  size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

bool ext_geq(const ExtRat& u, const ExtRat& v) { return u >= v; }

bool ext_geq_plus_one(const ExtRat& u, const ExtRat& v) {
  if (v.is_infinite()) return false;
  if (u.is_infinite()) return true;
  return u.value() >= 1 + v.value();
}

namespace {
void require_same_length(const ExtVec& u, const ExtVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("lexorder: length mismatch");
  if (u.empty()) throw std::invalid_argument("lexorder: empty vector");
}
}  // namespace

std::optional<size_t> lex_gt(const ExtVec& u, const ExtVec& v) {
  require_same_length(u, v);
  return lex_gt_trunc(u, v, u.size());
}

bool lex_geq(const ExtVec& u, const ExtVec& v) {
  require_same_length(u, v);
  return lex_geq_trunc(u, v, u.size());
}

std::optional<size_t> lex_gt_trunc(const ExtVec& u, const ExtVec& v, size_t i) {
  require_same_length(u, v);
  if (i < 1 || i > u.size()) throw std::invalid_argument("lexorder: bad truncation");
  for (size_t l = 0; l < i; ++l) {
    if (ext_geq_plus_one(u[l], v[l])) return l + 1;
    if (!ext_geq(u[l], v[l])) return std::nullopt;
  }
  return std::nullopt;
}

bool lex_geq_trunc(const ExtVec& u, const ExtVec& v, size_t i) {
  require_same_length(u, v);
  if (i < 1 || i > u.size()) throw std::invalid_argument("lexorder: bad truncation");
  if (lex_gt_trunc(u, v, i).has_value()) return true;
  for (size_t l = 0; l < i; ++l) {
    if (!ext_geq(u[l], v[l])) return false;
  }
  return true;
}

bool lex_strict_at(const ExtVec& u, const ExtVec& v, size_t l) {
  require_same_length(u, v);
  if (l < 1 || l > u.size()) throw std::invalid_argument("lexorder: bad level");
  for (size_t i = 0; i + 1 < l; ++i) {
    if (!ext_geq(u[i], v[i])) return false;
  }
  return ext_geq_plus_one(u[l - 1], v[l - 1]);
}

ExtVec flatten(const NestedVec& nv) {
  if (nv.blocks.empty()) throw std::invalid_argument("flatten: no blocks");
  ExtVec out;
  out.reserve(nv.flat_size());
  for (const auto& b : nv.blocks) {
    if (b.empty()) throw std::invalid_argument("flatten: empty block");
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

namespace {
void require_same_shape(const NestedVec& u, const NestedVec& v) {
  if (u.shape() != v.shape()) throw std::invalid_argument("lexorder: shape mismatch");
}
}  // namespace

std::optional<Level> nested_gt(const NestedVec& u, const NestedVec& v) {
  require_same_shape(u, v);
  return nested_gt_trunc(u, v, u.blocks.size());
}

bool nested_geq(const NestedVec& u, const NestedVec& v) {
  require_same_shape(u, v);
  return nested_geq_trunc(u, v, u.blocks.size());
}

std::optional<Level> nested_gt_trunc(const NestedVec& u, const NestedVec& v,
                                     size_t j) {
  require_same_shape(u, v);
  if (j < 1 || j > u.blocks.size()) {
    throw std::invalid_argument("lexorder: bad block truncation");
  }
  auto shape = u.shape();
  size_t flat_prefix = 0;
  for (size_t b = 0; b < j; ++b) flat_prefix += shape[b];
  auto fl = lex_gt_trunc(flatten(u), flatten(v), flat_prefix);
  if (!fl) return std::nullopt;
  return flat_to_level(shape, *fl);
}

bool nested_geq_trunc(const NestedVec& u, const NestedVec& v, size_t j) {
  require_same_shape(u, v);
  if (j < 1 || j > u.blocks.size()) {
    throw std::invalid_argument("lexorder: bad block truncation");
  }
  auto shape = u.shape();
  size_t flat_prefix = 0;
  for (size_t b = 0; b < j; ++b) flat_prefix += shape[b];
  return lex_geq_trunc(flatten(u), flatten(v), flat_prefix);
}

Level flat_to_level(const std::vector<size_t>& shape, size_t flat) {
  size_t remaining = flat;
  for (size_t j = 0; j < shape.size(); ++j) {
    if (remaining <= shape[j]) return Level{j + 1, remaining};
    remaining -= shape[j];
  }
  throw std::invalid_argument("flat index out of shape");
}

size_t level_to_flat(const std::vector<size_t>& shape, const Level& level) {
  if (level.j < 1 || level.j > shape.size() || level.k < 1 ||
      level.k > shape[level.j - 1]) {
    throw std::invalid_argument("level out of shape");
  }
  size_t flat = level.k;
  for (size_t j = 0; j + 1 < level.j; ++j) flat += shape[j];
  return flat;
}

}  // namespace smcert
