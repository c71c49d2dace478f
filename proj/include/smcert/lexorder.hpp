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

#ifndef SMCERT_LEXORDER_HPP
#define SMCERT_LEXORDER_HPP

#include <optional>
#include <vector>

#include "smcert/rational.hpp"

namespace smcert {

// Vector with entries in [0, inf]. Certificates themselves are finite; the
// infinite entries appear on the right-hand side of comparisons, where a
// next-time value may diverge.
using ExtVec = std::vector<ExtRat>;

/// Nested vector with blocks of declared sizes m_1..m_d (each >= 1).
struct NestedVec {
  std::vector<ExtVec> blocks;

  std::vector<size_t> shape() const;
  size_t flat_size() const;
};

/// Position of a strict decrease: block j, in-block index k (both 1-based).
/// For flat vectors only the flat index is meaningful.
struct Level {
  size_t j = 0;
  size_t k = 0;

  friend bool operator==(const Level&, const Level&) = default;
};

// u_i >= v_i, treating infinity as the maximum element.
bool ext_geq(const ExtRat& u, const ExtRat& v);
// u >= 1 + v. False whenever v is infinite (so a strict decrease can never be
// witnessed against a divergent value), true when u is infinite and v finite.
bool ext_geq_plus_one(const ExtRat& u, const ExtRat& v);

// Strict order: smallest 1-based l with u_i >= v_i for all i < l and
// u_l >= 1 + v_l; absent when no such l exists. Throws on length mismatch.
std::optional<size_t> lex_gt(const ExtVec& u, const ExtVec& v);

// Non-strict order: strict or componentwise >=.
bool lex_geq(const ExtVec& u, const ExtVec& v);

// Comparisons restricted to the first i entries (1 <= i <= length).
std::optional<size_t> lex_gt_trunc(const ExtVec& u, const ExtVec& v, size_t i);
bool lex_geq_trunc(const ExtVec& u, const ExtVec& v, size_t i);

// True iff l (1-based) witnesses u > v: all earlier entries >= and a unit
// decrease at l. Unlike lex_gt, l need not be the smallest witness.
bool lex_strict_at(const ExtVec& u, const ExtVec& v, size_t l);

// Concatenates blocks in order. Rejects empty blocks and empty vectors.
ExtVec flatten(const NestedVec& nv);

// Nested orders, implemented through flatten; the returned level is in
// (block, in-block) coordinates.
std::optional<Level> nested_gt(const NestedVec& u, const NestedVec& v);
bool nested_geq(const NestedVec& u, const NestedVec& v);
// Truncation by block index j: comparison on blocks 1..j.
std::optional<Level> nested_gt_trunc(const NestedVec& u, const NestedVec& v, size_t j);
bool nested_geq_trunc(const NestedVec& u, const NestedVec& v, size_t j);

// Conversions between flat indices and (j, k) coordinates for a shape.
Level flat_to_level(const std::vector<size_t>& shape, size_t flat);
size_t level_to_flat(const std::vector<size_t>& shape, const Level& level);

}  // namespace smcert

#endif  // SMCERT_LEXORDER_HPP
