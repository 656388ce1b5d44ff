// Copyright 2026 The atensor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atensor/group_vector.hpp"

namespace atensor {

class Registry;

/// A basic-tensor factor of a product, e.g. ri with arity 4.
struct Factor {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// One entry of a header's index list.
///
/// Free indices carry their name. A dummy pair k owns two entries, member 1
/// at internal number 2k-1 and member 2 at 2k; the user's original name is
/// kept for printing only and does not take part in equality.
struct IndexSlot {
  enum class Kind { kFree, kDummy };

  Kind kind = Kind::kFree;
  std::string name;          // free name, or original name of a dummy
  std::size_t pair = 0;      // dummy pair id, 1-based
  std::size_t member = 0;    // 1 or 2

  static IndexSlot free(std::string name) { return {Kind::kFree, std::move(name), 0, 0}; }
  static IndexSlot dummy(std::size_t pair, std::size_t member, std::string original) {
    return {Kind::kDummy, std::move(original), pair, member};
  }

  bool is_dummy() const noexcept { return kind == Kind::kDummy; }
  /// 2k-1 or 2k.
  std::size_t internal_number() const noexcept { return 2 * pair - 2 + member; }

  friend bool operator==(const IndexSlot& a, const IndexSlot& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::kFree) return a.name == b.name;
    return a.pair == b.pair && a.member == b.member;
  }
};

/// Factor names in canonical order plus the list of index names that the
/// permutations of a TensorExpr arrange over the slots.
///
/// A term with permutation p puts index `indices[p(s)]` into slot s, slots
/// being numbered across the factors left to right.
struct TensorHeader {
  std::vector<Factor> factors;
  std::vector<IndexSlot> indices;

  std::size_t degree() const noexcept { return indices.size(); }
  std::size_t dummy_pairs() const;
  std::size_t free_count() const { return indices.size() - 2 * dummy_pairs(); }
  /// Offset of factor f's slot block (0-based slot count before it).
  std::size_t offset(std::size_t f) const;

  friend bool operator==(const TensorHeader&, const TensorHeader&) = default;
};

/// A tensor expression: every term shares the header; the coefficient of
/// e_p is the coefficient of the arrangement p.
struct TensorExpr {
  TensorHeader header;
  GroupVector vec{0};

  bool is_zero() const noexcept { return vec.is_zero(); }

  friend bool operator==(const TensorExpr&, const TensorExpr&) = default;
};

TensorExpr operator+(const TensorExpr& a, const TensorExpr& b);
TensorExpr operator-(const TensorExpr& a, const TensorExpr& b);
TensorExpr operator*(const Rational& c, const TensorExpr& a);

/// Parsed but not yet normalized expression: a sum of coefficient-weighted
/// products of indexed names.
struct RawFactor {
  std::string name;
  std::vector<std::string> indices;

  friend bool operator==(const RawFactor&, const RawFactor&) = default;
};

struct RawMonomial {
  Rational coeff = 1;
  std::vector<RawFactor> factors;
};

struct RawExpr {
  std::vector<RawMonomial> monomials;

  static RawExpr scalar(Rational c);
  static RawExpr factor(RawFactor f);

  bool is_scalar() const;
  /// Sum of the coefficients of factor-free monomials.
  Rational scalar_value() const;
};

RawExpr operator+(RawExpr a, const RawExpr& b);
RawExpr operator-(RawExpr a, const RawExpr& b);
RawExpr operator*(const RawExpr& a, const RawExpr& b);
RawExpr operator*(const Rational& c, RawExpr a);

/// Sink for non-fatal diagnostics.
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string msg) { warnings.push_back(std::move(msg)); }
};

/// Splits one term (the arrangement of header.indices given by a
/// permutation) into its factors with their index names.
std::vector<RawFactor> split(const TensorHeader& header, const Perm& arrangement);

/// Inverse of split for a single term: recombines factors (in any order)
/// into a header and arrangement. Arities are taken from the index counts.
TensorExpr fuse(const std::vector<RawFactor>& parts);

/// Identifies dummy pairs, checks arities against the registry (fixing them
/// on first use) and re-expresses every monomial over one shared header.
///
/// Occurrences of an index name are paired left to right in canonical
/// factor order; a leftover odd occurrence stays free. More than two
/// occurrences produce a warning.
TensorExpr normalize_dummies(const RawExpr& raw, Registry& registry, Diagnostics& diag);

/// Default display names i, j, k, ... for a header built from factors only.
std::vector<std::string> default_index_names(std::size_t n);

/// Header over `factors` with default free names.
TensorHeader default_header(std::vector<Factor> factors);

}  // namespace atensor
