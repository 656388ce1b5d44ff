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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "atensor/perm.hpp"

namespace atensor {

using Rational = mpq_class;
using Integer = mpz_class;

/// One (coefficient, permutation) pair of a group-algebra vector.
struct Term {
  Rational coeff;
  Perm perm;

  friend bool operator==(const Term& a, const Term& b) {
    return a.perm == b.perm && a.coeff == b.coeff;
  }
};

/// Unordered intermediate list of terms, before sort/compress.
using TermList = std::vector<Term>;

/// Exact sparse linear combination of elements of S_n.
///
/// Invariants: terms strictly descending by permutation (the global order
/// used for pivots), no duplicate permutation, every coefficient nonzero,
/// every permutation of degree n. The zero vector is the empty list.
class GroupVector {
 public:
  explicit GroupVector(std::size_t degree) : degree_(degree) {}

  /// c * e_p.
  static GroupVector unit(Perm p, Rational c = 1);

  /// Sorts and compresses an arbitrary term list.
  static GroupVector from_terms(std::size_t degree, TermList terms);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Coefficient of e_p, zero when p is absent.
  Rational coeff(const Perm& p) const;
  /// Index of p in terms(), if present.
  std::optional<std::size_t> find(const Perm& p) const;

  friend bool operator==(const GroupVector&, const GroupVector&) = default;

  GroupVector& operator+=(const GroupVector& v);
  GroupVector& operator-=(const GroupVector& v);

  std::string to_string() const;

 private:
  friend GroupVector add_scaled(const GroupVector&, const Rational&, const GroupVector&);

  std::size_t degree_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const GroupVector& v);

GroupVector add(const GroupVector& u, const GroupVector& v);
GroupVector scale(const Rational& c, const GroupVector& v);
GroupVector negate(const GroupVector& v);

/// u + c * v, computed in a single merge.
GroupVector add_scaled(const GroupVector& u, const Rational& c, const GroupVector& v);

inline GroupVector operator+(const GroupVector& u, const GroupVector& v) { return add(u, v); }
inline GroupVector operator-(const GroupVector& u, const GroupVector& v) {
  return add_scaled(u, -1, v);
}
inline GroupVector operator-(const GroupVector& v) { return negate(v); }
inline GroupVector operator*(const Rational& c, const GroupVector& v) { return scale(c, v); }

/// Stable sort into strictly-descending permutation order (duplicates stay
/// adjacent).
TermList sort(TermList terms);

/// Merges duplicate permutations and drops zero coefficients. The result is
/// sorted.
TermList compress(TermList terms);

/// Clears denominators, divides by the gcd of the numerators and makes the
/// leading coefficient positive. The zero vector passes through.
GroupVector renorm(const GroupVector& v);

/// sum_i c_i e_{p o p_i}
GroupVector translate_left(const Perm& p, const GroupVector& v);
/// sum_i c_i e_{p_i o p}
GroupVector translate_right(const GroupVector& v, const Perm& p);

/// Extends every permutation by d fixed slots on the right.
GroupVector lift_right(const GroupVector& v, std::size_t d);
/// Extends every permutation by d fixed slots on the left.
GroupVector lift_left(const GroupVector& v, std::size_t d);

/// First term under the global order. Throws on the zero vector.
const Term& leading(const GroupVector& v);

}  // namespace atensor
