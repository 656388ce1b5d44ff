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

// Brute-force reference for the elimination engine.
//
// Vectors are expanded densely over all n! permutations (indexed by
// lexicographic rank) and reduced by textbook Gaussian elimination with
// pivots taken in ascending rank order, the opposite of the engine's order.
// Nothing here calls into KBasis, translate_* or lift_*; relation vectors
// for tensor scenarios are generated by substituting index names directly.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "atensor/group_vector.hpp"
#include "atensor/texpr.hpp"

namespace atensor::oracle {

inline constexpr std::size_t kMaxOracleDegree = 7;

/// Lexicographic rank of a permutation image sequence (values 1..n).
std::size_t rank_of(const std::vector<std::size_t>& images);
std::vector<std::size_t> unrank(std::size_t rank, std::size_t n);

using Dense = std::vector<Rational>;

Dense to_dense(const GroupVector& v);
GroupVector from_dense(const Dense& d, std::size_t n);

/// Row echelon form over Q^{n!}.
class DenseSpan {
 public:
  explicit DenseSpan(std::size_t n);

  std::size_t degree() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns whether the span grew.
  bool add(Dense v);
  Dense residual(Dense v) const;

 private:
  std::size_t n_;
  std::size_t width_;
  std::map<std::size_t, Dense> rows_;  // pivot column -> row with 1 at pivot
};

std::size_t span_dim(std::size_t n, const std::vector<GroupVector>& relations);
bool member(const GroupVector& v, const std::vector<GroupVector>& relations);
GroupVector residual(const GroupVector& v, const std::vector<GroupVector>& relations);

/// A declared relation written over variable names, e.g. a2(i,j)+a2(j,i):
/// one (coefficient, index names) pair per term.
struct NameRelation {
  std::string tensor;
  std::vector<std::pair<Rational, std::vector<std::string>>> terms;
};

/// Parses `a2(i,j)+a2(j,i)`-style text (integer coefficients, one tensor).
NameRelation name_relation(std::string_view text);

/// All S-I-D relations of an expression with the given header, built by
/// substituting names into the declared relations, swapping identical
/// factors and renaming dummy pairs, over every arrangement of the names.
std::vector<Dense> name_level_relations(
    const TensorHeader& header, const std::map<std::string, std::vector<NameRelation>>& declared);

}  // namespace atensor::oracle
