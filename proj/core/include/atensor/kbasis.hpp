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
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "atensor/group_vector.hpp"

namespace atensor {

/// Triangle basis of a relation subspace K of the group algebra.
///
/// Every row is renormed to coprime integers and its leading permutation is
/// its pivot. Rows are kept fully reduced: no row carries a nonzero
/// coefficient on another row's pivot. Because a freshly inserted vector has
/// already been sieved, its pivot is smaller than the pivot of every row it
/// touches, so reducing old rows never disturbs their pivots.
class KBasis {
 public:
  /// Invoked with every intermediate vector produced while sieving.
  using SieveObserver = std::function<void(const GroupVector&)>;

  explicit KBasis(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<GroupVector>& rows() const noexcept { return rows_; }

  bool is_pivot(const Perm& p) const { return pivots_.contains(p); }
  /// Row whose pivot is p, or nullptr.
  const GroupVector* row_for(const Perm& p) const;

  /// Eliminates every pivot from v. The result is the canonical
  /// representative of v modulo the span of the rows.
  GroupVector sieve(const GroupVector& v, const SieveObserver& observer = {}) const;

  /// Adds an already-sieved nonzero vector and rearranges the existing rows.
  /// Throws if its pivot collides with an existing row.
  void insert(const GroupVector& sieved);

  /// Sieves v and inserts the remainder when nonzero. Returns whether the
  /// basis grew.
  bool add(const GroupVector& v);

 private:
  std::size_t degree_;
  std::vector<GroupVector> rows_;
  std::unordered_map<Perm, std::size_t, PermHash> pivots_;
};

/// v - (v[pivot] / row[pivot]) * row, where pivot is the leading permutation
/// of row. Returns v unchanged when it has no term on the pivot.
GroupVector reduce(const GroupVector& v, const GroupVector& row);

GroupVector sieve_vector(const GroupVector& v, const KBasis& b);

KBasis insert(const GroupVector& v, KBasis b);

/// Extends `initial` by every relation in turn (sieve, insert when nonzero).
KBasis build(std::span<const GroupVector> relations, KBasis initial);

inline std::size_t dim(const KBasis& b) { return b.dim(); }

}  // namespace atensor
