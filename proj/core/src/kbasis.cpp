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

#include "atensor/kbasis.hpp"

#include <string>

namespace atensor {

GroupVector reduce(const GroupVector& v, const GroupVector& row) {
  const Term& pivot = leading(row);
  auto at = v.find(pivot.perm);
  if (!at) return v;
  Rational factor = v.terms()[*at].coeff / pivot.coeff;
  return add_scaled(v, -factor, row);
}

const GroupVector* KBasis::row_for(const Perm& p) const {
  auto it = pivots_.find(p);
  return it == pivots_.end() ? nullptr : &rows_[it->second];
}

GroupVector KBasis::sieve(const GroupVector& v, const SieveObserver& observer) const {
  if (v.degree() != degree_) throw DegreeMismatch(degree_, v.degree());
  GroupVector cur = v;
  if (observer) observer(cur);
  // Reducing by a row only introduces terms below its pivot, so one
  // descending sweep suffices for a fully reduced basis. The outer loop
  // re-scans until no pivot is left, which keeps the result independent of
  // that property.
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t i = 0;
    while (i < cur.size()) {
      const GroupVector* row = row_for(cur.terms()[i].perm);
      if (row == nullptr) {
        ++i;
        continue;
      }
      cur = reduce(cur, *row);
      changed = true;
      if (observer) observer(cur);
    }
    if (changed) {
      changed = false;
      for (const auto& t : cur.terms()) {
        if (is_pivot(t.perm)) {
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

void KBasis::insert(const GroupVector& sieved) {
  if (sieved.degree() != degree_) throw DegreeMismatch(degree_, sieved.degree());
  if (sieved.is_zero()) throw Error("cannot insert the zero vector into a K-basis");
  GroupVector row = renorm(sieved);
  const Perm& pivot = leading(row).perm;
  if (is_pivot(pivot)) {
    throw Error("pivot " + pivot.to_string() + " already present; vector was not sieved");
  }
  for (auto& old : rows_) {
    if (old.find(pivot)) old = renorm(reduce(old, row));
  }
  pivots_.emplace(pivot, rows_.size());
  rows_.push_back(std::move(row));
}

bool KBasis::add(const GroupVector& v) {
  GroupVector rest = sieve(v);
  if (rest.is_zero()) return false;
  insert(rest);
  return true;
}

GroupVector sieve_vector(const GroupVector& v, const KBasis& b) { return b.sieve(v); }

KBasis insert(const GroupVector& v, KBasis b) {
  b.insert(v);
  return b;
}

KBasis build(std::span<const GroupVector> relations, KBasis initial) {
  for (const auto& r : relations) {
    if (r.degree() != initial.degree()) throw DegreeMismatch(initial.degree(), r.degree());
    initial.add(r);
  }
  return initial;
}

}  // namespace atensor
