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

#include "atensor/simplify.hpp"

#include "atensor/relations.hpp"

namespace atensor {

SimplifyResult simplify_full(const TensorExpr& expr, const Registry& registry) {
  if (expr.is_zero()) return SimplifyResult{expr, expr, 0};
  const KBasis kd = full_basis(expr.header, registry);

  GroupVector shortest = expr.vec;
  auto track = [&shortest](const GroupVector& v) {
    if (v.size() < shortest.size()) shortest = v;
  };
  GroupVector canonical = kd.sieve(expr.vec, track);

  return SimplifyResult{TensorExpr{expr.header, std::move(canonical)},
                        TensorExpr{expr.header, std::move(shortest)}, kd.dim()};
}

TensorExpr simplify(const TensorExpr& expr, const Registry& registry) {
  return simplify_full(expr, registry).canonical;
}

bool equal(const TensorExpr& a, const TensorExpr& b, const Registry& registry) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero()) return simplify(b, registry).is_zero();
  if (b.is_zero()) return simplify(a, registry).is_zero();
  return simplify(a - b, registry).is_zero();
}

}  // namespace atensor
