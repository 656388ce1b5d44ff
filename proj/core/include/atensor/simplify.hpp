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

#include "atensor/registry.hpp"
#include "atensor/texpr.hpp"

namespace atensor {

struct SimplifyResult {
  TensorExpr canonical;
  /// Fewest-term vector among the input, every intermediate of the sieve
  /// and the canonical form; earliest wins ties. Not canonical in general.
  TensorExpr shortest;
  /// Dimension of the KD-basis used.
  std::size_t basis_dim = 0;
};

/// Builds KM and KD for the expression's header and sieves through KD.
SimplifyResult simplify_full(const TensorExpr& expr, const Registry& registry);

/// Canonical representative of expr modulo its S-I-D relations.
TensorExpr simplify(const TensorExpr& expr, const Registry& registry);

/// Whether a - b reduces to zero. Throws EvalError when the headers differ.
bool equal(const TensorExpr& a, const TensorExpr& b, const Registry& registry);

}  // namespace atensor
