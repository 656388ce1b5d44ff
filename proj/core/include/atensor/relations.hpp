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

#include <vector>

#include "atensor/kbasis.hpp"
#include "atensor/registry.hpp"
#include "atensor/texpr.hpp"

namespace atensor {

// Index names are arranged over slots by selection: slot s holds
// indices[p(s)]. Consequently
//   - renaming index names by m maps the term p to m o p (left), and
//   - permuting slots by s maps the term p to p o s (right).
// Symmetries and identities hold for every assignment of names, so they are
// closed under left translation; dummy renamings hold at every arrangement,
// so they are closed under right translation.

/// {rho o g : rho in S_n}: the S-I vectors of a declared relation g.
std::vector<GroupVector> symmetry_closure(const GroupVector& g);

/// Relations of a product: every factor's K0 rows lifted onto its slot
/// block, and block exchanges of identical adjacent factors, each closed
/// under left translation. Throws EvalError for an undeclared factor.
std::vector<GroupVector> product_relations(const TensorHeader& header, const Registry& registry);

/// Dummy renaming relations e_{m o p} - e_p for every p in S_n, with m
/// ranging over the within-pair swaps and the exchanges of adjacent pairs.
std::vector<GroupVector> dummy_relations(const TensorHeader& header);

/// KM-basis. For a single factor this is its K0-basis.
KBasis product_basis(const TensorHeader& header, const Registry& registry);

/// KD-basis: KM completed by the dummy relations.
KBasis full_basis(const TensorHeader& header, const Registry& registry);

}  // namespace atensor
