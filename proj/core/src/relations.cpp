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

#include "atensor/relations.hpp"

#include <string>

namespace atensor {

namespace {

/// Exchanges the slot blocks [a, a+r) and [a+r, a+2r) (0-based a).
Perm block_swap(std::size_t n, std::size_t a, std::size_t r) {
  std::vector<Perm::value_type> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Perm::value_type>(i + 1);
  for (std::size_t i = 0; i < r; ++i) std::swap(v[a + i], v[a + r + i]);
  return Perm(std::move(v));
}

/// Transposes header positions x and y (1-based).
Perm transposition(std::size_t n, std::size_t x, std::size_t y) {
  std::vector<Perm::value_type> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Perm::value_type>(i + 1);
  std::swap(v[x - 1], v[y - 1]);
  return Perm(std::move(v));
}

GroupVector difference_from_identity(const Perm& m) {
  return GroupVector::unit(m) - GroupVector::unit(Perm::identity(m.degree()));
}

void append_left_closure(const GroupVector& g, const std::vector<Perm>& group,
                         std::vector<GroupVector>& out) {
  for (const auto& rho : group) out.push_back(translate_left(rho, g));
}

}  // namespace

std::vector<GroupVector> symmetry_closure(const GroupVector& g) {
  std::vector<GroupVector> out;
  if (g.is_zero()) return out;
  append_left_closure(g, all_permutations(g.degree()), out);
  return out;
}

std::vector<GroupVector> product_relations(const TensorHeader& header, const Registry& registry) {
  const std::size_t n = header.degree();
  std::vector<GroupVector> out;
  if (n == 0) return out;
  const auto group = all_permutations(n);

  for (std::size_t f = 0; f < header.factors.size(); ++f) {
    const auto& factor = header.factors[f];
    if (!registry.is_tensor(factor.name)) throw EvalError(factor.name + " is not a tensor");
    const KBasis k0 = registry.k0(factor.name);
    if (k0.degree() != factor.arity) {
      throw EvalError("tensor " + factor.name + " has " + std::to_string(k0.degree()) +
                      " indices, header expects " + std::to_string(factor.arity));
    }
    const std::size_t before = header.offset(f);
    const std::size_t after = n - before - factor.arity;
    for (const auto& row : k0.rows()) {
      append_left_closure(lift_right(lift_left(row, before), after), group, out);
    }
  }

  for (std::size_t f = 0; f + 1 < header.factors.size(); ++f) {
    const auto& a = header.factors[f];
    const auto& b = header.factors[f + 1];
    if (a.name != b.name) continue;
    const Perm swap = block_swap(n, header.offset(f), a.arity);
    append_left_closure(difference_from_identity(swap), group, out);
  }
  return out;
}

std::vector<GroupVector> dummy_relations(const TensorHeader& header) {
  const std::size_t n = header.degree();
  const std::size_t pairs = header.dummy_pairs();
  std::vector<GroupVector> out;
  if (pairs == 0) return out;

  const std::size_t base = header.free_count();
  std::vector<Perm> generators;
  for (std::size_t k = 1; k <= pairs; ++k) {
    generators.push_back(transposition(n, base + 2 * k - 1, base + 2 * k));
  }
  for (std::size_t k = 1; k < pairs; ++k) {
    generators.push_back(multiply(transposition(n, base + 2 * k - 1, base + 2 * k + 1),
                                  transposition(n, base + 2 * k, base + 2 * k + 2)));
  }

  const auto group = all_permutations(n);
  out.reserve(generators.size() * group.size());
  for (const auto& m : generators) {
    const GroupVector g = difference_from_identity(m);
    for (const auto& p : group) out.push_back(translate_right(g, p));
  }
  return out;
}

KBasis product_basis(const TensorHeader& header, const Registry& registry) {
  if (header.factors.size() == 1) {
    KBasis k0 = registry.k0(header.factors.front().name);
    if (k0.degree() != header.degree()) {
      throw EvalError("tensor " + header.factors.front().name + " has " +
                      std::to_string(k0.degree()) + " indices, header expects " +
                      std::to_string(header.degree()));
    }
    return k0;
  }
  const auto relations = product_relations(header, registry);
  return build(relations, KBasis(header.degree()));
}

KBasis full_basis(const TensorHeader& header, const Registry& registry) {
  KBasis km = product_basis(header, registry);
  const auto relations = dummy_relations(header);
  return build(relations, std::move(km));
}

}  // namespace atensor
