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

#include "atensor/registry.hpp"

#include "atensor/relations.hpp"

namespace atensor {

PackedBasis pack(const KBasis& b) {
  PackedBasis out{b.degree(), {}};
  out.rows.reserve(b.dim());
  for (const auto& row : b.rows()) {
    std::vector<std::pair<Integer, PackedPerm>> packed;
    packed.reserve(row.size());
    for (const auto& t : row.terms()) packed.emplace_back(t.coeff.get_num(), pack(t.perm));
    out.rows.push_back(std::move(packed));
  }
  return out;
}

KBasis unpack(const PackedBasis& b) {
  KBasis out(b.degree);
  for (const auto& row : b.rows) {
    TermList terms;
    terms.reserve(row.size());
    for (const auto& [c, p] : row) terms.push_back(Term{Rational(c), unpack(p)});
    // Stored rows are already mutually reduced; inserting them in their
    // original order reproduces the same basis.
    out.insert(out.sieve(GroupVector::from_terms(b.degree, std::move(terms))));
  }
  return out;
}

bool Registry::declare(const std::string& name) {
  return tensors_.emplace(name, Entry{BasicTensor{name, std::nullopt}, std::nullopt}).second;
}

bool Registry::undeclare(const std::string& name) { return tensors_.erase(name) > 0; }

const BasicTensor& Registry::tensor(const std::string& name) const {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) throw EvalError(name + " is not a tensor");
  return it->second.tensor;
}

Registry::Entry& Registry::entry(const std::string& name) {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) throw EvalError(name + " is not a tensor");
  return it->second;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, e] : tensors_) out.push_back(name);
  return out;
}

void Registry::use(const std::string& name, std::size_t arity) {
  auto& e = entry(name);
  if (!e.tensor.arity) {
    if (arity == 0 || arity > kMaxDegree) {
      throw EvalError("invalid arity " + std::to_string(arity) + " for tensor " + name);
    }
    e.tensor.arity = arity;
    return;
  }
  if (*e.tensor.arity != arity) {
    throw EvalError("tensor " + name + " has " + std::to_string(*e.tensor.arity) +
                    " indices, used with " + std::to_string(arity));
  }
}

KBasis Registry::k0(const std::string& name) const {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) throw EvalError(name + " is not a tensor");
  const auto& e = it->second;
  if (!e.tensor.arity) throw EvalError("number of indices of " + name + " is not fixed yet");
  if (!e.k0) return KBasis(*e.tensor.arity);
  if (const auto* b = std::get_if<KBasis>(&*e.k0)) return *b;
  return unpack(std::get<PackedBasis>(*e.k0));
}

Registry::StoredBasis Registry::store(KBasis b) const {
  if (switches_.packed) return pack(b);
  return b;
}

void Registry::declare_symmetry(const TensorExpr& relation) {
  if (relation.header.factors.size() != 1) {
    throw EvalError("symmetry relation must involve a single basic tensor");
  }
  if (relation.header.dummy_pairs() != 0) {
    throw EvalError("symmetry relation must not contain dummy indices");
  }
  const auto& name = relation.header.factors.front().name;
  use(name, relation.header.factors.front().arity);
  if (relation.is_zero()) return;
  KBasis basis = k0(name);
  for (const auto& v : symmetry_closure(relation.vec)) basis.add(v);
  entry(name).k0 = store(std::move(basis));
}

void Registry::set_packed(bool on) {
  if (switches_.packed == on) return;
  switches_.packed = on;
  for (auto& [name, e] : tensors_) {
    if (e.k0) e.k0 = store(k0(name));
  }
}

}  // namespace atensor
