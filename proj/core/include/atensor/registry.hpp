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
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "atensor/kbasis.hpp"
#include "atensor/texpr.hpp"

namespace atensor {

/// Global display and storage switches.
struct Switches {
  bool dummypri = false;  // print dummies with internal numbering
  bool shortest = false;  // print the shortest form met during sieving
  bool packed = true;     // store K0-bases with packed permutations
};

/// K0-basis rows in packed form: integer coefficient and packed permutation
/// per term.
struct PackedBasis {
  std::size_t degree = 0;
  std::vector<std::vector<std::pair<Integer, PackedPerm>>> rows;
};

PackedBasis pack(const KBasis& b);
KBasis unpack(const PackedBasis& b);

/// A declared basic tensor. The arity is fixed by its first use.
struct BasicTensor {
  std::string name;
  std::optional<std::size_t> arity;
};

/// Declared basic tensors and their K0-bases.
///
/// Only K0-bases are stored. Product (KM) and dummy (KD) bases are rebuilt
/// for every simplification.
class Registry {
 public:
  /// False (and no change) when the name is already a tensor.
  bool declare(const std::string& name);
  /// False when the name is not a tensor. Drops the K0-basis.
  bool undeclare(const std::string& name);

  bool is_tensor(const std::string& name) const { return tensors_.contains(name); }
  const BasicTensor& tensor(const std::string& name) const;
  std::vector<std::string> names() const;

  /// Fixes the arity on first use; throws EvalError on a later mismatch or
  /// for an undeclared name.
  void use(const std::string& name, std::size_t arity);

  /// K0-basis of a tensor with fixed arity (empty basis if no relations).
  KBasis k0(const std::string& name) const;

  /// Adds the S-I relations generated by `relation` to the tensor's K0-basis.
  ///
  /// The relation must be a single-factor expression without dummy indices.
  /// It is closed under every renaming of its index names (left translation
  /// by all of S_n) before the basis is extended.
  void declare_symmetry(const TensorExpr& relation);

  const Switches& switches() const noexcept { return switches_; }
  void set_dummypri(bool on) { switches_.dummypri = on; }
  void set_shortest(bool on) { switches_.shortest = on; }
  /// Converts every stored basis to the requested storage form.
  void set_packed(bool on);

 private:
  using StoredBasis = std::variant<KBasis, PackedBasis>;

  struct Entry {
    BasicTensor tensor;
    std::optional<StoredBasis> k0;
  };

  StoredBasis store(KBasis b) const;
  Entry& entry(const std::string& name);

  std::map<std::string, Entry> tensors_;
  Switches switches_;
};

}  // namespace atensor
