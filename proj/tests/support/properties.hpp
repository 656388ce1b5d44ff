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

// Randomized property checks shared by the unit suite and the acceptance
// binary. Each returns how many cases were checked and describes the first
// failure.

#include <cstddef>
#include <string>
#include <vector>

#include "atensor/kbasis.hpp"
#include "random.hpp"
#include "scenarios.hpp"

namespace atensor::testing {

struct PropertyResult {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0 && checked > 0; }
  void fail(std::string what) {
    if (failed++ == 0) first_failure = std::move(what);
  }
  void merge(const PropertyResult& other);
};

/// Idempotence, linearity and the n! - dim length bound of the sieve on
/// `count` random vectors.
PropertyResult check_sieve(const KBasis& basis, std::size_t count, Rng& rng);

/// Expressions with dummy indices whose simplified form must not depend on
/// the dummy names or the factor order.
const std::vector<std::string>& dummy_scenarios();

/// `count` random dummy renamings (with factor shuffles) of the scenarios.
PropertyResult check_dummy_renaming(Workbench& w, std::size_t count, Rng& rng);

/// Expressions of degree <= 5 checked against the name-level oracle.
const std::vector<std::string>& oracle_scenarios();

/// KD dimension equal to the oracle span and zero-membership agreement on
/// `vectors` random vectors for one expression.
PropertyResult check_against_oracle(Workbench& w, const std::string& expr,
                                    const std::map<std::string, std::vector<oracle::NameRelation>>& declared,
                                    std::size_t vectors, Rng& rng);

/// `sets` randomly generated tensors (degree 2..5, random multiterm
/// relations), each checked alone and contracted on its first two slots.
PropertyResult check_random_relation_sets(std::size_t sets, std::size_t vectors, Rng& rng);

}  // namespace atensor::testing
