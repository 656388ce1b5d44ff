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

// Seeded generators for property tests.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "atensor/group_vector.hpp"

namespace atensor::testing {

using Rng = std::mt19937_64;

inline Perm random_perm(std::size_t n, Rng& rng) {
  std::vector<Perm::value_type> images(n);
  std::iota(images.begin(), images.end(), Perm::value_type{1});
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(std::move(images));
}

/// Up to `terms` random permutations with nonzero integer coefficients in
/// [-bound, bound].
inline GroupVector random_vector(std::size_t n, std::size_t terms, Rng& rng, int bound = 5) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  TermList list;
  for (std::size_t i = 0; i < terms; ++i) {
    int c = 0;
    while (c == 0) c = coeff(rng);
    list.push_back(Term{c, random_perm(n, rng)});
  }
  return GroupVector::from_terms(n, std::move(list));
}

inline Rational random_rational(Rng& rng, int bound = 7) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace atensor::testing
