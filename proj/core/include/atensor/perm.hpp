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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "atensor/error.hpp"

namespace atensor {

/// Largest supported degree. Packed encoding uses two decimal digits per
/// slot, so slot values must stay below 100.
inline constexpr std::size_t kMaxDegree = 99;

/// A permutation of the slots 1..n, stored as the sequence of images
/// (p[1], ..., p[n]).
///
/// Composition convention: multiply(p, q)[i] = p[q[i]], the right factor
/// acts first. Action on sequences selects: apply(p, l)[i] = l[p[i]].
/// Every other module relies on exactly these two conventions.
///
/// Ordering is lexicographic on the image sequence, which coincides with
/// numeric order of the packed decimal form for permutations of equal
/// degree.
class Perm {
 public:
  using value_type = std::uint8_t;

  /// Validates that `images` is a bijection of {1..n}.
  explicit Perm(std::vector<value_type> images);
  Perm(std::initializer_list<int> images);

  static Perm identity(std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }

  /// 1-based access: image of slot `i`.
  std::size_t operator()(std::size_t i) const { return images_[i - 1]; }

  std::span<const value_type> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b);

  std::string to_string() const;

 private:
  struct Unchecked {};
  Perm(Unchecked, std::vector<value_type> images) : images_(std::move(images)) {}

  std::vector<value_type> images_;

  friend Perm multiply(const Perm&, const Perm&);
  friend Perm inverse(const Perm&);
  friend Perm extend_right(const Perm&, std::size_t);
  friend Perm extend_left(const Perm&, std::size_t);
  friend Perm concat(const Perm&, const Perm&);
  friend class PermEnumerator;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

/// Packed decimal form. One digit per slot when degree <= 9, two digits
/// per slot otherwise. The degree is kept alongside so leading zeros of the
/// two-digit form stay unambiguous.
struct PackedPerm {
  mpz_class value;
  std::size_t degree = 0;

  friend bool operator==(const PackedPerm& a, const PackedPerm& b) {
    return a.degree == b.degree && a.value == b.value;
  }
};

/// p o q with q applied first.
Perm multiply(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

/// The x with multiply(x, p1) == p2.
Perm divide(const Perm& p1, const Perm& p2);

/// +1 for even permutations, -1 for odd ones.
int sign(const Perm& p);

/// result[i] = l[p[i]].
template <typename T>
std::vector<T> apply(const Perm& p, std::span<const T> l) {
  if (l.size() != p.degree()) {
    throw DegreeMismatch(p.degree(), l.size());
  }
  std::vector<T> out;
  out.reserve(l.size());
  for (std::size_t i = 1; i <= p.degree(); ++i) {
    out.push_back(l[p(i) - 1]);
  }
  return out;
}

template <typename T>
std::vector<T> apply(const Perm& p, const std::vector<T>& l) {
  return apply(p, std::span<const T>(l));
}

/// p acting on slots 1..n, slots n+1..n+d fixed.
Perm extend_right(const Perm& p, std::size_t d);

/// Slots 1..d fixed, p acting on d+1..d+n.
Perm extend_left(const Perm& p, std::size_t d);

/// Block-diagonal permutation: p1 on the first block, p2 shifted after it.
Perm concat(const Perm& p1, const Perm& p2);

PackedPerm pack(const Perm& p);
Perm unpack(const PackedPerm& x);

/// Visits every element of S_n in increasing lexicographic order.
class PermEnumerator {
 public:
  explicit PermEnumerator(std::size_t n);

  const Perm& current() const noexcept { return current_; }
  /// Advances; returns false once every permutation has been produced.
  bool next();

 private:
  Perm current_;
};

/// All of S_n in increasing lexicographic order.
std::vector<Perm> all_permutations(std::size_t n);

/// n! as an unsigned integer; throws for n > 20.
std::uint64_t factorial(std::size_t n);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace atensor

template <>
struct std::hash<atensor::Perm> {
  std::size_t operator()(const atensor::Perm& p) const noexcept {
    return atensor::PermHash{}(p);
  }
};
