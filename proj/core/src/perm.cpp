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

#include "atensor/perm.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace atensor {

namespace {

void check_degree(std::size_t n) {
  if (n == 0) {
    throw Error("permutation degree must be at least 1");
  }
  if (n > kMaxDegree) {
    throw Error("permutation degree " + std::to_string(n) +
                " exceeds the supported maximum " + std::to_string(kMaxDegree));
  }
}

}  // namespace

Perm::Perm(std::vector<value_type> images) : images_(std::move(images)) {
  check_degree(images_.size());
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v < 1 || v > images_.size() || seen[v]) {
      throw Error("not a permutation: " + to_string());
    }
    seen[v] = true;
  }
}

Perm::Perm(std::initializer_list<int> images)
    : Perm([&] {
        std::vector<value_type> v;
        v.reserve(images.size());
        for (int x : images) {
          if (x < 1 || x > static_cast<int>(kMaxDegree)) {
            throw Error("slot value out of range: " + std::to_string(x));
          }
          v.push_back(static_cast<value_type>(x));
        }
        return v;
      }()) {}

Perm Perm::identity(std::size_t n) {
  check_degree(n);
  std::vector<value_type> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<value_type>(i + 1);
  return Perm(Unchecked{}, std::move(v));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ' ';
    os << static_cast<int>(images_[i]);
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.to_string(); }

Perm multiply(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
  std::vector<Perm::value_type> v(p.degree());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = p.images_[q.images_[i] - 1];
  }
  return Perm(Perm::Unchecked{}, std::move(v));
}

Perm inverse(const Perm& p) {
  std::vector<Perm::value_type> v(p.degree());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[p.images_[i] - 1] = static_cast<Perm::value_type>(i + 1);
  }
  return Perm(Perm::Unchecked{}, std::move(v));
}

Perm divide(const Perm& p1, const Perm& p2) { return multiply(p2, inverse(p1)); }

int sign(const Perm& p) {
  // Parity from the cycle decomposition: a k-cycle is k-1 transpositions.
  const auto n = p.degree();
  std::vector<bool> visited(n, false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t j = start; !visited[j]; j = p(j + 1) - 1) {
      visited[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Perm extend_right(const Perm& p, std::size_t d) {
  check_degree(p.degree() + d);
  auto v = p.images_;
  for (std::size_t i = p.degree() + 1; i <= p.degree() + d; ++i) {
    v.push_back(static_cast<Perm::value_type>(i));
  }
  return Perm(Perm::Unchecked{}, std::move(v));
}

Perm extend_left(const Perm& p, std::size_t d) {
  check_degree(p.degree() + d);
  std::vector<Perm::value_type> v;
  v.reserve(p.degree() + d);
  for (std::size_t i = 1; i <= d; ++i) v.push_back(static_cast<Perm::value_type>(i));
  for (auto x : p.images_) v.push_back(static_cast<Perm::value_type>(x + d));
  return Perm(Perm::Unchecked{}, std::move(v));
}

Perm concat(const Perm& p1, const Perm& p2) {
  check_degree(p1.degree() + p2.degree());
  auto v = p1.images_;
  v.reserve(p1.degree() + p2.degree());
  for (auto x : p2.images_) v.push_back(static_cast<Perm::value_type>(x + p1.degree()));
  return Perm(Perm::Unchecked{}, std::move(v));
}

namespace {

std::size_t digits_per_slot(std::size_t degree) { return degree <= 9 ? 1 : 2; }

}  // namespace

PackedPerm pack(const Perm& p) {
  const auto width = digits_per_slot(p.degree());
  std::string digits;
  digits.reserve(width * p.degree());
  for (auto x : p.images()) {
    if (width == 2) digits.push_back(static_cast<char>('0' + x / 10));
    digits.push_back(static_cast<char>('0' + x % 10));
  }
  return PackedPerm{mpz_class(digits, 10), p.degree()};
}

Perm unpack(const PackedPerm& x) {
  check_degree(x.degree);
  if (x.value < 0) throw Error("packed permutation must be nonnegative");
  const auto width = digits_per_slot(x.degree);
  std::string digits = x.value.get_str(10);
  const std::size_t expected = width * x.degree;
  if (digits.size() > expected) {
    throw Error("packed value " + digits + " too long for degree " +
                std::to_string(x.degree));
  }
  digits.insert(0, expected - digits.size(), '0');
  std::vector<Perm::value_type> v;
  v.reserve(x.degree);
  for (std::size_t i = 0; i < expected; i += width) {
    int slot = digits[i] - '0';
    if (width == 2) slot = slot * 10 + (digits[i + 1] - '0');
    if (slot < 1) throw Error("packed value " + digits + " has a zero slot");
    v.push_back(static_cast<Perm::value_type>(slot));
  }
  return Perm(std::move(v));
}

PermEnumerator::PermEnumerator(std::size_t n) : current_(Perm::identity(n)) {}

bool PermEnumerator::next() {
  return std::next_permutation(current_.images_.begin(), current_.images_.end());
}

std::vector<Perm> all_permutations(std::size_t n) {
  std::vector<Perm> out;
  out.reserve(factorial(n));
  PermEnumerator e(n);
  do {
    out.push_back(e.current());
  } while (e.next());
  return out;
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw Error("factorial overflows 64 bits for n = " + std::to_string(n));
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace atensor
