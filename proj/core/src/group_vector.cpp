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

#include "atensor/group_vector.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace atensor {

namespace {

bool descending(const Term& a, const Term& b) { return a.perm > b.perm; }

void require_same_degree(const GroupVector& u, const GroupVector& v) {
  if (u.degree() != v.degree()) throw DegreeMismatch(u.degree(), v.degree());
}

}  // namespace

GroupVector GroupVector::unit(Perm p, Rational c) {
  GroupVector v(p.degree());
  if (c != 0) v.terms_.push_back(Term{std::move(c), std::move(p)});
  return v;
}

GroupVector GroupVector::from_terms(std::size_t degree, TermList terms) {
  for (const auto& t : terms) {
    if (t.perm.degree() != degree) throw DegreeMismatch(degree, t.perm.degree());
  }
  GroupVector v(degree);
  v.terms_ = compress(std::move(terms));
  return v;
}

std::optional<std::size_t> GroupVector::find(const Perm& p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const Term& t, const Perm& x) { return t.perm > x; });
  if (it != terms_.end() && it->perm == p) {
    return static_cast<std::size_t>(it - terms_.begin());
  }
  return std::nullopt;
}

Rational GroupVector::coeff(const Perm& p) const {
  auto i = find(p);
  return i ? terms_[*i].coeff : Rational(0);
}

GroupVector& GroupVector::operator+=(const GroupVector& v) {
  *this = add_scaled(*this, 1, v);
  return *this;
}

GroupVector& GroupVector::operator-=(const GroupVector& v) {
  *this = add_scaled(*this, -1, v);
  return *this;
}

std::string GroupVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].coeff.get_str() << "*e" << terms_[i].perm;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupVector& v) { return os << v.to_string(); }

GroupVector add_scaled(const GroupVector& u, const Rational& c, const GroupVector& v) {
  require_same_degree(u, v);
  if (c == 0 || v.is_zero()) return u;
  GroupVector out(u.degree());
  auto& dst = out.terms_;
  dst.reserve(u.terms_.size() + v.terms_.size());
  auto a = u.terms_.begin();
  auto b = v.terms_.begin();
  while (a != u.terms_.end() || b != v.terms_.end()) {
    if (b == v.terms_.end() || (a != u.terms_.end() && a->perm > b->perm)) {
      dst.push_back(*a++);
    } else if (a == u.terms_.end() || b->perm > a->perm) {
      dst.push_back(Term{c * b->coeff, b->perm});
      ++b;
    } else {
      Rational sum = a->coeff + c * b->coeff;
      if (sum != 0) dst.push_back(Term{std::move(sum), a->perm});
      ++a;
      ++b;
    }
  }
  return out;
}

GroupVector add(const GroupVector& u, const GroupVector& v) { return add_scaled(u, 1, v); }

GroupVector scale(const Rational& c, const GroupVector& v) {
  if (c == 0) return GroupVector(v.degree());
  TermList terms = v.terms();
  for (auto& t : terms) t.coeff *= c;
  return GroupVector::from_terms(v.degree(), std::move(terms));
}

GroupVector negate(const GroupVector& v) { return scale(-1, v); }

TermList sort(TermList terms) {
  std::stable_sort(terms.begin(), terms.end(), descending);
  return terms;
}

TermList compress(TermList terms) {
  if (!std::is_sorted(terms.begin(), terms.end(), descending)) {
    terms = sort(std::move(terms));
  }
  TermList out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().perm == t.perm) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

GroupVector renorm(const GroupVector& v) {
  if (v.is_zero()) return v;
  Integer denom_lcm = 1;
  for (const auto& t : v.terms()) {
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Integer num_gcd = 0;
  for (const auto& t : v.terms()) {
    Integer scaled = t.coeff.get_num() * (denom_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(denom_lcm, num_gcd);
  factor.canonicalize();
  if (leading(v).coeff < 0) factor = -factor;
  return scale(factor, v);
}

GroupVector translate_left(const Perm& p, const GroupVector& v) {
  if (p.degree() != v.degree()) throw DegreeMismatch(p.degree(), v.degree());
  TermList terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms()) terms.push_back(Term{t.coeff, multiply(p, t.perm)});
  return GroupVector::from_terms(v.degree(), std::move(terms));
}

GroupVector translate_right(const GroupVector& v, const Perm& p) {
  if (p.degree() != v.degree()) throw DegreeMismatch(v.degree(), p.degree());
  TermList terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms()) terms.push_back(Term{t.coeff, multiply(t.perm, p)});
  return GroupVector::from_terms(v.degree(), std::move(terms));
}

GroupVector lift_right(const GroupVector& v, std::size_t d) {
  if (d == 0) return v;
  TermList terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms()) terms.push_back(Term{t.coeff, extend_right(t.perm, d)});
  return GroupVector::from_terms(v.degree() + d, std::move(terms));
}

GroupVector lift_left(const GroupVector& v, std::size_t d) {
  if (d == 0) return v;
  TermList terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms()) terms.push_back(Term{t.coeff, extend_left(t.perm, d)});
  return GroupVector::from_terms(v.degree() + d, std::move(terms));
}

const Term& leading(const GroupVector& v) {
  if (v.is_zero()) throw Error("leading term of the zero vector");
  return v.terms().front();
}

}  // namespace atensor
