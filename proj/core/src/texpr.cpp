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

#include "atensor/texpr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "atensor/registry.hpp"

namespace atensor {

std::size_t TensorHeader::dummy_pairs() const {
  std::size_t pairs = 0;
  for (const auto& slot : indices) pairs = std::max(pairs, slot.pair);
  return pairs;
}

std::size_t TensorHeader::offset(std::size_t f) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < f; ++i) off += factors[i].arity;
  return off;
}

namespace {

void require_same_header(const TensorExpr& a, const TensorExpr& b) {
  if (!(a.header == b.header)) {
    throw EvalError("tensor expressions have incompatible headers");
  }
}

}  // namespace

TensorExpr operator+(const TensorExpr& a, const TensorExpr& b) {
  require_same_header(a, b);
  return TensorExpr{a.header, a.vec + b.vec};
}

TensorExpr operator-(const TensorExpr& a, const TensorExpr& b) {
  require_same_header(a, b);
  return TensorExpr{a.header, a.vec - b.vec};
}

TensorExpr operator*(const Rational& c, const TensorExpr& a) {
  return TensorExpr{a.header, scale(c, a.vec)};
}

RawExpr RawExpr::scalar(Rational c) {
  RawExpr e;
  e.monomials.push_back(RawMonomial{std::move(c), {}});
  return e;
}

RawExpr RawExpr::factor(RawFactor f) {
  RawExpr e;
  e.monomials.push_back(RawMonomial{1, {std::move(f)}});
  return e;
}

bool RawExpr::is_scalar() const {
  return std::all_of(monomials.begin(), monomials.end(),
                     [](const RawMonomial& m) { return m.factors.empty(); });
}

Rational RawExpr::scalar_value() const {
  Rational sum = 0;
  for (const auto& m : monomials) {
    if (m.factors.empty()) sum += m.coeff;
  }
  return sum;
}

RawExpr operator+(RawExpr a, const RawExpr& b) {
  a.monomials.insert(a.monomials.end(), b.monomials.begin(), b.monomials.end());
  return a;
}

RawExpr operator-(RawExpr a, const RawExpr& b) {
  for (auto m : b.monomials) {
    m.coeff = -m.coeff;
    a.monomials.push_back(std::move(m));
  }
  return a;
}

RawExpr operator*(const RawExpr& a, const RawExpr& b) {
  RawExpr out;
  out.monomials.reserve(a.monomials.size() * b.monomials.size());
  for (const auto& x : a.monomials) {
    for (const auto& y : b.monomials) {
      RawMonomial m{x.coeff * y.coeff, x.factors};
      m.factors.insert(m.factors.end(), y.factors.begin(), y.factors.end());
      out.monomials.push_back(std::move(m));
    }
  }
  return out;
}

RawExpr operator*(const Rational& c, RawExpr a) {
  for (auto& m : a.monomials) m.coeff *= c;
  return a;
}

std::vector<RawFactor> split(const TensorHeader& header, const Perm& arrangement) {
  if (arrangement.degree() != header.degree()) {
    throw DegreeMismatch(header.degree(), arrangement.degree());
  }
  std::vector<RawFactor> parts;
  std::size_t slot = 1;
  for (const auto& f : header.factors) {
    RawFactor part{f.name, {}};
    for (std::size_t i = 0; i < f.arity; ++i, ++slot) {
      part.indices.push_back(header.indices[arrangement(slot) - 1].name);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

namespace {

// One monomial re-expressed over its own header.
struct NormalizedMonomial {
  std::vector<Factor> factors;
  std::vector<std::string> free_names;      // sorted
  std::vector<std::string> dummy_names;     // original name per pair
  std::vector<std::size_t> images;          // arrangement over the header
};

NormalizedMonomial normalize_monomial(std::vector<RawFactor> factors, Diagnostics& diag) {
  std::stable_sort(factors.begin(), factors.end(),
                   [](const RawFactor& a, const RawFactor& b) { return a.name < b.name; });

  NormalizedMonomial out;
  std::vector<std::string> slots;
  for (const auto& f : factors) {
    out.factors.push_back(Factor{f.name, f.indices.size()});
    slots.insert(slots.end(), f.indices.begin(), f.indices.end());
  }

  std::map<std::string, std::vector<std::size_t>> occurrences;
  for (std::size_t s = 0; s < slots.size(); ++s) occurrences[slots[s]].push_back(s);

  struct Pair {
    std::size_t first, second;
    std::string name;
  };
  std::vector<Pair> pairs;
  std::map<std::size_t, std::string> free_at;  // slot -> free name
  for (const auto& [name, where] : occurrences) {
    if (where.size() > 2) {
      std::ostringstream msg;
      msg << "index " << name << " occurs " << where.size()
          << " times; pairing occurrences left to right";
      if (where.size() % 2) msg << ", the last one stays free";
      diag.warn(msg.str());
    }
    std::size_t i = 0;
    for (; i + 1 < where.size(); i += 2) pairs.push_back(Pair{where[i], where[i + 1], name});
    if (i < where.size()) free_at[where[i]] = name;
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& a, const Pair& b) { return a.first < b.first; });

  for (const auto& [slot, name] : free_at) out.free_names.push_back(name);
  std::sort(out.free_names.begin(), out.free_names.end());

  out.images.assign(slots.size(), 0);
  for (const auto& [slot, name] : free_at) {
    auto pos = std::lower_bound(out.free_names.begin(), out.free_names.end(), name) -
               out.free_names.begin();
    out.images[slot] = static_cast<std::size_t>(pos) + 1;
  }
  const std::size_t nfree = out.free_names.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out.images[pairs[k].first] = nfree + 2 * k + 1;
    out.images[pairs[k].second] = nfree + 2 * k + 2;
    out.dummy_names.push_back(pairs[k].name);
  }
  return out;
}

TensorHeader header_of(const NormalizedMonomial& m) {
  TensorHeader h;
  h.factors = m.factors;
  for (const auto& name : m.free_names) h.indices.push_back(IndexSlot::free(name));
  for (std::size_t k = 0; k < m.dummy_names.size(); ++k) {
    h.indices.push_back(IndexSlot::dummy(k + 1, 1, m.dummy_names[k]));
    h.indices.push_back(IndexSlot::dummy(k + 1, 2, m.dummy_names[k]));
  }
  return h;
}

std::string describe(const std::vector<Factor>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    s += factors[i].name + "/" + std::to_string(factors[i].arity);
  }
  return s.empty() ? "1" : s;
}

Perm to_perm(const std::vector<std::size_t>& images) {
  std::vector<Perm::value_type> v(images.begin(), images.end());
  return Perm(std::move(v));
}

TensorExpr normalize_structural(const RawExpr& raw, Diagnostics& diag) {
  std::optional<TensorHeader> header;
  std::optional<NormalizedMonomial> first;
  TermList terms;
  for (const auto& mono : raw.monomials) {
    if (mono.coeff == 0) continue;
    auto m = normalize_monomial(mono.factors, diag);
    if (!first) {
      first = m;
      header = header_of(m);
    } else {
      if (m.factors != first->factors) {
        throw EvalError("terms have different factors: " + describe(first->factors) +
                        " vs " + describe(m.factors));
      }
      if (m.free_names != first->free_names) {
        throw EvalError("terms have different free indices");
      }
    }
    if (!m.images.empty()) terms.push_back(Term{mono.coeff, to_perm(m.images)});
  }
  if (!header) return TensorExpr{};
  if (header->factors.empty()) {
    throw EvalError("expression contains no tensors");
  }
  const auto n = header->degree();
  return TensorExpr{std::move(*header), GroupVector::from_terms(n, std::move(terms))};
}

}  // namespace

TensorExpr fuse(const std::vector<RawFactor>& parts) {
  Diagnostics ignored;
  RawExpr raw;
  raw.monomials.push_back(RawMonomial{1, parts});
  return normalize_structural(raw, ignored);
}

TensorExpr normalize_dummies(const RawExpr& raw, Registry& registry, Diagnostics& diag) {
  for (const auto& mono : raw.monomials) {
    for (const auto& f : mono.factors) {
      if (!registry.is_tensor(f.name)) throw EvalError(f.name + " is not a tensor");
      if (f.indices.empty()) throw EvalError("tensor " + f.name + " used without indices");
      registry.use(f.name, f.indices.size());
    }
  }
  return normalize_structural(raw, diag);
}

std::vector<std::string> default_index_names(std::size_t n) {
  static const std::string letters = "ijklmnopqrstuvwxyz";
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < letters.size()) {
      names.emplace_back(1, letters[i]);
    } else {
      names.push_back("i" + std::to_string(i - letters.size() + 1));
    }
  }
  return names;
}

TensorHeader default_header(std::vector<Factor> factors) {
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Factor& a, const Factor& b) { return a.name < b.name; });
  TensorHeader h;
  h.factors = std::move(factors);
  std::size_t n = 0;
  for (const auto& f : h.factors) n += f.arity;
  for (auto& name : default_index_names(n)) h.indices.push_back(IndexSlot::free(std::move(name)));
  return h;
}

}  // namespace atensor
