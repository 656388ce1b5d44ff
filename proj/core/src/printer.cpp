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

#include "atensor/printer.hpp"

#include <sstream>

namespace atensor {

namespace {

std::string index_label(const IndexSlot& slot, const PrintOptions& options) {
  if (slot.is_dummy() && options.dummypri) {
    return slot.name + "_" + std::to_string(slot.internal_number());
  }
  return slot.name;
}

std::string print_term(const TensorHeader& header, const Perm& arrangement,
                       const PrintOptions& options) {
  std::string out;
  std::size_t slot = 1;
  for (std::size_t f = 0; f < header.factors.size(); ++f) {
    if (f) out += "*";
    out += header.factors[f].name;
    out += "(";
    for (std::size_t i = 0; i < header.factors[f].arity; ++i, ++slot) {
      if (i) out += ",";
      out += index_label(header.indices[arrangement(slot) - 1], options);
    }
    out += ")";
  }
  return out;
}

}  // namespace

std::string print_rational(const Rational& q) { return q.get_str(10); }

std::string print(const TensorExpr& expr, const PrintOptions& options) {
  const auto& terms = expr.vec.terms();
  if (terms.empty()) return "0";

  Integer denom = 1;
  for (const auto& t : terms) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), t.coeff.get_den_mpz_t());
  }

  std::string body;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) body += " + ";
    const Rational scaled = terms[i].coeff * denom;
    const Integer c = scaled.get_num();
    if (c < 0) {
      body += "(" + c.get_str() + ")*";
    } else if (c != 1) {
      body += c.get_str() + "*";
    }
    body += print_term(expr.header, terms[i].perm, options);
  }
  if (denom == 1) return body;
  if (terms.size() > 1) body = "(" + body + ")";
  return body + " / " + denom.get_str();
}

std::string print_basis(const TensorHeader& header, const KBasis& basis,
                        const PrintOptions& options) {
  std::ostringstream os;
  for (const auto& row : basis.rows()) {
    os << print(TensorExpr{header, row}, options) << '\n';
  }
  return os.str();
}

}  // namespace atensor
