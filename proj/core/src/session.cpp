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

#include "atensor/session.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "atensor/memory.hpp"
#include "atensor/printer.hpp"
#include "atensor/relations.hpp"
#include "atensor/simplify.hpp"

namespace atensor {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

nlohmann::json coefficient_json(const Rational& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return c.get_str();
}

}  // namespace

Session::Session(std::ostream& out, std::ostream& err, SessionOptions options)
    : out_(out), err_(err), options_(options), last_showtime_(std::chrono::steady_clock::now()) {
  registry_.set_packed(options_.packed);
}

void Session::report_error(const std::string& message) {
  failed_ = true;
  err_ << "***** " << message << '\n';
}

void Session::warn(const std::string& message) { err_ << "+++ " << message << '\n'; }

void Session::check_rank(std::size_t n) const {
  if (n <= options_.max_rank) return;
  const auto mem = estimate_memory(n);
  std::ostringstream msg;
  msg << "rank " << n << " exceeds the limit " << options_.max_rank
      << ": the group algebra has " << n << "! dimensions and a full basis needs about "
      << mem.mbytes << " Mbyte; raise --max-rank to proceed";
  throw EvalError(msg.str());
}

int Session::run(std::string_view text) {
  Parser parser{""};
  try {
    parser = Parser(text);
  } catch (const SyntaxError& e) {
    report_error(e.what());
    return 1;
  }
  for (;;) {
    try {
      auto st = parser.next();
      if (!st) break;
      execute(*st);
    } catch (const SyntaxError& e) {
      report_error(e.what());
      parser.recover();
    }
  }
  return failed_ ? 1 : 0;
}

void Session::feed(std::string_view chunk) {
  pending_.append(chunk);
  const auto end = pending_.rfind(';');
  if (end == std::string::npos) return;
  const std::string complete = pending_.substr(0, end + 1);
  pending_.erase(0, end + 1);
  run(complete);
}

void Session::flush() {
  std::string rest;
  rest.swap(pending_);
  if (rest.find_first_not_of(" \t\r\n") != std::string::npos) run(rest);
}

void Session::execute(const Statement& st) {
  const auto start = std::chrono::steady_clock::now();
  try {
    run_statement(st);
  } catch (const Error& e) {
    report_error(e.what());
  }
  if (options_.time) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    err_ << "Time: " << ms.count() << " ms\n";
  }
}

RawExpr Session::evaluate(const ExprNode& node) const {
  using Kind = ExprNode::Kind;
  switch (node.kind) {
    case Kind::kNumber:
      return RawExpr::scalar(Rational(node.number));
    case Kind::kTensor:
      return RawExpr::factor(RawFactor{node.name, node.indices});
    case Kind::kVariable: {
      auto it = bindings_.find(node.name);
      if (it == bindings_.end()) {
        if (registry_.is_tensor(node.name)) {
          throw EvalError("tensor " + node.name + " used without indices");
        }
        throw EvalError("unbound variable " + node.name);
      }
      return it->second;
    }
    case Kind::kNeg:
      return Rational(-1) * evaluate(*node.lhs);
    case Kind::kAdd:
      return evaluate(*node.lhs) + evaluate(*node.rhs);
    case Kind::kSub:
      return evaluate(*node.lhs) - evaluate(*node.rhs);
    case Kind::kMul:
      return evaluate(*node.lhs) * evaluate(*node.rhs);
    case Kind::kDiv: {
      RawExpr divisor = evaluate(*node.rhs);
      if (!divisor.is_scalar()) throw EvalError("division by a tensor expression");
      const Rational d = divisor.scalar_value();
      if (d == 0) throw EvalError("division by zero");
      return Rational(1 / d) * evaluate(*node.lhs);
    }
  }
  throw EvalError("unknown expression node");
}

TensorExpr Session::normalize(const RawExpr& raw) {
  Diagnostics diag;
  TensorExpr expr = normalize_dummies(raw, registry_, diag);
  for (const auto& w : diag.warnings) warn(w);
  return expr;
}

std::string Session::render(const RawExpr& raw) {
  if (raw.is_scalar()) return print_rational(raw.scalar_value());
  TensorExpr expr = normalize(raw);
  check_rank(expr.header.degree());
  const auto result = simplify_full(expr, registry_);
  const PrintOptions options{registry_.switches().dummypri};
  return print(registry_.switches().shortest ? result.shortest : result.canonical, options);
}

std::pair<TensorHeader, KBasis> Session::basis(const KBasisSpec& spec) const {
  std::vector<Factor> factors;
  for (const auto& name : spec.factors) {
    if (!registry_.is_tensor(name)) throw EvalError("Invalid as tensor: " + name);
    const auto& t = registry_.tensor(name);
    if (!t.arity) throw EvalError("number of indices of " + name + " is not fixed yet");
    factors.push_back(Factor{name, *t.arity});
  }
  TensorHeader header = default_header(std::move(factors));
  check_rank(header.degree());
  KBasis b = product_basis(header, registry_);
  return {std::move(header), std::move(b)};
}

void Session::write_basis(const KBasisSpec& spec, BasisFormat format, std::ostream& os) const {
  auto [header, b] = basis(spec);
  if (format == BasisFormat::kText) {
    os << print_basis(header, b, PrintOptions{registry_.switches().dummypri});
    os << b.dim() << '\n';
    return;
  }
  nlohmann::json doc;
  doc["basis"] = spec.to_string();
  doc["degree"] = b.degree();
  doc["dimension"] = b.dim();
  doc["factors"] = nlohmann::json::array();
  for (const auto& f : header.factors) {
    doc["factors"].push_back({{"name", f.name}, {"arity", f.arity}});
  }
  doc["indices"] = nlohmann::json::array();
  for (const auto& slot : header.indices) doc["indices"].push_back(slot.name);
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : b.rows()) {
    nlohmann::json coeffs = nlohmann::json::array();
    nlohmann::json perms = nlohmann::json::array();
    for (const auto& t : row.terms()) {
      coeffs.push_back(coefficient_json(t.coeff));
      nlohmann::json images = nlohmann::json::array();
      for (auto x : t.perm.images()) images.push_back(static_cast<int>(x));
      perms.push_back(std::move(images));
    }
    doc["rows"].push_back({{"degree", row.degree()}, {"coeffs", coeffs}, {"perms", perms}});
  }
  os << doc.dump(2) << '\n';
}

void Session::run_statement(const Statement& st) {
  std::visit(
      Overloaded{
          [&](const TensorDecl& d) {
            for (const auto& name : d.names) {
              if (bindings_.contains(name)) {
                report_error(name + " is a variable and cannot be declared as tensor");
              } else if (!registry_.declare(name)) {
                warn(name + " is already declared as tensor.");
              }
            }
          },
          [&](const TClear& d) {
            for (const auto& name : d.names) {
              if (!registry_.undeclare(name)) warn(name + " is not a tensor.");
            }
          },
          [&](const SymDecl& d) {
            for (const auto& rel : d.relations) {
              RawExpr raw = evaluate(*rel);
              if (raw.is_scalar()) throw EvalError("symmetry relation contains no tensor");
              TensorExpr expr = normalize(raw);
              check_rank(expr.header.degree());
              registry_.declare_symmetry(expr);
            }
          },
          [&](const KBasisQuery& q) {
            for (const auto& spec : q.specs) {
              try {
                write_basis(spec, options_.json ? BasisFormat::kJson : BasisFormat::kText, out_);
              } catch (const Error& e) {
                report_error(e.what());
              }
            }
          },
          [&](const SwitchSet& s) {
            for (const auto& name : s.names) {
              if (name == "dummypri") {
                registry_.set_dummypri(s.on);
              } else if (name == "shortest") {
                registry_.set_shortest(s.on);
              } else if (name == "ppacked" || name == "packed") {
                registry_.set_packed(s.on);
              } else {
                report_error("unknown switch " + name);
              }
            }
          },
          [&](const Assignment& a) {
            if (registry_.is_tensor(a.name)) {
              throw EvalError(a.name + " is a tensor and cannot be assigned");
            }
            RawExpr raw = evaluate(*a.value);
            const std::string text = render(raw);
            bindings_[a.name] = std::move(raw);
            out_ << a.name << " := " << text << '\n';
          },
          [&](const ExprEval& e) { out_ << render(evaluate(*e.expr)) << '\n'; },
          [&](const ShowTime&) {
            const auto now = std::chrono::steady_clock::now();
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(now - last_showtime_);
            last_showtime_ = now;
            out_ << "Time: " << ms.count() << " ms\n";
          },
      },
      st.body);
}

}  // namespace atensor
