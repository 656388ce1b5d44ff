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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "atensor/group_vector.hpp"

namespace atensor {

// ---------------------------------------------------------------------------
// Tokens

enum class TokenKind {
  kIdent,
  kInteger,
  kLParen,
  kRParen,
  kComma,
  kSemicolon,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kAssign,  // :=
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // identifiers are lowercased
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Splits script text into tokens. Identifiers are case-insensitive and
/// returned lowercased; `%` starts a comment running to the end of line.
std::vector<Token> tokenize(std::string_view text);

// ---------------------------------------------------------------------------
// Expressions

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { kNumber, kTensor, kVariable, kNeg, kAdd, kSub, kMul, kDiv };

  Kind kind;
  Integer number;                    // kNumber
  std::string name;                  // kTensor, kVariable
  std::vector<std::string> indices;  // kTensor
  ExprPtr lhs, rhs;                  // operands; kNeg uses lhs only
  std::size_t line = 0, column = 0;
};

// ---------------------------------------------------------------------------
// Statements

struct TensorDecl {
  std::vector<std::string> names;
};

struct SymDecl {
  std::vector<ExprPtr> relations;
};

/// `name` alone, or `head(f1, f2, ...)` for the basis of a product.
struct KBasisSpec {
  std::vector<std::string> factors;

  std::string to_string() const;
};

struct KBasisQuery {
  std::vector<KBasisSpec> specs;
};

struct TClear {
  std::vector<std::string> names;
};

struct SwitchSet {
  bool on = true;
  std::vector<std::string> names;
};

struct Assignment {
  std::string name;
  ExprPtr value;
};

struct ExprEval {
  ExprPtr expr;
};

struct ShowTime {};

using StatementBody = std::variant<TensorDecl, SymDecl, KBasisQuery, TClear, SwitchSet,
                                   Assignment, ExprEval, ShowTime>;

struct Statement {
  StatementBody body;
  std::size_t line = 0, column = 0;
};

/// Incremental statement parser with error recovery.
class Parser {
 public:
  explicit Parser(std::string_view text);

  /// Next statement, or nullopt at end of input. Throws SyntaxError; call
  /// recover() afterwards to resume after the next `;`.
  std::optional<Statement> next();
  void recover();

 private:
  const Token& peek(std::size_t ahead = 0) const;
  const Token& advance();
  bool accept(TokenKind kind);
  const Token& expect(TokenKind kind, const char* what);
  [[noreturn]] void fail(const std::string& what) const;

  std::vector<std::string> ident_list(const char* what);
  KBasisSpec kbasis_spec();

  ExprPtr expression();
  ExprPtr term();
  ExprPtr factor();

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Parses a complete script. Throws SyntaxError on the first error.
std::vector<Statement> parse(std::string_view text);

/// Parses a single expression (no trailing `;` needed).
ExprPtr parse_expression(std::string_view text);

/// Parses `name` or `name(f1, ...)`.
KBasisSpec parse_kbasis_spec(std::string_view text);

}  // namespace atensor
