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

#include <unordered_set>

#include "atensor/error.hpp"
#include "atensor/syntax.hpp"

namespace atensor {

namespace {

const std::unordered_set<std::string>& command_words() {
  static const std::unordered_set<std::string> words = {
      "tensor", "tclear", "tsym", "kbasis", "on", "off", "showtime"};
  return words;
}

ExprPtr make_binary(ExprNode::Kind kind, ExprPtr lhs, ExprPtr rhs, const Token& at) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  node->line = at.line;
  node->column = at.column;
  return node;
}

const char* describe(TokenKind k) {
  switch (k) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kInteger: return "integer";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kComma: return "','";
    case TokenKind::kSemicolon: return "';'";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kSlash: return "'/'";
    case TokenKind::kAssign: return "':='";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

}  // namespace

std::string KBasisSpec::to_string() const {
  if (factors.empty()) return {};
  std::string s = factors.front();
  if (factors.size() > 1) {
    s += "(";
    for (std::size_t i = 1; i < factors.size(); ++i) {
      if (i > 1) s += ",";
      s += factors[i];
    }
    s += ")";
  }
  return s;
}

Parser::Parser(std::string_view text) : tokens_(tokenize(text)) {}

const Token& Parser::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

const Token& Parser::advance() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool Parser::accept(TokenKind kind) {
  if (peek().kind != kind) return false;
  advance();
  return true;
}

const Token& Parser::expect(TokenKind kind, const char* what) {
  if (peek().kind != kind) {
    fail(std::string("expected ") + what + ", found " +
         (peek().kind == TokenKind::kEnd ? std::string("end of input")
                                          : "'" + peek().text + "'"));
  }
  return advance();
}

void Parser::fail(const std::string& what) const {
  throw SyntaxError(what, peek().line, peek().column);
}

void Parser::recover() {
  while (peek().kind != TokenKind::kEnd && peek().kind != TokenKind::kSemicolon) advance();
  accept(TokenKind::kSemicolon);
}

std::vector<std::string> Parser::ident_list(const char* what) {
  std::vector<std::string> names;
  do {
    names.push_back(expect(TokenKind::kIdent, what).text);
  } while (accept(TokenKind::kComma));
  return names;
}

KBasisSpec Parser::kbasis_spec() {
  KBasisSpec spec;
  spec.factors.push_back(expect(TokenKind::kIdent, "tensor name").text);
  if (accept(TokenKind::kLParen)) {
    auto rest = ident_list("tensor name");
    spec.factors.insert(spec.factors.end(), rest.begin(), rest.end());
    expect(TokenKind::kRParen, describe(TokenKind::kRParen));
  }
  return spec;
}

std::optional<Statement> Parser::next() {
  while (accept(TokenKind::kSemicolon)) {
  }
  if (peek().kind == TokenKind::kEnd) return std::nullopt;

  const Token& first = peek();
  Statement st;
  st.line = first.line;
  st.column = first.column;

  const bool is_command = first.kind == TokenKind::kIdent &&
                          command_words().contains(first.text) &&
                          peek(1).kind != TokenKind::kAssign;
  if (is_command) {
    const std::string word = advance().text;
    if (word == "showtime") {
      st.body = ShowTime{};
    } else if (word == "tensor") {
      st.body = TensorDecl{ident_list("tensor name")};
    } else if (word == "tclear") {
      st.body = TClear{ident_list("tensor name")};
    } else if (word == "on" || word == "off") {
      st.body = SwitchSet{word == "on", ident_list("switch name")};
    } else if (word == "kbasis") {
      KBasisQuery q;
      do {
        q.specs.push_back(kbasis_spec());
      } while (accept(TokenKind::kComma));
      st.body = std::move(q);
    } else {  // tsym
      SymDecl d;
      do {
        d.relations.push_back(expression());
      } while (accept(TokenKind::kComma));
      st.body = std::move(d);
    }
  } else if (first.kind == TokenKind::kIdent && peek(1).kind == TokenKind::kAssign) {
    std::string name = advance().text;
    advance();
    st.body = Assignment{std::move(name), expression()};
  } else {
    st.body = ExprEval{expression()};
  }
  expect(TokenKind::kSemicolon, describe(TokenKind::kSemicolon));
  return st;
}

ExprPtr Parser::expression() {
  ExprPtr lhs = term();
  for (;;) {
    const Token& op = peek();
    if (accept(TokenKind::kPlus)) {
      lhs = make_binary(ExprNode::Kind::kAdd, lhs, term(), op);
    } else if (accept(TokenKind::kMinus)) {
      lhs = make_binary(ExprNode::Kind::kSub, lhs, term(), op);
    } else {
      return lhs;
    }
  }
}

ExprPtr Parser::term() {
  ExprPtr lhs = factor();
  for (;;) {
    const Token& op = peek();
    if (accept(TokenKind::kStar)) {
      lhs = make_binary(ExprNode::Kind::kMul, lhs, factor(), op);
    } else if (accept(TokenKind::kSlash)) {
      lhs = make_binary(ExprNode::Kind::kDiv, lhs, factor(), op);
    } else {
      return lhs;
    }
  }
}

ExprPtr Parser::factor() {
  const Token tok = peek();
  auto node = std::make_shared<ExprNode>();
  node->line = tok.line;
  node->column = tok.column;
  if (accept(TokenKind::kMinus)) {
    node->kind = ExprNode::Kind::kNeg;
    node->lhs = factor();
    return node;
  }
  if (accept(TokenKind::kPlus)) return factor();
  if (accept(TokenKind::kInteger)) {
    node->kind = ExprNode::Kind::kNumber;
    node->number = Integer(tok.text, 10);
    return node;
  }
  if (accept(TokenKind::kLParen)) {
    ExprPtr inner = expression();
    expect(TokenKind::kRParen, describe(TokenKind::kRParen));
    return inner;
  }
  if (tok.kind == TokenKind::kIdent) {
    advance();
    node->name = tok.text;
    if (accept(TokenKind::kLParen)) {
      node->kind = ExprNode::Kind::kTensor;
      node->indices = ident_list("index name");
      expect(TokenKind::kRParen, describe(TokenKind::kRParen));
    } else {
      node->kind = ExprNode::Kind::kVariable;
    }
    return node;
  }
  fail(std::string("expected an operand, found ") +
       (tok.kind == TokenKind::kEnd ? std::string("end of input") : "'" + tok.text + "'"));
}

std::vector<Statement> parse(std::string_view text) {
  Parser p(text);
  std::vector<Statement> out;
  while (auto st = p.next()) out.push_back(std::move(*st));
  return out;
}

ExprPtr parse_expression(std::string_view text) {
  auto statements = parse(std::string(text) + ";");
  if (statements.size() != 1 || !std::holds_alternative<ExprEval>(statements.front().body)) {
    throw SyntaxError("expected a single expression", 1, 1);
  }
  return std::get<ExprEval>(statements.front().body).expr;
}

KBasisSpec parse_kbasis_spec(std::string_view text) {
  auto statements = parse("kbasis " + std::string(text) + ";");
  if (statements.size() != 1) throw SyntaxError("expected a single basis name", 1, 1);
  const auto& q = std::get<KBasisQuery>(statements.front().body);
  if (q.specs.size() != 1) throw SyntaxError("expected a single basis name", 1, 1);
  return q.specs.front();
}

}  // namespace atensor
