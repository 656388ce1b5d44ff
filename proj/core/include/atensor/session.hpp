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

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "atensor/kbasis.hpp"
#include "atensor/registry.hpp"
#include "atensor/syntax.hpp"
#include "atensor/texpr.hpp"

namespace atensor {

struct SessionOptions {
  /// kbasis prints a structured JSON dump instead of text.
  bool json = false;
  /// Largest group rank an expression or basis may need.
  std::size_t max_rank = 8;
  /// Print the time taken by every statement to the diagnostic stream.
  bool time = false;
  /// Store K0-bases with packed permutations.
  bool packed = true;
};

enum class BasisFormat { kText, kJson };

/// A command-language session: registry, variable bindings, switches and
/// timing. Results go to `out`, warnings and errors to `err`.
class Session {
 public:
  Session(std::ostream& out, std::ostream& err, SessionOptions options = {});

  /// Executes every statement of `text`, continuing after errors.
  /// Returns 0 when no error was reported, 1 otherwise.
  int run(std::string_view text);

  /// Buffers interactive input and executes each complete statement.
  void feed(std::string_view chunk);
  /// Executes whatever is left in the input buffer.
  void flush();

  void execute(const Statement& st);

  /// Evaluates an expression AST to its raw (unnormalized) form.
  RawExpr evaluate(const ExprNode& node) const;

  /// Normalizes against the registry; warnings go to the diagnostic stream.
  TensorExpr normalize(const RawExpr& raw);

  /// Header and basis for `t` (K0) or `t1(t2,...)` (KM of the product).
  std::pair<TensorHeader, KBasis> basis(const KBasisSpec& spec) const;

  void write_basis(const KBasisSpec& spec, BasisFormat format, std::ostream& os) const;

  bool failed() const noexcept { return failed_; }
  Registry& registry() noexcept { return registry_; }
  const Registry& registry() const noexcept { return registry_; }
  const SessionOptions& options() const noexcept { return options_; }

 private:
  void run_statement(const Statement& st);
  void report_error(const std::string& message);
  void warn(const std::string& message);
  void check_rank(std::size_t n) const;
  std::string render(const RawExpr& raw);

  std::ostream& out_;
  std::ostream& err_;
  SessionOptions options_;
  Registry registry_;
  std::map<std::string, RawExpr> bindings_;
  std::string pending_;
  std::chrono::steady_clock::time_point last_showtime_;
  bool failed_ = false;
};

}  // namespace atensor
