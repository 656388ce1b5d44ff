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

// Command-line front end: interactive session, script runner, basis export
// and the memory table.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <unistd.h>

#include "atensor/error.hpp"
#include "atensor/memory.hpp"
#include "atensor/session.hpp"
#include "atensor/syntax.hpp"

namespace {

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

int interactive(atensor::Session& session) {
  const bool tty = isatty(STDIN_FILENO);
  std::string line;
  if (tty) std::cout << "atensor> " << std::flush;
  while (std::getline(std::cin, line)) {
    session.feed(line + "\n");
    if (tty) std::cout << "atensor> " << std::flush;
  }
  session.flush();
  return session.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atensor: simplification of tensor expressions with symmetries, "
               "multiterm identities and dummy indices"};
  app.require_subcommand(0, 1);

  std::string script;
  atensor::SessionOptions options;
  bool no_packed = false;
  app.add_option("--script", script, "Run the statements of FILE instead of reading stdin")
      ->check(CLI::ExistingFile);
  app.add_option("--max-rank", options.max_rank,
                 "Largest permutation-group rank to accept (memory grows as n!)")
      ->capture_default_str();
  app.add_flag("--json", options.json, "Print kbasis results as JSON");
  app.add_flag("--no-packed", no_packed, "Store permutations unpacked");
  app.add_flag("--time", options.time, "Print the time taken by every statement");

  auto* memtable = app.add_subcommand("memtable", "Print the memory estimate per group rank");
  std::size_t memtable_rank = 11;
  memtable->add_option("rank", memtable_rank, "Largest rank to tabulate (<= 20)")
      ->capture_default_str();

  auto* exporter = app.add_subcommand("export", "Write a K-basis to a file");
  std::string export_spec;
  std::string export_out;
  bool export_json = false;
  exporter->add_option("--basis", export_spec, "Tensor name or product t1(t2,...)")->required();
  exporter->add_option("-o,--output", export_out, "Output file (default: stdout)");
  exporter->add_flag("--json", export_json, "Structured JSON dump instead of text");

  CLI11_PARSE(app, argc, argv);
  options.packed = !no_packed;

  if (memtable->parsed()) {
    try {
      std::cout << atensor::format_memtable(memtable_rank);
    } catch (const atensor::Error& e) {
      std::cerr << "***** " << e.what() << '\n';
      return 1;
    }
    return 0;
  }

  std::string text;
  if (!script.empty() && !read_file(script, text)) {
    std::cerr << "***** cannot read " << script << '\n';
    return 1;
  }

  if (exporter->parsed()) {
    std::ostringstream discard;
    atensor::Session session(discard, std::cerr, options);
    if (session.run(text) != 0) return 1;
    try {
      const auto spec = atensor::parse_kbasis_spec(export_spec);
      const auto format = export_json ? atensor::BasisFormat::kJson : atensor::BasisFormat::kText;
      if (export_out.empty()) {
        session.write_basis(spec, format, std::cout);
      } else {
        std::ofstream out(export_out);
        if (!out) {
          std::cerr << "***** cannot write " << export_out << '\n';
          return 1;
        }
        session.write_basis(spec, format, out);
      }
    } catch (const atensor::Error& e) {
      std::cerr << "***** " << e.what() << '\n';
      return 1;
    }
    return 0;
  }

  atensor::Session session(std::cout, std::cerr, options);
  if (!script.empty()) return session.run(text);
  return interactive(session);
}
