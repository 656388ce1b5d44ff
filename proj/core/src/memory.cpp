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

#include "atensor/memory.hpp"

#include <cstdio>
#include <string>

#include "atensor/error.hpp"

namespace atensor {

namespace {

constexpr double kCellsPerTerm = 4;
constexpr double kTermsPerVector = 2;
constexpr double kBytesPerCell = 8;

}  // namespace

MemoryEstimate estimate_memory(std::size_t n) {
  if (n == 0) throw Error("rank must be at least 1");
  double fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<double>(i);
  const double cells = fact * kCellsPerTerm * kTermsPerVector;
  return MemoryEstimate{cells / 1e6, cells * kBytesPerCell / (1024.0 * 1000.0)};
}

namespace {

std::string cell(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, v >= 0.1 ? "%.1f" : "%.3g", v);
  return buf;
}

}  // namespace

std::string format_memtable(std::size_t max_rank) {
  if (max_rank == 0 || max_rank > 20) {
    throw Error("memtable rank must be between 1 and 20");
  }
  std::string out = "Rank of S_n\tNumber of Mcells\tMemory in Mbyte\n";
  for (std::size_t n = 1; n <= max_rank; ++n) {
    const auto e = estimate_memory(n);
    out += std::to_string(n) + "\t" + cell(e.mcells) + "\t" + cell(e.mbytes) + "\n";
  }
  return out;
}

}  // namespace atensor
