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
#include <string>

namespace atensor {

/// Storage needed for a full KD-basis at group rank n, counted as
/// n! * 4 cells per term * 2 terms per vector, 8 bytes per cell.
struct MemoryEstimate {
  double mcells = 0;  // millions of cells
  double mbytes = 0;  // bytes / (1024 * 1000), the convention of the table
};

MemoryEstimate estimate_memory(std::size_t n);

/// Table of estimates for ranks 1..max_rank (at most 20), one row per rank.
std::string format_memtable(std::size_t max_rank);

}  // namespace atensor
