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

#include <string>

#include "atensor/kbasis.hpp"
#include "atensor/texpr.hpp"

namespace atensor {

struct PrintOptions {
  /// Render dummies as name_N with their internal number N (2k-1 / 2k).
  bool dummypri = false;
};

/// Renders terms as `coeff*name(i,j,...)` products joined by ` + `, in
/// vector order. Coefficient 1 is omitted, negative ones are parenthesised.
/// When the coefficients share a denominator d > 1 the integer form is
/// printed followed by ` / d` (parenthesised when it has several terms).
/// The zero expression prints as `0`.
std::string print(const TensorExpr& expr, const PrintOptions& options = {});

/// One line per row, pivot term first, over the header's index names.
std::string print_basis(const TensorHeader& header, const KBasis& basis,
                        const PrintOptions& options = {});

std::string print_rational(const Rational& q);

}  // namespace atensor
