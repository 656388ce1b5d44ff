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

#include <gtest/gtest.h>

#include "atensor/printer.hpp"
#include "atensor/simplify.hpp"
#include "scenarios.hpp"

namespace atensor {
namespace {

using testing::Workbench;

struct Golden {
  const char* input;
  const char* expected;  // reference result, "0" for zero
};

class GoldenSuite : public ::testing::TestWithParam<Golden> {};

TEST_P(GoldenSuite, SemanticallyEqualWithSameTermCount) {
  Workbench w;
  w.standard();
  const auto& g = GetParam();
  const TensorExpr got = w.simplified(g.input);
  if (std::string(g.expected) == "0") {
    EXPECT_TRUE(got.is_zero()) << print(got);
    return;
  }
  const TensorExpr want = w.expr(g.expected);
  EXPECT_EQ(got.vec.size(), want.vec.size()) << print(got);
  EXPECT_TRUE(w.is_zero(std::string("(") + g.input + ")-(" + g.expected + ")")) << print(got);
}

INSTANTIATE_TEST_SUITE_P(
    Reference, GoldenSuite,
    ::testing::Values(Golden{"a2(k,k)", "0"}, Golden{"a2(j,i)-a2(i,j)", "2*a2(j,i)"},
                      Golden{"a2(i,j)*v1(i)*v1(j)", "0"},
                      Golden{"a2(i,j)*v1(i)*v2(j)", "a2(i,j)*v1(i)*v2(j)"},
                      Golden{"a2(i,j)*s2(i,j)", "0"}, Golden{"a2(i,j)*a2(j,k)*a2(k,i)", "0"},
                      Golden{"a3(i,k,i)", "0"}, Golden{"a3(i,j,k)*s2(i,j)", "0"},
                      Golden{"s3(i,j,k)-s3(i,k,j)", "0"}, Golden{"s3(i,j,k)*a2(i,j)", "0"},
                      Golden{"s3(i,j,k)*a3(i,j,k)", "0"}, Golden{"ri(i,j,k,l)-ri(k,l,i,j)", "0"},
                      Golden{"ri(m,n,m,n)-ri(m,n,n,m)", "2*ri(m,n,m,n)"},
                      Golden{"ri(i,j,k,l)+ri(j,k,l,i)+ri(k,l,i,j)+ri(l,i,j,k)",
                             "(-2)*ri(l,j,i,k) + 4*ri(l,i,j,k)"},
                      Golden{"a2(m,n)*ri(m,n,c,d) + a2(k,l)*ri(c,d,l,k)", "0"},
                      Golden{"(ri(i,j,k,l)-ri(i,k,j,l))*a2(i,j)", "a2(i,j)*ri(i,j,k,l)/2"}));

TEST(Simplify, CanonicalFormIsIdempotent) {
  Workbench w;
  w.standard();
  const auto once = w.simplified("ri(i,j,k,l)+ri(j,k,l,i)+ri(k,l,i,j)+ri(l,i,j,k)");
  EXPECT_EQ(simplify(once, w.registry()), once);
}

TEST(Simplify, EqualComparesModuloRelations) {
  Workbench w;
  w.standard();
  EXPECT_TRUE(equal(w.expr("ri(i,j,k,l)"), w.expr("ri(k,l,i,j)"), w.registry()));
  EXPECT_FALSE(equal(w.expr("ri(i,j,k,l)"), w.expr("ri(i,k,j,l)"), w.registry()));
}

TEST(Simplify, ShortestIsNeverLonger) {
  Workbench w;
  w.standard();
  const auto r = simplify_full(w.expr("ri(i,j,k,l)+ri(j,k,l,i)+ri(k,l,i,j)+ri(l,i,j,k)"),
                               w.registry());
  EXPECT_LE(r.shortest.vec.size(), r.canonical.vec.size());
  EXPECT_TRUE(equal(r.shortest, r.canonical, w.registry()));
  EXPECT_EQ(r.basis_dim, 22u);
}

TEST(Simplify, PairExchangeFollowsFromThreeRelations) {
  Workbench w;
  w.standard();
  EXPECT_TRUE(w.is_zero("ri(i,j,k,l)-ri(k,l,i,j)"));
  EXPECT_FALSE(w.is_zero("ri(i,j,k,l)-ri(i,k,j,l)"));
}

}  // namespace
}  // namespace atensor
