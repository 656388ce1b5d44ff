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

#include "atensor/error.hpp"
#include "atensor/registry.hpp"
#include "atensor/texpr.hpp"
#include "scenarios.hpp"

namespace atensor {
namespace {

using testing::Workbench;

TEST(Normalize, FreeIndicesAreSortedAndArrangedBySelection) {
  Workbench w;
  w.standard();
  const auto e = w.expr("a2(j,i)");
  ASSERT_EQ(e.header.indices.size(), 2u);
  EXPECT_EQ(e.header.indices[0], IndexSlot::free("i"));
  EXPECT_EQ(e.header.indices[1], IndexSlot::free("j"));
  EXPECT_EQ(e.vec, GroupVector::unit(Perm{2, 1}));
  EXPECT_EQ(w.expr("a2(i,j)").vec, GroupVector::unit(Perm{1, 2}));
}

TEST(Normalize, DummyPairsFollowFreeIndices) {
  Workbench w;
  w.standard();
  const auto e = w.expr("a2(i,j)*v1(i)*v2(k)");
  EXPECT_EQ(e.header.free_count(), 2u);
  EXPECT_EQ(e.header.dummy_pairs(), 1u);
  EXPECT_EQ(e.header.indices[2], IndexSlot::dummy(1, 1, "x"));
  EXPECT_EQ(e.header.indices[2].internal_number(), 1u);
  EXPECT_EQ(e.header.indices[3].internal_number(), 2u);
  EXPECT_EQ(e.header.degree(), 4u);
  EXPECT_EQ(e.header.offset(1), 2u);
}

TEST(Normalize, FactorOrderIsCanonical) {
  Workbench w;
  w.standard();
  EXPECT_EQ(w.expr("v1(k)*a2(i,j)"), w.expr("a2(i,j)*v1(k)"));
  EXPECT_EQ(w.expr("v1(i)*a2(i,j)"), w.expr("a2(i,j)*v1(i)"));
}

TEST(Normalize, DummyNamesDoNotMatter) {
  Workbench w;
  w.standard();
  EXPECT_EQ(w.expr("a2(m,n)*ri(m,n,c,d)").vec, w.expr("a2(p,q)*ri(p,q,c,d)").vec);
  EXPECT_EQ(w.expr("a2(m,n)*ri(m,n,c,d)").header, w.expr("a2(p,q)*ri(p,q,c,d)").header);
}

TEST(Normalize, Errors) {
  Workbench w;
  w.standard();
  EXPECT_THROW(w.expr("a2(i,j)+s2(i,j)"), EvalError);
  EXPECT_THROW(w.expr("a2(i,j)+a2(i,k)"), EvalError);
  EXPECT_THROW(w.expr("nosuch(i)"), EvalError);
  EXPECT_THROW(w.expr("a2(i,j,k)"), EvalError);
  EXPECT_THROW(w.expr("a2(i,j)-a2(i,j)+1"), EvalError);
}

TEST(Normalize, FixesArityOnFirstUse) {
  Workbench w;
  w.run("tensor t;");
  EXPECT_FALSE(w.registry().tensor("t").arity);
  w.expr("t(a,b,c)");
  EXPECT_EQ(w.registry().tensor("t").arity, 3u);
  EXPECT_THROW(w.expr("t(a,b)"), EvalError);
}

TEST(Normalize, WarnsOnTripleOccurrence) {
  Workbench w;
  w.standard();
  w.expr("a2(i,i)*v1(i)");
  EXPECT_NE(w.err().find("+++"), std::string::npos);
}

TEST(Normalize, CancellingTermsGiveZero) {
  Workbench w;
  w.standard();
  EXPECT_TRUE(w.expr("a2(i,j)-a2(i,j)").is_zero());
}

TEST(Header, SplitAndFuseRoundTrip) {
  const TensorHeader h = default_header({Factor{"a", 2}, Factor{"b", 3}});
  EXPECT_EQ(h.degree(), 5u);
  const Perm p{5, 1, 3, 2, 4};
  const auto parts = split(h, p);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (RawFactor{"a", {"m", "i"}}));
  EXPECT_EQ(parts[1], (RawFactor{"b", {"k", "j", "l"}}));
  const TensorExpr fused = fuse(parts);
  EXPECT_EQ(fused.header, h);
  EXPECT_EQ(fused.vec, GroupVector::unit(p));
}

TEST(Header, DefaultNames) {
  const auto names = default_index_names(20);
  EXPECT_EQ(names.front(), "i");
  EXPECT_EQ(names[17], "z");
  EXPECT_EQ(names[18], "i1");
}

TEST(TensorExprOps, RequireEqualHeaders) {
  Workbench w;
  w.standard();
  const auto a = w.expr("a2(i,j)");
  EXPECT_EQ((a + a).vec, GroupVector::unit(Perm{1, 2}, 2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((Rational(3) * a).vec, GroupVector::unit(Perm{1, 2}, 3));
  EXPECT_THROW(a + w.expr("s2(i,j)"), EvalError);
}

TEST(Registry, DeclareUndeclareAndSymmetries) {
  Registry r;
  EXPECT_TRUE(r.declare("t"));
  EXPECT_FALSE(r.declare("t"));
  EXPECT_TRUE(r.is_tensor("t"));
  EXPECT_TRUE(r.undeclare("t"));
  EXPECT_FALSE(r.undeclare("t"));
  EXPECT_THROW(r.k0("t"), EvalError);
  EXPECT_TRUE(r.names().empty());
}

TEST(Registry, RejectsBadSymmetryRelations) {
  Workbench w;
  w.standard();
  EXPECT_THROW(w.registry().declare_symmetry(w.expr("a2(i,j)*v1(k)")), EvalError);
  EXPECT_THROW(w.registry().declare_symmetry(w.expr("a3(i,k,i)")), EvalError);
}

TEST(Registry, PackedAndUnpackedStorageAgree) {
  Workbench w;
  w.standard();
  const KBasis packed = w.registry().k0("ri");
  w.registry().set_packed(false);
  const KBasis plain = w.registry().k0("ri");
  EXPECT_EQ(packed.rows(), plain.rows());
  EXPECT_EQ(unpack(pack(plain)).rows(), plain.rows());
}

}  // namespace
}  // namespace atensor
