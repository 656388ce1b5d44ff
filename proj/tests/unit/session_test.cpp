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

#include <json.hpp>
#include <sstream>

#include "atensor/session.hpp"
#include "transcript.hpp"

namespace atensor {
namespace {

struct Run {
  std::string out;
  std::string err;
  int status = 0;
};

Run run(std::string_view script, SessionOptions options = {}) {
  std::ostringstream out;
  std::ostringstream err;
  Session s(out, err, options);
  Run r;
  r.status = s.run(script);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Session, KBasisPrintsRowsThenDimension) {
  const auto r = run("tensor s2; tsym s2(i,j)-s2(j,i); kbasis s2;");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "s2(j,i) + (-1)*s2(i,j)\n1\n");
}

TEST(Session, KBasisJson) {
  SessionOptions o;
  o.json = true;
  const auto r = run("tensor a2; tsym a2(i,j)+a2(j,i); kbasis a2;", o);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["basis"], "a2");
  EXPECT_EQ(doc["dimension"], 1);
  EXPECT_EQ(doc["degree"], 2);
  EXPECT_EQ(doc["factors"][0]["arity"], 2);
  EXPECT_EQ(doc["indices"], nlohmann::json({"i", "j"}));
  ASSERT_EQ(doc["rows"].size(), 1u);
  EXPECT_EQ(doc["rows"][0]["coeffs"], nlohmann::json({1, 1}));
  EXPECT_EQ(doc["rows"][0]["perms"][0], nlohmann::json({2, 1}));
}

TEST(Session, InvalidTensorNamesTheCulprit) {
  const auto r = run("kbasis nosuch;");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("***** Invalid as tensor: nosuch"), std::string::npos);
}

TEST(Session, WarningsDoNotFail) {
  const auto r = run("tensor t; tensor t; tclear u;");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.err.find("+++ t is already declared as tensor."), std::string::npos);
  EXPECT_NE(r.err.find("+++ u is not a tensor."), std::string::npos);
}

TEST(Session, ContinuesAfterErrors) {
  const auto r = run("tensor a2; a2(i,; tsym a2(i,j)+a2(j,i); a2(j,i);");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "(-1)*a2(i,j)\n");
}

TEST(Session, AssignmentsAndVariables) {
  const auto r = run("tensor a2; tsym a2(i,j)+a2(j,i); x := a2(j,i); x + a2(i,j); y;");
  EXPECT_EQ(r.out, "x := (-1)*a2(i,j)\n0\n");
  EXPECT_NE(r.err.find("unbound variable y"), std::string::npos);
}

TEST(Session, Switches) {
  const auto r = run("tensor a2,v1; on dummypri; a2(m,n)*v1(m)*v1(n)*2; off dummypri; on bogus;");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("unknown switch bogus"), std::string::npos);
}

TEST(Session, ShortestSwitch) {
  const std::string decl =
      "tensor ri; tsym ri(i,j,k,l)+ri(j,i,k,l), ri(i,j,k,l)+ri(i,j,l,k),"
      " ri(i,j,k,l)+ri(i,k,l,j)+ri(i,l,j,k);";
  const std::string cyclic = "ri(i,j,k,l)+ri(j,k,l,i)+ri(k,l,i,j)+ri(l,i,j,k);";
  const auto canonical = run(decl + cyclic).out;
  const auto shortest = run(decl + "on shortest;" + cyclic).out;
  EXPECT_EQ(run(decl + "on shortest; off shortest;" + cyclic).out, canonical);
  EXPECT_LE(std::count(shortest.begin(), shortest.end(), '+'),
            std::count(canonical.begin(), canonical.end(), '+'));
}

TEST(Session, RankGuardExplainsMemoryGrowth) {
  SessionOptions o;
  o.max_rank = 3;
  const auto r = run("tensor ri; ri(i,j,k,l);", o);
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("rank 4 exceeds the limit 3"), std::string::npos);
  EXPECT_NE(r.err.find("Mbyte"), std::string::npos);
}

TEST(Session, FeedWaitsForCompleteStatements) {
  std::ostringstream out, err;
  Session s(out, err);
  s.feed("tensor a2; tsym a2(i,j)");
  EXPECT_TRUE(out.str().empty());
  s.feed("+a2(j,i); a2(j,");
  s.feed("i);\n");
  s.flush();
  EXPECT_EQ(out.str(), "(-1)*a2(i,j)\n");
  EXPECT_FALSE(s.failed());
}

TEST(Session, ShowtimeAndTimingOption) {
  SessionOptions o;
  o.time = true;
  const auto r = run("showtime; tensor t;", o);
  EXPECT_EQ(r.out.rfind("Time: ", 0), 0u);
  EXPECT_NE(r.err.find("Time: "), std::string::npos);
}

TEST(Session, TensorsCannotBeAssigned) {
  const auto r = run("tensor t; t := 1;");
  EXPECT_EQ(r.status, 1);
}

TEST(Transcript, ReferenceRunMatches) {
  const auto report =
      testing::compare_transcript(testing::read_text_file(ATENSOR_TEST_DATA "/testrun.ten"),
                                  testing::read_text_file(ATENSOR_TEST_DATA "/testrun.expected"));
  ASSERT_TRUE(report.error.empty()) << report.error;
  for (const auto& b : report.blocks) EXPECT_TRUE(b.ok) << b.statement << ": " << b.detail;
}

TEST(Transcript, DetectsWrongResult) {
  const auto report = testing::compare_transcript(
      "tensor a2;\ntsym a2(i,j)+a2(j,i);\na2(j,i);\n",
      "tensor a2;\ntsym a2(i,j)+a2(j,i);\na2(j,i);\na2(i,j)\n");
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.failures(), 1u);
}

TEST(Transcript, NormalizeDropsTimingAndSpacing) {
  EXPECT_EQ(testing::normalize_output("a  +  b\nTime: 3 ms\n\n  c\n"), "a + b\nc\n");
}

}  // namespace
}  // namespace atensor
