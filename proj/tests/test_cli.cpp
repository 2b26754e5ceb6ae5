/*
 *   Copyright 2026 The cohfin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cohfin/cli.hpp"

namespace cohfin::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(CliTest, LawsSuitePasses) {
  const auto r = invoke({"laws", "--max-n", "5", "--m", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["suite"], "laws");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["results"][0]["law"], "coherent_closure");
  EXPECT_EQ(j["results"][0]["params"]["instances"], 1 + 1 + 2 + 8 + 64 + 1024);
  EXPECT_TRUE(j["results"][0]["params"].contains("statement"));
}

TEST(CliTest, LawsIsDeterministic) {
  const auto a = invoke({"laws", "--seed", "42", "--max-n", "4"});
  const auto b = invoke({"laws", "--seed", "42", "--max-n", "4"});
  EXPECT_EQ(a.out, b.out);
  const auto c = invoke({"laws", "--seed", "43", "--max-n", "4"});
  EXPECT_NE(a.out, c.out);
}

TEST(CliTest, BangTable) {
  const auto r = invoke({"bang", "--family", "kn", "--n", "1..8", "--format", "text"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "n\t2^n\tn+1");
  for (std::size_t n = 1; n <= 8; ++n) {
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, std::to_string(n) + "\t" + std::to_string(1U << n) + "\t" + std::to_string(n + 1));
  }
}

TEST(CliTest, RamseyExact) {
  const auto r = invoke({"ramsey", "exact", "3", "3", "--format", "text"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 2), "6\n");
  EXPECT_NE(r.out.find("lower-bound coloring on 5 vertices"), std::string::npos);
  const auto j = Json::parse(invoke({"ramsey", "exact", "3", "3"}).out);
  EXPECT_EQ(j["value"], 6);
  EXPECT_EQ(j["lower_witness"]["n"], 5);
}

TEST(CliTest, SpaceExpressionsAndDot) {
  const auto r = invoke({"space", "tensor(complete(2), dual(path(3)))", "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["web_size"], 6);
  EXPECT_EQ(j["omega"], 4);
  const auto dot = invoke({"space", "cycle(4)", "--format", "dot"});
  EXPECT_EQ(dot.status, 0);
  EXPECT_EQ(dot.out.rfind("graph C {", 0), 0U);
  const auto hom = Json::parse(invoke({"space", "hom(discrete(2), discrete(2))", "--format", "json"}).out);
  EXPECT_EQ(hom["clique_count"], 9);
}

TEST(CliTest, UsageErrorsExitTwo) {
  auto r = invoke({"frobnicate"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_TRUE(r.out.empty());

  r = invoke({"laws", "--bogus"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);

  EXPECT_EQ(invoke({"space", "complete(3"}).status, 2);
  EXPECT_EQ(invoke({"space", "blob(3)"}).status, 2);
  EXPECT_EQ(invoke({"laws", "--max-n", "9"}).status, 2);
  EXPECT_EQ(invoke({"laws", "--m", "0"}).status, 2);
  EXPECT_EQ(invoke({"ramsey", "exact", "4", "4"}).status, 2);
  EXPECT_EQ(invoke({"bang", "--family", "paths"}).status, 2);
  EXPECT_EQ(invoke({"prop21", "--x", "0(1)", "--x-prime", "0(1)"}).status, 2);
  EXPECT_EQ(invoke({"presented", "growth", "--format", "dot"}).status, 2);
  EXPECT_EQ(invoke({"laws", "--format", "yaml"}).status, 2);
}

TEST(CliTest, ViolationExitsOne) {
  LawReport bad;
  bad.law = "synthetic";
  bad.fail({{"set", {0}}});
  const auto out = suite_output("synthetic", Json::object(), {bad});
  EXPECT_EQ(out.status, 1);
  EXPECT_FALSE(out.json["pass"].get<bool>());
  EXPECT_FALSE(out.json["results"][0]["witness"].is_null());
}

TEST(CliTest, FunctorCommands) {
  auto r = invoke({"functor", "witness", "--source", "discrete(2)", "--target", "discrete(2)", "--k", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["witness"]["pairs"], Json({{0, 0}, {0, 1}}));
  r = invoke({"functor", "check", "--source", "path(3)", "--target", "complete(2)"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["pass"].get<bool>());
}

TEST(CliTest, PresentedCsv) {
  const auto r = invoke({"presented", "cover", "--family", "blocks_kn", "--sizes", "1,3,6", "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "n,omega,alpha,cover_lb\n1,1,1,1\n3,2,2,2\n6,3,3,3\n");
  EXPECT_EQ(invoke({"presented", "cert", "--family", "blocks_kn"}).status, 0);
  EXPECT_EQ(invoke({"presented", "edit"}).status, 0);
}

TEST(CliTest, NonUniformCommands) {
  auto r = invoke({"nonuniform", "failure", "--variant", "lax/lax", "--k", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["found"].get<bool>());
  r = invoke({"nonuniform", "trichotomy", "--cases", "20"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(invoke({"nonuniform", "failure", "--variant", "lax"}).status, 2);
}

TEST(CliTest, SeparateFromFileAndFlags) {
  const std::string path = testing::TempDir() + "cohfin_words.json";
  {
    std::ofstream f(path);
    f << R"({"X": [{"prefix": "", "period": "0"}], "X_prime": [{"prefix": "", "period": "1"}]})";
  }
  auto r = invoke({"separate", "--in", path});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_TRUE(j["results"][0]["params"]["brute_force_verified"].get<bool>());
  std::remove(path.c_str());
  r = invoke({"prop21", "--x", "0(1)", "--x", "1(0)", "--x-prime", "0(1)"});
  EXPECT_EQ(r.status, 0) << r.err;
}

TEST(CliTest, RamseyFindAndOutFile) {
  const std::string path = testing::TempDir() + "cohfin_find.json";
  const auto r = invoke({"ramsey", "find", "--n", "6", "--sizes", "3,3", "--out", path});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = Json::parse(in);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_FALSE(j["witness"].is_null());
  std::remove(path.c_str());
}

TEST(CliTest, SpaceParserHandlesNesting) {
  EXPECT_EQ(parse_space(" plus( complete(1) , complete(1) ) "), discrete(2));
  EXPECT_EQ(parse_space("disjoint-kn(3)"), disjoint_kn(3));
  EXPECT_THROW(parse_space("complete(2) extra"), UsageError);
}

}  // namespace
}  // namespace cohfin::cli
