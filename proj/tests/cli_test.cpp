// Copyright 2026 The clifftwist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clifftwist/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "golden_tables.hpp"
#include "oracle.hpp"

using namespace clifftwist;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const SignSuite& suite = default_sign_suite()) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err, suite);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

// Wrong exactly at (5, 7).
Sign faulty_closed(Blade p, Blade q, Mu mu) {
  const Sign s = twist_closed(p, q, mu);
  return (p.mask == 5 && q.mask == 7) ? -s : s;
}

}  // namespace

TEST(CliSign, Examples) {
  EXPECT_EQ(run({"sign", "2636", "1143", "--mu", "-1"}).out, "-1\n");
  EXPECT_EQ(run({"sign", "0", "0"}).out, "+1\n");
  EXPECT_EQ(run({"sign", "13", "6", "--mu", "+1"}).out, "-1\n");
  EXPECT_EQ(run({"sign", "13", "6"}).out, "+1\n");  // default mu = -1
}

TEST(CliSign, EveryAlgorithmAgrees) {
  for (const char* algo : {"oracle", "recursive", "tree", "closed"})
    EXPECT_EQ(run({"sign", "2636", "1143", "--algo", algo}).out, "-1\n") << algo;
}

TEST(CliSign, UsageErrors) {
  EXPECT_EQ(run({"sign", "12x", "3"}).code, 2);
  EXPECT_EQ(run({"sign", "-3", "3"}).code, 2);
  EXPECT_EQ(run({"sign", "18446744073709551616", "3"}).code, 2);
  EXPECT_EQ(run({"sign", "1"}).code, 2);
  EXPECT_EQ(run({"sign", "1", "2", "--mu", "2"}).code, 2);
  EXPECT_EQ(run({"sign", "1", "2", "--mu", "sym"}).code, 2);
  EXPECT_EQ(run({"sign", "1", "2", "--algo", "fast"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const Result r = run({"sign", "1", "zz"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"sign", "18446744073709551615", "18446744073709551615"}).code, 0);
}

TEST(CliMul, Examples) {
  EXPECT_EQ(run({"mul", "e_347ac * e_123567b", "--mu", "-1"}).out, "-e_{12456abc}\n");
  EXPECT_EQ(run({"mul", "e_134 * e_23", "--mu", "-1"}).out, "e_{124}\n");
  EXPECT_EQ(run({"mul", "e_134 * e_23", "--mu", "+1"}).out, "-e_{124}\n");
  EXPECT_EQ(run({"mul", "1 * 1"}).out, "1\n");
  EXPECT_EQ(run({"mul", "i_2636 * i_1143", "--mu", "-1", "--i-form"}).out, "-i_3643\n");
}

TEST(CliMul, ParseErrorsReportOffset) {
  const Result r = run({"mul", "e_1 * * e_2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("offset 6"), std::string::npos) << r.err;
}

TEST(CliMul, OutputReparses) {
  testing_oracle::MaskSource gen(31);
  for (int i = 0; i < 100; ++i) {
    const std::string e = "i_" + std::to_string(gen()) + " * i_" + std::to_string(gen()) +
                          " - 2/3i_" + std::to_string(gen() & 0xFFFF);
    const Result r = run({"mul", e});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string printed = lines(r.out).at(0);
    const AlgebraContext ctx{Mu::minus};
    ASSERT_EQ(evaluate(parse_expression(printed), ctx), evaluate(parse_expression(e), ctx))
        << printed;
  }
}

TEST(CliTable, Examples) {
  EXPECT_EQ(run({"table", "1", "--mu", "sym"}).out, "1 1\n1 m\n");
  EXPECT_EQ(run({"table", "3", "--mu", "sym"}).out, golden::kDimension3);
  const auto csv = lines(run({"table", "2", "--mu", "-1", "--format", "csv"}).out);
  ASSERT_EQ(csv.size(), 4u);
  for (std::size_t p = 0; p < 4; ++p) {
    std::string expected;
    for (int q = 0; q < 4; ++q)
      expected += (q ? "," : "") + std::to_string(testing_oracle::twist(p, q, -1));
    EXPECT_EQ(csv[p], expected);
  }
  EXPECT_EQ(run({"table", "4", "--blocks"}).out, golden::kDimension4Blocks);
  EXPECT_EQ(run({"table", "2", "--blocks", "--mu", "-1"}).out, "A A\nB -B\n");
}

TEST(CliTable, RangeErrors) {
  EXPECT_EQ(run({"table", "0"}).code, 2);
  EXPECT_EQ(run({"table", "13"}).code, 2);
  EXPECT_EQ(run({"table", "1", "--blocks"}).code, 2);
  EXPECT_EQ(run({"table", "2", "--format", "xml"}).code, 2);
}

TEST(CliTrace, Examples) {
  const auto path = lines(run({"trace", "2636", "1143", "--mu", "-1"}).out);
  const std::vector<std::string> expected{
      "(1,0) -> B",  "(0,1) -> -B", "(1,0) -> -A", "(0,0) -> -A", "(0,0) -> -A",
      "(1,1) -> B",  "(0,1) -> -B", "(0,1) -> B",  "(1,0) -> A",  "(1,1) -> -B",
      "(0,1) -> B",  "(0,1) -> -B", "clf = -1"};
  EXPECT_EQ(path, expected);
  EXPECT_EQ(run({"trace", "0", "0"}).out, "clf = +1\n");
  EXPECT_EQ(run({"trace", "1", "1", "--mu", "-1"}).out, "(1,1) -> -B\nclf = -1\n");
  EXPECT_EQ(run({"trace", "x", "1"}).code, 2);
}

TEST(CliSelftest, PassesByDefault) {
  const Result r = run({"selftest"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(0), "ok: 4x65536 pairs x 2 mu, 0 mismatches");
  const Result small = run({"selftest", "--n", "4"});
  EXPECT_EQ(small.code, 0);
  EXPECT_EQ(lines(small.out).at(0), "ok: 4x256 pairs x 2 mu, 0 mismatches");
  EXPECT_EQ(run({"selftest", "--n", "13"}).code, 2);
}

TEST(CliSelftest, InjectedFaultReportsCounterexample) {
  SignSuite suite = default_sign_suite();
  suite[3].fn = &faulty_closed;
  const Result r = run({"selftest", "--n", "4"}, suite);
  EXPECT_EQ(r.code, 1);
  const auto out = lines(r.out);
  EXPECT_EQ(out.at(0), "FAIL: 4x256 pairs x 2 mu, 2 mismatches");
  EXPECT_EQ(out.at(1), "  first mismatch: p=5 q=7 mu=+1 oracle=+1 recursive=+1 tree=+1 closed=-1");
  EXPECT_EQ(out.at(2).rfind("FAIL: 4096 triples x 2 mu, ", 0), 0u) << out.at(2);
}

TEST(CliBench, ReportShape) {
  const Result r = run({"bench", "--pairs", "1000"});
  ASSERT_EQ(r.code, 0);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 4u);
  const char* names[] = {"oracle", "recursive", "tree", "closed"};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(out[i].rfind(names[i], 0), 0u) << out[i];
    std::istringstream in(out[i].substr(std::string(names[i]).size()));
    double ns = -1;
    in >> ns;
    EXPECT_GT(ns, 0.0) << out[i];
  }
  EXPECT_EQ(run({"bench", "--pairs", "0"}).code, 2);
}

TEST(CliBench, WorkloadIsSeeded) {
  EXPECT_EQ(bench_workload(100), bench_workload(100));
  const auto results = run_bench(2000);
  for (const auto& r : results) EXPECT_EQ(r.negatives, results.front().negatives);
}

TEST(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("selftest"), std::string::npos);
}
