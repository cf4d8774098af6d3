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

#include "clifftwist/twist_table.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "golden_tables.hpp"
#include "oracle.hpp"

using namespace clifftwist;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(SymbolicSign, FourDistinctValuesAndMuSquared) {
  const SymbolicSign one, m = SymbolicSign::mu();
  EXPECT_NE(one, -one);
  EXPECT_NE(one, m);
  EXPECT_NE(m, -m);
  EXPECT_EQ(m * m, one);
  EXPECT_EQ((-m) * m, -one);
  EXPECT_EQ(m.spelling(), "m");
  EXPECT_EQ((-m).spelling(), "-m");
  EXPECT_EQ((-one).substitute(Mu::minus), Sign::minus());
  EXPECT_EQ((-m).substitute(Mu::minus), Sign::plus());
}

TEST(TableDirect, GoldenSmallTables) {
  EXPECT_EQ(render_table(table_direct(1)), golden::kDimension1);
  EXPECT_EQ(render_table(table_direct(2)), golden::kDimension2);
  EXPECT_EQ(render_table(table_direct(3)), golden::kDimension3);
  EXPECT_EQ(table_direct(3).at(4, 3), SymbolicSign::one());
}

TEST(TableDirect, RangeChecked) {
  EXPECT_THROW(table_direct(0), DimensionError);
  EXPECT_THROW(table_direct(13), DimensionError);
  EXPECT_THROW(table_blocks(13), DimensionError);
  EXPECT_THROW(render_block_letters(1), DimensionError);
}

TEST(TableDirect, RowAndColumnZeroAreOne) {
  const TwistTable t = table_direct(6);
  for (std::size_t k = 0; k < t.side(); ++k) {
    EXPECT_EQ(t.at(0, k), SymbolicSign::one());
    EXPECT_EQ(t.at(k, 0), SymbolicSign::one());
  }
}

TEST(TableDirect, SubstitutionMatchesReference) {
  for (int n = 1; n <= 8; ++n) {
    const TwistTable t = table_direct(n);
    for (const int mu : {1, -1}) {
      const Mu m = mu == 1 ? Mu::plus : Mu::minus;
      for (std::size_t p = 0; p < t.side(); ++p)
        for (std::size_t q = 0; q < t.side(); ++q)
          ASSERT_EQ(t.at(p, q).substitute(m).value(), testing_oracle::twist(p, q, mu));
    }
  }
}

TEST(TableBlocks, MatchesDirect) {
  EXPECT_EQ(render_table(table_blocks(1)), "1 1\n1 m\n");
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(table_blocks(n), table_direct(n)) << n;
}

TEST(TableBlocks, SubstitutionGridMatchesDirectGrid) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(block_grid_by_substitution(n), block_grid_direct(n)) << n;
}

TEST(TableBlocks, CoefficientCommutesWithSubstitution) {
  // Scaling a letter by c then substituting equals substituting then scaling
  // every resulting entry by c.
  for (const Letter letter : {Letter::A, Letter::B}) {
    for (const SymbolicSign c : {SymbolicSign::one(), -SymbolicSign::one(), SymbolicSign::mu(),
                                 -SymbolicSign::mu()}) {
      BlockGrid scaled(1), plain(1);
      scaled.at(0, 0) = BlockCell{c, letter};
      plain.at(0, 0) = BlockCell{SymbolicSign::one(), letter};
      for (int round = 0; round < 3; ++round) {
        scaled = substitute_blocks(scaled);
        plain = substitute_blocks(plain);
      }
      const TwistTable after = expand_blocks(scaled);
      const TwistTable before = expand_blocks(plain);
      for (std::size_t p = 0; p < after.side(); ++p)
        for (std::size_t q = 0; q < after.side(); ++q) ASSERT_EQ(after.at(p, q), c * before.at(p, q));
    }
  }
}

TEST(RenderTable, Formats) {
  EXPECT_EQ(render_table(table_direct(1), TableFormat::text, MuMode::symbolic), "1 1\n1 m\n");
  EXPECT_EQ(render_table(table_direct(1), TableFormat::text, MuMode::minus), "1 1\n1 -1\n");
  EXPECT_EQ(render_table(table_direct(1), TableFormat::csv, MuMode::plus), "1,1\n1,1\n");
  const auto rows = lines(render_table(table_direct(2), TableFormat::csv, MuMode::minus));
  ASSERT_EQ(rows.size(), 4u);
  // Row p = 3 at mu = -1, from the reference.
  std::string expected;
  for (int q = 0; q < 4; ++q) expected += (q ? "," : "") + std::to_string(testing_oracle::twist(3, q, -1));
  EXPECT_EQ(expected, "1,1,-1,-1");
  EXPECT_EQ(rows[3], expected);
}

TEST(RenderBlockLetters, Dimension4Layout) {
  const std::string text = render_block_letters(4);
  EXPECT_EQ(text, golden::kDimension4Blocks);
  const auto rows = lines(text);
  EXPECT_EQ(rows[0], "A A A A A A A A");
  EXPECT_EQ(block_grid_direct(4).at(1, 1), (BlockCell{SymbolicSign::mu(), Letter::B}));
  EXPECT_EQ(render_block_letters(2), "A A\nB mB\n");
}

TEST(Quaternions, SignStructureAtMuMinusOne) {
  // i -> i_1, j -> i_2, k -> i_3
  const TwistTable t = table_direct(2);
  auto at = [&](std::size_t p, std::size_t q) { return t.at(p, q).substitute(Mu::minus); };
  for (std::size_t u = 1; u <= 3; ++u) EXPECT_EQ(at(u, u), Sign::minus());
  EXPECT_EQ(at(1, 2), Sign::plus());   // ij = k
  EXPECT_EQ(at(2, 1), Sign::minus());  // ji = -k
  EXPECT_EQ(at(2, 3), Sign::plus());   // jk = i
  EXPECT_EQ(at(3, 1), Sign::plus());   // ki = j
  EXPECT_EQ(at(3, 2), Sign::minus());  // kj = -i
  // Complex numbers: i_1^2 = -1.
  EXPECT_EQ(table_direct(1).at(1, 1).substitute(Mu::minus), Sign::minus());
}

TEST(Associativity, DimensionThreeIsNotOctonionic) {
  const TwistTable t = table_direct(3);
  auto clf = [&](std::size_t p, std::size_t q) { return t.at(p, q).substitute(Mu::minus); };
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q)
      for (std::size_t r = 0; r < 8; ++r)
        ASSERT_EQ(clf(p, q) * clf(p ^ q, r), clf(q, r) * clf(p, q ^ r));
}
