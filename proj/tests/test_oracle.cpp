#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "tileforge/error.hpp"
#include "tileforge/oracle.hpp"

namespace tileforge {
namespace {

// Kasteleyn's product for the m x n rectangle, in floating point.
double kasteleyn(int m, int n) {
  double prod = 1.0;
  for (int j = 1; j <= (m + 1) / 2; ++j) {
    for (int k = 1; k <= (n + 1) / 2; ++k) {
      const double a = std::cos(M_PI * j / (m + 1)), b = std::cos(M_PI * k / (n + 1));
      prod *= 4 * a * a + 4 * b * b;
    }
  }
  return prod;
}

TEST(CountRect, KnownValues) {
  const std::vector<int> fib{1, 2, 3, 5, 8, 13, 21, 34};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(oracle::count_rect(2, n), static_cast<oracle::Count>(fib[n - 1]));
  EXPECT_EQ(oracle::count_rect(4, 4), 36u);
  EXPECT_EQ(oracle::count_rect(6, 6), 6728u);
  EXPECT_EQ(oracle::count_rect(8, 8), 12988816u);
  EXPECT_EQ(oracle::count_rect(3, 3), 0u);
  EXPECT_EQ(oracle::count_rect(12, 12), static_cast<oracle::Count>(53060477521960000ULL));
  EXPECT_EQ(oracle::count_rect(4, 6), oracle::count_rect(6, 4));
}

TEST(CountRect, AgreesWithKasteleyn) {
  for (int m = 2; m <= 8; m += 2) {
    for (int n = 1; n <= 10; ++n) {
      const double want = kasteleyn(m, n);
      EXPECT_NEAR(static_cast<double>(oracle::count_rect(m, n)), want, 1e-6 * want + 0.5) << m << "x" << n;
    }
  }
}

TEST(CountRect, Limits) {
  EXPECT_THROW(oracle::count_rect(0, 4), Error);
  EXPECT_THROW(oracle::count_rect(13, 13), Error);
  try {
    oracle::count_rect(12, 400);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
}

TEST(CountHexagon, Product) {
  EXPECT_EQ(oracle::count_hexagon(1, 1, 1), 2u);
  EXPECT_EQ(oracle::count_hexagon(2, 2, 1), 6u);
  EXPECT_EQ(oracle::count_hexagon(2, 2, 2), 20u);
  EXPECT_EQ(oracle::count_hexagon(3, 3, 3), 980u);
  EXPECT_EQ(oracle::count_hexagon(1, 1, 5), 6u);  // one column, heights 0..5
  EXPECT_EQ(oracle::to_string(oracle::count_hexagon(6, 6, 6)), "1478619421136");
  EXPECT_EQ(oracle::to_string(oracle::count_hexagon(10, 10, 10)), "9265037718181937012241727284450000");
}

TEST(Bfs, MatchesClosedForms) {
  EXPECT_EQ(oracle::enumerate_bfs(make_rect(2, 2)).words.size(), 2u);
  EXPECT_EQ(oracle::enumerate_bfs(make_rect(2, 3)).words.size(), 3u);
  for (int m = 1; m <= 4; ++m) {
    for (int n = m; n <= 6; ++n) {
      if (m * n % 2) continue;
      EXPECT_EQ(oracle::enumerate_bfs(make_rect(m, n)).words.size(), oracle::count_rect(m, n)) << m << "x" << n;
    }
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int c = 1; c <= 2; ++c) {
        EXPECT_EQ(oracle::enumerate_bfs(make_hexagon(a, b, c)).words.size(), oracle::count_hexagon(a, b, c));
      }
    }
  }
}

TEST(Bfs, WordsSortedAndAligned) {
  const Domain d = make_rect(4, 4);
  const auto all = oracle::enumerate_bfs(d);
  EXPECT_TRUE(std::is_sorted(all.words.begin(), all.words.end()));
  EXPECT_EQ(std::adjacent_find(all.words.begin(), all.words.end()), all.words.end());
  ASSERT_EQ(all.words.size(), all.tilings.size());
  // Lowest word is all zeros.
  for (int k : all.words.front().values()) EXPECT_EQ(k, 0);
  EXPECT_THROW(oracle::enumerate_bfs(make_rect(3, 3)), Error);
  EXPECT_THROW(oracle::enumerate_bfs(testing::imbalanced_l_shape()), Error);
}

TEST(LexSuccessor, Basics) {
  const auto all = oracle::enumerate_bfs(make_rect(2, 2));
  EXPECT_EQ(oracle::lex_successor(all, Word::parse("0")), Word::parse("1"));
  EXPECT_FALSE(oracle::lex_successor(all, Word::parse("1")).has_value());
  EXPECT_THROW(oracle::lex_successor(all, Word::parse("2")), Error);
}

TEST(FlipDistance, Basics) {
  const auto all = oracle::enumerate_bfs(make_rect(2, 2));
  EXPECT_EQ(oracle::flip_distance(all.tilings[0], all.tilings[0]), 0);
  EXPECT_EQ(oracle::flip_distance(all.tilings[0], all.tilings[1]), 1);
  const auto d = oracle::flip_distances(oracle::enumerate_bfs(make_rect(4, 4)));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) EXPECT_EQ(d[i][j], d[j][i]);
  }
}

}  // namespace
}  // namespace tileforge
