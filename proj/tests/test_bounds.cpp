#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "triarr/bounds.hpp"

using namespace triarr;

namespace {

// Maximum number of triples on s points, any two sharing at most one point.
struct Packing {
  int s;
  std::vector<std::array<int, 3>> triples;
  std::vector<std::vector<bool>> used;
  int best = 0;

  explicit Packing(int n) : s(n), used(n, std::vector<bool>(n, false)) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  }

  void dfs(std::size_t from, int count, int free_pairs) {
    best = std::max(best, count);
    if (count + free_pairs / 3 <= best) return;
    for (std::size_t i = from; i < triples.size(); ++i) {
      const auto [a, b, c] = triples[i];
      if (used[a][b] || used[a][c] || used[b][c]) continue;
      used[a][b] = used[a][c] = used[b][c] = true;
      dfs(i + 1, count + 1, free_pairs - 3);
      used[a][b] = used[a][c] = used[b][c] = false;
    }
  }

  int solve() {
    dfs(0, 0, s * (s - 1) / 2);
    return best;
  }
};

}  // namespace

TEST(Bounds, PrintedTable) {
  const std::vector<std::int64_t> expected = {0, 0, 1, 1, 2, 4, 7, 8, 12, 13, 17, 20};
  for (int s = 1; s <= 12; ++s) EXPECT_EQ(schoenheim_u3(s), expected[s - 1]) << "s=" << s;
}

TEST(Bounds, EpsilonOnlyForFiveModSix) {
  for (int s = 1; s <= 60; ++s) EXPECT_EQ(schoenheim_eps(s), s % 6 == 5 ? 1 : 0);
}

TEST(Bounds, U3NeverExceedsNaive) {
  for (int s = 1; s <= 200; ++s) {
    EXPECT_LE(schoenheim_u3(s), naive_bound(s));
    EXPECT_EQ(naive_bound(s), s * (s - 1) / 6);
  }
}

// The bound is exact for triple packings at small s.
TEST(Bounds, MatchesBruteForcePackingNumbers) {
  for (int s = 1; s <= 9; ++s) EXPECT_EQ(schoenheim_u3(s), Packing(s).solve()) << "s=" << s;
}

TEST(Bounds, TableRows) {
  const auto rows = bound_table(12);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[10].s, 11);
  EXPECT_EQ(rows[10].u3, 17);
  EXPECT_EQ(rows[10].eps, 1);
  EXPECT_EQ(rows[10].naive, 18);
}

static_assert(schoenheim_u3(7) == 7);
