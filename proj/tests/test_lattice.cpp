#include <gtest/gtest.h>

#include <set>

#include "ratcat/lattice.hpp"

using namespace ratcat;

namespace {

// Counts step words by brute force over all placements of the N vertical steps,
// testing each lattice point against x/M + y/N <= 1.
std::size_t brute_count(int N, int M) {
  const int len = N + M;
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    if (__builtin_popcount(mask) != N) continue;
    Int x = M, y = 0;
    bool ok = true;
    for (int k = 0; k < len && ok; ++k) {
      if (mask >> k & 1u) ++y; else --x;
      ok = x * N + y * M <= Int(N) * M;
    }
    count += ok;
  }
  return count;
}

BigInt catalan(unsigned k) { return binomial(2 * k, k) / (k + 1); }

}  // namespace

TEST(GridParams, DerivedSizes) {
  const GridParams p(3, 2, 4);
  EXPECT_EQ(p.N(), 12);
  EXPECT_EQ(p.M(), 8);
  EXPECT_EQ(p.delta(), 1);
  EXPECT_EQ(GridParams(5, 3).delta(), 4);
  EXPECT_EQ(GridParams::from_rectangle(6, 4), GridParams(3, 2, 2));
  EXPECT_EQ(GridParams::from_rectangle(5, 3), GridParams(5, 3, 1));
}

TEST(GridParams, RejectsBadInput) {
  EXPECT_THROW(GridParams(2, 4, 1), Error);
  EXPECT_THROW(GridParams(0, 1, 1), Error);
  EXPECT_THROW(GridParams(1, 1, 0), Error);
  try {
    GridParams(4, 6);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParams);
  }
}

TEST(BoxRank, Values) {
  EXPECT_EQ(box_rank(GridParams(5, 3), 0, 0), 7);
  EXPECT_EQ(box_rank(GridParams(3, 2, 3), 0, 0), 13);
  EXPECT_EQ(box_rank(GridParams(3, 2, 3), 5, 0), -2);
  // Moving right subtracts n, moving up subtracts m.
  const GridParams p(5, 3);
  EXPECT_EQ(box_rank(p, 1, 0) - box_rank(p, 0, 0), -5);
  EXPECT_EQ(box_rank(p, 0, 1) - box_rank(p, 0, 0), -3);
}

TEST(DyckPath, ParseErrors) {
  const GridParams p(5, 3);
  auto kind = [&](const std::string& s) {
    try {
      DyckPath::parse(s, p);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::FormulaMismatch;
  };
  EXPECT_EQ(kind("hhvhvvv"), ErrorKind::MalformedPath);
  EXPECT_EQ(kind("hhvhvvvx"), ErrorKind::MalformedPath);
  EXPECT_EQ(kind("hhhhvvvv"), ErrorKind::MalformedPath);
  EXPECT_EQ(kind("vvvvvhhh"), ErrorKind::AboveDiagonal);
  EXPECT_NO_THROW(DyckPath::parse("hhvhvvvv", p));
  EXPECT_NO_THROW(DyckPath::parse("hvhvvhhhvhvvvvv", GridParams(3, 2, 3)));
}

TEST(DyckPath, Points) {
  const auto D = DyckPath::parse("hhvhvvvv", GridParams(5, 3));
  const auto pts = D.points();
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts.front(), (Point{3, 0}));
  EXPECT_EQ(pts.back(), (Point{0, 5}));
  EXPECT_EQ(D.point(3), (Point{1, 1}));
}

TEST(StepRanks, Examples) {
  EXPECT_EQ(step_ranks(DyckPath::parse("hhvhvvvv", GridParams(5, 3))),
            (std::vector<Int>{-3, 2, 7, 4, 9, 6, 3, 0}));
  EXPECT_EQ(step_ranks(DyckPath::parse("hvhvvhhhvhvvvvv", GridParams(3, 2, 3))),
            (std::vector<Int>{-2, 1, -1, 2, 0, -2, 1, 4, 7, 5, 8, 6, 4, 2, 0}));
}

TEST(StepRanks, MatchBoxRanks) {
  for (auto [N, M] : std::vector<std::pair<int, int>>{{5, 3}, {4, 6}, {6, 4}, {3, 3}, {2, 7}}) {
    const auto p = GridParams::from_rectangle(N, M);
    for (const auto& D : enumerate_paths(p)) {
      const auto ranks = step_ranks(D);
      const auto pts = D.points();
      for (std::size_t k = 0; k < D.size(); ++k) EXPECT_EQ(ranks[k], box_rank(p, pts[k].x - 1, pts[k].y));
      EXPECT_EQ(ranks.back(), 0);
    }
  }
}

TEST(Area, SmallValues) {
  const GridParams p(5, 3);
  EXPECT_EQ(area(DyckPath::parse("hhhvvvvv", p)), 4);
  EXPECT_EQ(area(DyckPath::parse("hvhvhvvv", p)), 1);
  EXPECT_EQ(area(DyckPath::parse("hhvhvvvv", p)), 3);
  EXPECT_EQ(subdiagonal_boxes(p), 4);
  EXPECT_EQ(subdiagonal_boxes(GridParams(1, 1, 4)), 6);
}

TEST(Area, AreaPlusBoxesIsConstant) {
  for (auto [N, M] : std::vector<std::pair<int, int>>{{5, 3}, {6, 4}, {4, 4}, {3, 6}}) {
    const auto p = GridParams::from_rectangle(N, M);
    for (const auto& D : enumerate_paths(p)) EXPECT_EQ(area(D) + box_count(D), subdiagonal_boxes(p));
  }
}

TEST(Enumerate, MatchesBruteForce) {
  for (int N = 1; N <= 8; ++N)
    for (int M = 1; N + M <= 14; ++M) {
      const auto p = GridParams::from_rectangle(N, M);
      const auto paths = enumerate_paths(p);
      EXPECT_EQ(paths.size(), brute_count(N, M)) << N << "x" << M;
      std::set<std::string> words;
      for (const auto& D : paths) words.insert(D.steps());
      EXPECT_EQ(words.size(), paths.size());
      EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
    }
}

TEST(Enumerate, Limit) {
  EXPECT_THROW(enumerate_paths(GridParams(1, 1, 13)), Error);
  EXPECT_EQ(enumerate_paths(GridParams(1, 1, 3), 6).size(), 5u);
}

TEST(Bizley, MatchesEnumeration) {
  for (int N = 1; N <= 9; ++N)
    for (int M = 1; N + M <= 14; ++M) {
      const auto p = GridParams::from_rectangle(N, M);
      EXPECT_EQ(bizley_count(p.n(), p.m(), p.d()), BigInt(brute_count(N, M))) << N << "x" << M;
    }
}

TEST(Bizley, CatalanDiagonal) {
  for (unsigned k = 1; k <= 12; ++k) EXPECT_EQ(bizley_count(1, 1, int(k)), catalan(k));
  // Coprime case: binomial(n+m, n) / (n+m).
  EXPECT_EQ(bizley_count(5, 3, 1), BigInt(7));
  EXPECT_EQ(bizley_count(7, 5, 1), binomial(12, 5) / 12);
}
