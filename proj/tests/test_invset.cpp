#include <gtest/gtest.h>

#include <set>

#include "ratcat/invset.hpp"
#include "ratcat/sweep.hpp"

using namespace ratcat;

namespace {

// Smallest (N,M)-invariant set containing the elements, as a finite window
// [lo, hi) closed by repeatedly adding N and M.
std::set<Int> closure_window(const std::vector<Int>& elems, Int N, Int M, Int hi) {
  std::set<Int> out;
  std::vector<Int> todo(elems.begin(), elems.end());
  while (!todo.empty()) {
    const Int x = todo.back();
    todo.pop_back();
    if (x >= hi || out.count(x)) continue;
    out.insert(x);
    todo.push_back(x + N);
    todo.push_back(x + M);
  }
  return out;
}

void expect_matches_window(const InvariantSet& s, const std::set<Int>& w, Int lo, Int hi) {
  for (Int x = lo; x < hi; ++x) EXPECT_EQ(s.contains(x), w.count(x) > 0) << x;
}

}  // namespace

TEST(InvariantSet, Semigroup) {
  const auto s = semigroup(5, 3);
  EXPECT_EQ(generators_n(s), (std::vector<Int>{0, 3, 6, 9, 12}));
  EXPECT_EQ(gap(s), 4);
  expect_matches_window(s, closure_window({0}, 5, 3, 40), -10, 40);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 7}, {4, 5}, {5, 7}})
    EXPECT_EQ(gap(semigroup(n, m)), GridParams(n, m).delta());
}

TEST(InvariantSet, ExampleSet) {
  const GridParams p(5, 3);
  const auto s = InvariantSet::from_generators(p, {0, 7});
  expect_matches_window(s, closure_window({0, 7}, 5, 3, 40), -10, 40);
  EXPECT_EQ(generators_n(s), (std::vector<Int>{0, 3, 6, 7, 9}));
  EXPECT_EQ(cogenerators_m(s), (std::vector<Int>{-3, 2, 4}));
  EXPECT_EQ(gap(s), 3);
  EXPECT_TRUE(s.normalized());
}

TEST(InvariantSet, NaturalNumbers) {
  const auto s = InvariantSet::from_generators(GridParams(1, 1), {0});
  EXPECT_EQ(generators_n(s), (std::vector<Int>{0}));
  EXPECT_EQ(cogenerators_m(s), (std::vector<Int>{-1}));
  EXPECT_EQ(gap(s), 0);
}

TEST(InvariantSet, ClosureMatchesOracle) {
  const GridParams p(3, 2, 2);
  const std::vector<std::vector<Int>> lists{{0, 1}, {0, 3, 5}, {2, 7, 9}, {0, 1, 2, 3, 4, 5}, {-3, 4}};
  for (const auto& l : lists) {
    const auto s = InvariantSet::from_generators(p, l);
    expect_matches_window(s, closure_window(l, 6, 4, 60), -20, 60);
  }
}

TEST(InvariantSet, Errors) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::FormulaMismatch;
  };
  EXPECT_EQ(kind([] { InvariantSet::from_generators(GridParams(1, 1, 2), {0}); }), ErrorKind::InvalidSet);
  EXPECT_EQ(kind([] { InvariantSet::from_generators(GridParams(1, 1, 2), std::vector<Int>{}); }),
            ErrorKind::EmptyInput);
  EXPECT_EQ(kind([] { InvariantSet::from_gen_vector(GridParams(5, 3), {0, 1, 2, 3, 5}); }), ErrorKind::InvalidSet);
  EXPECT_EQ(kind([] { map_D_coprime(InvariantSet::from_generators(GridParams(1, 1, 2), {0, 1})); }),
            ErrorKind::NotCoprimeCase);
  EXPECT_EQ(kind([] { map_D_coprime(semigroup(5, 3).shifted(1)); }), ErrorKind::NotNormalized);
  const std::vector<Int> bad{0, 1, 2, 3, 4, 5, 6, 8};
  EXPECT_EQ(kind([&] { InvariantSet::from_skeleton(GridParams(5, 3), bad); }), ErrorKind::InvalidSkeleton);
}

TEST(Skeleton, Example) {
  const auto s = InvariantSet::from_generators(GridParams(5, 3), {0, 7});
  const Skeleton sk = skeleton(s);
  EXPECT_EQ(sk.values(), (std::vector<Int>{-3, 0, 2, 3, 4, 6, 7, 9}));
  EXPECT_EQ(sk.pattern(), "hvhvhvvv");
  const auto d1 = InvariantSet::from_generators(GridParams(3, 2, 2), {0, 4, 8, 9, 13, 17});
  EXPECT_EQ(skeleton(d1).values(), (std::vector<Int>{-4, 0, 2, 4, 5, 8, 9, 11, 13, 17}));
}

TEST(Skeleton, Properties) {
  for (auto p : {GridParams(5, 3), GridParams(3, 2, 2), GridParams(1, 1, 3), GridParams(2, 3, 2)}) {
    const Int N = p.N(), M = p.M();
    std::vector<std::vector<Int>> lists;
    for (Int a = 0; a < N; ++a)
      for (Int b = 0; b < N + 4; ++b) {
        std::vector<Int> l{0, b};
        for (Int c = 1; c < p.d(); ++c) l.push_back(c + p.d() * (a + c));
        lists.push_back(l);
      }
    for (const auto& l : lists) {
      const InvariantSet s = InvariantSet::from_generators(p, l);
      const Skeleton sk = skeleton(s);
      const auto vals = sk.values();
      EXPECT_EQ(Int(vals.size()), N + M);
      const std::string pattern = sk.pattern();
      EXPECT_EQ(std::count(pattern.begin(), pattern.end(), 'v'), N);
      EXPECT_EQ(InvariantSet::from_skeleton(p, vals), s);
      for (Int x = s.min() - 2 * (N + M); x < s.min() + 3 * (N + M); ++x) {
        const bool in = std::binary_search(vals.begin(), vals.end(), x);
        // x + M is an (N+M)-generator exactly when x is in the skeleton.
        EXPECT_EQ(in, s.contains(x + M) && !s.contains(x - N)) << x;
      }
      for (const auto& e : sk.entries) EXPECT_EQ(e.residue, floor_mod(e.value, p.d()));
    }
  }
}

TEST(MapD, CoprimeBijection) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 3}, {3, 5}, {4, 3}, {7, 2}, {5, 4}, {1, 6}}) {
    const GridParams p(n, m);
    std::set<std::vector<Int>> seen;
    for (const auto& D : enumerate_paths(p)) {
      const auto s = invset_from_path_coprime(D);
      EXPECT_TRUE(s.normalized());
      EXPECT_EQ(map_D_coprime(s), D);
      EXPECT_EQ(gap(s), area(D));
      EXPECT_EQ(map_G(s), zeta(D));
      EXPECT_EQ(dinv_invset(s), dinv_sweep(D));
      seen.insert(s.gen());
    }
    EXPECT_EQ(seen.size(), enumerate_paths(p).size());
  }
  EXPECT_EQ(map_D_coprime(InvariantSet::from_generators(GridParams(5, 3), {0, 7})).steps(), "hhvhvvvv");
}

TEST(MapG, Example) {
  EXPECT_EQ(map_G(InvariantSet::from_generators(GridParams(5, 3), {0, 7})).steps(), "hvhvhvvv");
}

TEST(Decompose, ExamplePart) {
  const auto d1 = InvariantSet::from_generators(GridParams(3, 2, 2), {0, 4, 8, 9, 13, 17});
  const auto parts = decompose(d1);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].shift, 0);
  EXPECT_EQ(generators_n(parts[0].part), (std::vector<Int>{0, 2, 4}));
  EXPECT_EQ(cogenerators_m(parts[0].part), (std::vector<Int>{-2, 1}));
  EXPECT_EQ(compose(GridParams(3, 2, 2), parts), d1);
}

TEST(Decompose, GapIdentityAndRoundTrip) {
  const GridParams p(1, 1, 3);
  for (Int a = 0; a < 6; ++a)
    for (Int b = 0; b < 6; ++b) {
      const auto s = InvariantSet::from_generators(p, {0, 3 * a + 1, 3 * b + 2});
      const auto parts = decompose(s);
      Int total = 0;
      for (const auto& rp : parts) {
        EXPECT_TRUE(rp.part.normalized());
        total += rp.shift + gap(rp.part);
      }
      EXPECT_EQ(total, gap(s));
      EXPECT_EQ(total, a + b);
      EXPECT_EQ(compose(p, parts), s);
    }
}
