#include <gtest/gtest.h>

#include <set>

#include "ratcat/equiv.hpp"
#include "ratcat/series.hpp"

using namespace ratcat;

namespace {

InvariantSet twelve_by_eight() {
  std::vector<Int> el{0, 1, 5, 8, 9, 12, 13, 16, 17, 20, 21, 24, 25, 27, 28, 29, 30};
  for (Int x = 32; x < 50; ++x) el.push_back(x);
  return InvariantSet::from_generators(GridParams(3, 2, 4), el);
}

// Two parts stay in the same interleaving after shifting part 1 by a exactly
// when no element of one part passes an element of the other on the way.
bool order_preserved(const std::vector<Int>& s0, const std::vector<Int>& s1, Int a) {
  for (Int x : s0)
    for (Int y : s1) {
      if (y + a == x) return false;
      if ((y < x) != (y + a < x)) return false;
    }
  return true;
}

}  // namespace

TEST(ShiftBounds, Example) {
  const auto gd = build_graph_data(twelve_by_eight());
  const std::vector<std::vector<Bound>> b{{std::nullopt, 0, 5, 2},
                                          {2, std::nullopt, 12, 9},
                                          {std::nullopt, std::nullopt, std::nullopt, 0},
                                          {std::nullopt, std::nullopt, 2, std::nullopt}};
  EXPECT_EQ(gd.bounds.b, b);
  EXPECT_EQ(gd.shift, (std::vector<Int>{0, 0, -4, -2}));
  EXPECT_EQ(gd.level, (std::vector<int>{0, 1, 2, 1}));
  EXPECT_EQ(minimal_shifting(gd.bounds), gd.shift);
}

TEST(ShiftBounds, TwoPartsMatchInterleaving) {
  for (auto [N, M] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {6, 4}, {4, 6}}) {
    const auto p = GridParams::from_rectangle(N, M);
    for (const auto& s : enumerate_invsets_by_gap(p, 6)) {
      const Skeleton sk = skeleton(s);
      const ShiftBounds b = shift_bounds(sk);
      for (Int a = -15; a <= 15; ++a)
        EXPECT_EQ(is_acceptable_shifting(b, {0, a}), order_preserved(sk.part(0), sk.part(1), a));
    }
  }
}

TEST(ShiftBounds, OddPartOfExample) {
  const auto d1 = InvariantSet::from_generators(GridParams(3, 2, 2), {0, 4, 8, 9, 13, 17});
  const ShiftBounds b = shift_bounds(skeleton(d1));
  std::vector<Int> ok;
  for (Int a = -10; a <= 10; ++a)
    if (is_acceptable_shifting(b, {0, a})) ok.push_back(a);
  EXPECT_EQ(ok, (std::vector<Int>{0, 1, 2}));
  EXPECT_EQ(minimal_shifting(b), (std::vector<Int>{0, 0}));
}

TEST(ShiftBounds, Infeasible) {
  ShiftBounds b{2, {}, {{std::nullopt, -1}, {-1, std::nullopt}}};
  EXPECT_THROW(minimal_shifting(b), Error);
  ShiftBounds unbounded{2, {}, {{std::nullopt, std::nullopt}, {std::nullopt, std::nullopt}}};
  EXPECT_THROW(minimal_shifting(unbounded), Error);
}

TEST(Graph, Example) {
  const auto s = twelve_by_eight();
  const auto g = build_graph(s);
  EXPECT_EQ(g.labels, (std::vector<std::vector<Int>>{{-2, 0, 1, 2, 4}, {-2, -1, 0, 1, 2}, {4, 5, 6, 7, 8},
                                                     {4, 6, 7, 8, 10}}));
  EXPECT_EQ(g.edges, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {3, 2}}));
  EXPECT_EQ(levels(g), (std::vector<int>{0, 1, 2, 1}));
  EXPECT_EQ(validate_graph(g), levels(g));
}

TEST(Graph, ValidationErrors) {
  auto g = build_graph(twelve_by_eight());
  auto missing = g;
  missing.edges.erase(missing.edges.begin() + 3);
  EXPECT_THROW(validate_graph(missing), Error);
  auto cyclic = g;
  cyclic.edges[3] = {2, 3};
  cyclic.edges.push_back({3, 0});
  EXPECT_THROW(validate_graph(cyclic), Error);
  auto unnormalized = g;
  for (Int& x : unnormalized.labels[0]) x += 1;
  EXPECT_THROW(validate_graph(unnormalized), Error);
}

TEST(Canonical, RelabelingInvariant) {
  const auto g = build_graph(twelve_by_eight());
  const std::string cf = canonical_form(g);
  EXPECT_EQ(cf, "n=3;m=2;d=4;src={-2,0,1,2,4};v={-2,-1,0,1,2},{4,5,6,7,8},{4,6,7,8,10};e=0>1,0>2,0>3,3>2");
  std::vector<int> perm{0, 1, 2, 3};
  do {
    LabeledDigraph h{g.params, std::vector<std::vector<Int>>(4), {}, perm[g.source]};
    for (int v = 0; v < 4; ++v) h.labels[perm[v]] = g.labels[v];
    for (auto [i, j] : g.edges) h.edges.push_back({perm[i], perm[j]});
    std::sort(h.edges.begin(), h.edges.end());
    EXPECT_EQ(canonical_form(h), cf);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Canonical, TooManyVertices) {
  std::vector<Int> el;
  for (Int x = 0; x < 9; ++x) el.push_back(x);
  const auto s = InvariantSet::from_generators(GridParams(1, 1, 9), el);
  EXPECT_THROW(canonical_form(build_graph(s)), Error);
}

TEST(Representative, Example) {
  const auto s = twelve_by_eight();
  const auto g = build_graph(s);
  const LabeledDigraph left{g.params, {g.labels[0], g.labels[3], g.labels[1], g.labels[2]},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 3}}, 0};
  const auto rep = minimal_representative(left);
  const Skeleton sk = skeleton(rep);
  EXPECT_EQ(sk.part(0), (std::vector<Int>{-8, 0, 4, 8, 16}));
  EXPECT_EQ(sk.part(1), (std::vector<Int>{17, 25, 29, 33, 41}));
  EXPECT_EQ(sk.part(2), (std::vector<Int>{-6, -2, 2, 6, 10}));
  EXPECT_EQ(sk.part(3), (std::vector<Int>{19, 23, 27, 31, 35}));
  EXPECT_EQ(gap(rep), 14);
  EXPECT_EQ(gap(s), 15);
  EXPECT_EQ(min_gap_in_class(s), 14);
  EXPECT_TRUE(equivalent(rep, s));
}

TEST(Representative, EquivalentPair) {
  const GridParams p(3, 2, 2);
  const auto d1 = InvariantSet::from_generators(p, {0, 4, 8, 9, 13, 17});
  const auto d2 = InvariantSet::from_generators(p, {0, 4, 8, 11, 15, 19});
  EXPECT_TRUE(equivalent(d1, d2));
  EXPECT_EQ(skeleton(d1).pattern(), skeleton(d2).pattern());
  EXPECT_FALSE(equivalent(d1, InvariantSet::from_generators(p, {0, 1})));
}

TEST(Representative, LeastGapInClass) {
  for (auto [N, M] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {3, 3}, {6, 4}}) {
    const auto p = GridParams::from_rectangle(N, M);
    std::map<std::string, Int> least;
    const auto sets = enumerate_invsets_by_gap(p, subdiagonal_boxes(p));
    for (const auto& s : sets) {
      const auto cf = canonical_form(build_graph(s));
      auto it = least.find(cf);
      if (it == least.end()) least[cf] = gap(s);
      else it->second = std::min(it->second, gap(s));
    }
    for (const auto& s : sets) {
      const auto rep = minimal_representative(build_graph(s));
      EXPECT_TRUE(equivalent(rep, s));
      EXPECT_EQ(gap(rep), least[canonical_form(build_graph(s))]);
    }
  }
}
