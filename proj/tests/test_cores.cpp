#include <gtest/gtest.h>

#include <set>

#include "ratcat/cores.hpp"

using namespace ratcat;

namespace {

// Hook lengths straight from the diagram.
std::multiset<Int> diagram_hooks(const Partition& lam) {
  std::multiset<Int> out;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (Int j = 0; j < lam[i]; ++j) {
      Int below = 0;
      for (std::size_t k = i + 1; k < lam.size(); ++k) below += lam[k] > j;
      out.insert(lam[i] - j - 1 + below + 1);
    }
  return out;
}

std::vector<Partition> partitions_of(Int n, Int max_part) {
  if (n == 0) return {{}};
  std::vector<Partition> out;
  for (Int first = std::min(n, max_part); first >= 1; --first)
    for (auto rest : partitions_of(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

// Partition whose beta numbers are the given decreasing first-column hooks.
Partition from_hooks(std::vector<Int> hooks) {
  std::sort(hooks.rbegin(), hooks.rend());
  Partition lam;
  for (std::size_t i = 0; i < hooks.size(); ++i) lam.push_back(hooks[i] - Int(hooks.size() - 1 - i));
  return lam;
}

}  // namespace

TEST(Partitions, Conjugate) {
  EXPECT_EQ(conjugate({4, 2, 1}), (Partition{3, 2, 1, 1}));
  EXPECT_EQ(conjugate({}), Partition{});
  for (Int n = 0; n <= 8; ++n)
    for (const auto& lam : partitions_of(n, n)) EXPECT_EQ(conjugate(conjugate(lam)), lam);
}

TEST(Partitions, HooksMatchDiagram) {
  for (Int n = 0; n <= 9; ++n)
    for (const auto& lam : partitions_of(n, n)) {
      const auto h = hook_lengths(lam);
      EXPECT_EQ(std::multiset<Int>(h.begin(), h.end()), diagram_hooks(lam));
      const auto fc = first_column_hooks(lam);
      EXPECT_EQ(fc.size(), lam.size());
      EXPECT_EQ(from_hooks(fc), lam);
    }
}

TEST(Partitions, IsCore) {
  for (Int n = 0; n <= 9; ++n)
    for (const auto& lam : partitions_of(n, n))
      for (Int t = 1; t <= 5; ++t) {
        const auto h = diagram_hooks(lam);
        bool core = true;
        for (Int x : h) core &= x % t != 0;
        EXPECT_EQ(is_core(lam, t), core);
      }
}

TEST(Cores, SmallSets) {
  EXPECT_EQ(core_partition(InvariantSet::from_generators(GridParams(1, 1), {0})), Partition{});
  // Gaps of <5,3> are 1, 2, 4, 7.
  const Partition gamma = core_partition(semigroup(5, 3));
  EXPECT_EQ(first_column_hooks(conjugate(gamma)), (std::vector<Int>{7, 4, 2, 1}));
  EXPECT_EQ(gamma, conjugate(from_hooks({7, 4, 2, 1})));
  EXPECT_TRUE(is_core(gamma, 5));
  EXPECT_TRUE(is_core(gamma, 3));
  EXPECT_THROW(core_partition(semigroup(5, 3).shifted(2)), Error);
}

TEST(Cores, RoundTripCoprime) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 3}, {4, 3}, {5, 2}, {7, 3}, {5, 4}}) {
    const GridParams p(n, m);
    std::set<Partition> seen;
    for (const auto& D : enumerate_paths(p)) {
      const auto s = invset_from_path_coprime(D);
      const Partition lam = core_partition(s);
      EXPECT_TRUE(is_core(lam, n) && is_core(lam, m));
      EXPECT_EQ(invset_from_core(p, lam), s);
      seen.insert(lam);
    }
    // Simultaneous cores are all reached.
    std::size_t cores = 0;
    for (Int k = 0; k <= (n * n - 1) * (m * m - 1) / 24; ++k)
      for (const auto& lam : partitions_of(k, k)) cores += is_core(lam, n) && is_core(lam, m);
    EXPECT_EQ(seen.size(), cores);
  }
}

TEST(Cores, NotACore) {
  EXPECT_THROW(invset_from_core(GridParams(5, 3), {3}), Error);
}

TEST(Quotient, NonCoprimeParts) {
  const GridParams p(3, 2, 2);
  std::vector<std::vector<Int>> lists{{0, 1}, {0, 3}, {0, 5}, {0, 7, 9}, {0, 1, 2}};
  for (const auto& l : lists) {
    const auto s = InvariantSet::from_generators(p, l);
    const Partition lam = core_partition(s);
    EXPECT_TRUE(is_core(lam, 6) && is_core(lam, 4));
    std::multiset<Partition> q, parts;
    for (const auto& x : d_quotient(lam, 2)) q.insert(x);
    for (const auto& rp : decompose(s)) parts.insert(core_partition(rp.part));
    EXPECT_EQ(q, parts);
    EXPECT_TRUE(is_core(d_core(lam, 2), 2));
  }
}
