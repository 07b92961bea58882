#include <gtest/gtest.h>

#include "ratcat/verify.hpp"

using namespace ratcat;

TEST(Suites, AllPassAtSmallSizes) {
  for (const auto& s : verify::suites()) {
    const SuiteReport r = run_suite(s.name, s.default_size > 0 ? 9 : 0);
    EXPECT_TRUE(r.passed) << s.name << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checks, 0u) << s.name;
  }
}

TEST(Suites, ProbeIsInformational) {
  EXPECT_TRUE(run_suite("conjecture-probe").informational);
  EXPECT_FALSE(run_suite("golden").informational);
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite("nope"), Error); }

TEST(Suites, FailuresAreRecorded) {
  SuiteReport r;
  r.check(true, [] { return std::string("fine"); });
  r.check(false, [] { return std::string("broken"); });
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.checks, 2u);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0], "broken");
}

TEST(Geometry, PeriodicPointsFollowTheSet) {
  const auto pts = verify::periodic_points(5, 3, {-3, 0, 2, 3, 4, 6, 7, 9}, 3);
  EXPECT_EQ(pts.size(), 3u * 8 + 1);
  EXPECT_TRUE(verify::geometric_intersect(5, 3, {-3, 0, 2, 3, 4, 6, 7, 9}, {-3, 0, 2, 3, 4, 6, 7, 9}));
}
