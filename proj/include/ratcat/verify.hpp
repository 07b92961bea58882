#pragma once

// Exhaustive verification suites over small shapes.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ratcat/cores.hpp"
#include "ratcat/equiv.hpp"
#include "ratcat/glue.hpp"
#include "ratcat/series.hpp"
#include "ratcat/sweep.hpp"

namespace ratcat {

struct SuiteReport {
  std::string name;
  bool passed = true;
  bool informational = false;  // failures are reported but never fail the run
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  template <class Msg>
  void check(bool ok, Msg&& msg) {
    ++checks;
    if (ok) return;
    if (!informational) passed = false;
    if (failures.size() < 20) failures.push_back(msg());
  }

  void note(std::string s) { notes.push_back(std::move(s)); }
};

namespace verify {

inline std::string shape(const GridParams& p) {
  return "(" + std::to_string(p.N()) + "," + std::to_string(p.M()) + ")";
}

/// Every rectangle with N + M <= max_size.
inline std::vector<GridParams> shapes_up_to(int max_size) {
  std::vector<GridParams> out;
  for (int N = 1; N < max_size; ++N)
    for (int M = 1; N + M <= max_size; ++M) out.push_back(GridParams::from_rectangle(N, M));
  return out;
}

/// Runs body on every path of every shape, turning library errors into failures.
template <class Body>
void each_path(SuiteReport& r, int max_size, Body&& body) {
  for (const auto& p : shapes_up_to(max_size)) {
    for (const auto& D : enumerate_paths(p, std::size_t(max_size))) {
      try {
        body(D);
      } catch (const Error& e) {
        r.check(false, [&] { return shape(p) + " " + D.steps() + ": " + e.what(); });
      }
    }
  }
}

inline const std::vector<std::pair<int, int>>& census_shapes() {
  static const std::vector<std::pair<int, int>> shapes{{2, 2}, {4, 2}, {3, 3}, {6, 4}, {2, 4}, {3, 6}};
  return shapes;
}

// Points of the periodic path of skel over `periods` periods, realized from
// set membership alone: the step leaving a point goes up exactly when the box
// to its upper left belongs to the set.
inline std::set<Point> periodic_points(int n, int m, const std::vector<Int>& skel, int periods) {
  const GridParams cp(n, m, 1);
  const InvariantSet s = InvariantSet::from_skeleton(cp, skel);
  const Int r0 = skel.front();
  // Solve box_rank(x-1, y) = r0, i.e. n*x + m*y = mn - m - r0.
  const Int target = Int(m) * n - m - r0;
  Int x = 0, y = 0;
  for (Int b = 0; b < n; ++b)
    if ((target - Int(m) * b) % n == 0) {
      y = b;
      x = (target - Int(m) * b) / n;
      break;
    }
  x += Int(m) * (periods / 2);
  y -= Int(n) * (periods / 2);
  std::set<Point> out;
  out.insert({x, y});
  for (int k = 0; k < periods * (n + m); ++k) {
    const Int r = box_rank(cp, x - 1, y);
    if (s.contains(r)) ++y; else --x;
    out.insert({x, y});
  }
  return out;
}

inline bool geometric_intersect(int n, int m, const std::vector<Int>& a, const std::vector<Int>& b) {
  const auto pa = periodic_points(n, m, a, 3);
  const auto pb = periodic_points(n, m, b, 5);
  for (const auto& pt : pa)
    if (pb.count(pt)) return true;
  return false;
}

/// C(n,2) - #{(i,j) : y_j > x_i}, the M = N form of dinv.
inline Int square_dinv(const InvariantSet& s) {
  const Int n = s.params().N();
  const auto x = generators_n(s);
  const auto y = cogenerators_m(s);
  Int above = 0;
  for (Int xi : x)
    for (Int yj : y) above += yj > xi;
  return n * (n - 1) / 2 - above;
}

/// Stack matching with 'h' opening and 'v' closing.
inline std::vector<std::pair<std::size_t, std::size_t>> parenthesis_pairs(const std::string& w) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 'h') {
      stack.push_back(k);
    } else {
      out.push_back({stack.back(), k});
      stack.pop_back();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void golden(SuiteReport& r, int) {
  auto expect_zeta = [&](int n, int m, int d, const std::string& in, const std::string& out) {
    const auto z = zeta(DyckPath::parse(in, GridParams(n, m, d))).steps();
    r.check(z == out, [&] { return "zeta(" + in + ") = " + z + ", expected " + out; });
  };
  expect_zeta(5, 3, 1, "hhvhvvvv", "hvhvhvvv");
  expect_zeta(3, 2, 3, "hvhvvhhhvhvvvvv", "hhhvvhvvvvhhvvv");
  expect_zeta(1, 1, 1, "hv", "hv");
  const GridParams p53(5, 3);
  r.check(box_rank(p53, 0, 0) == 7, [] { return "rank of box (0,0) in 5x3"; });
  r.check(box_rank(GridParams(3, 2, 3), 0, 0) == 13 && box_rank(GridParams(3, 2, 3), 5, 0) == -2,
          [] { return "ranks in 9x6"; });
  const auto D = DyckPath::parse("hhvhvvvv", p53);
  r.check(step_ranks(D) == std::vector<Int>{-3, 2, 7, 4, 9, 6, 3, 0}, [] { return "ranks of hhvhvvvv"; });
  r.check(step_ranks(DyckPath::parse("hvhvvhhhvhvvvvv", GridParams(3, 2, 3))) ==
              std::vector<Int>{-2, 1, -1, 2, 0, -2, 1, 4, 7, 5, 8, 6, 4, 2, 0},
          [] { return "ranks of hvhvvhhhvhvvvvv"; });
  r.check(area(D) == 3 && dinv_sweep(D) == 1, [] { return "area/dinv of hhvhvvvv"; });
  const auto s = InvariantSet::from_generators(p53, {0, 7});
  r.check(generators_n(s) == std::vector<Int>{0, 3, 6, 7, 9}, [] { return "5-generators"; });
  r.check(cogenerators_m(s) == std::vector<Int>{-3, 2, 4}, [] { return "3-cogenerators"; });
  r.check(skeleton(s).values() == std::vector<Int>{-3, 0, 2, 3, 4, 6, 7, 9}, [] { return "skeleton"; });
  r.check(map_D_coprime(s) == D, [] { return "D of {0,3,5,6,7,...}"; });
  r.check(map_G(s).steps() == "hvhvhvvv", [] { return "G of {0,3,5,6,7,...}"; });
}

inline void zeta_bijective(SuiteReport& r, int max_size) {
  for (const auto& p : shapes_up_to(max_size)) {
    const auto paths = enumerate_paths(p, std::size_t(max_size));
    std::set<std::string> image;
    for (const auto& D : paths) image.insert(zeta(D).steps());
    r.check(image.size() == paths.size(), [&] {
      return shape(p) + ": image has " + std::to_string(image.size()) + " of " + std::to_string(paths.size());
    });
  }
}

inline void factorization(SuiteReport& r, int max_size) {
  each_path(r, max_size, [&](const DyckPath& D) {
    const InvariantSet rep = minimal_representative(map_D_inverse(D));
    r.check(zeta(D) == map_G(rep), [&] { return shape(D.params()) + " " + D.steps(); });
    // Step ranks of D are the skeleton values of the representative divided by d.
    auto ranks = step_ranks(D);
    std::sort(ranks.begin(), ranks.end());
    std::vector<Int> scaled;
    for (Int x : skeleton(rep).values()) scaled.push_back(floor_div(x, D.params().d()));
    std::sort(scaled.begin(), scaled.end());
    r.check(ranks == scaled, [&] { return "rank/skeleton mismatch for " + D.steps(); });
  });
}

inline void dinv(SuiteReport& r, int max_size) {
  each_path(r, max_size, [&](const DyckPath& D) {
    r.check(dinv_sweep(D) == dinv_armleg(D), [&] { return shape(D.params()) + " " + D.steps(); });
  });
}

inline void roundtrip(SuiteReport& r, int max_size) {
  each_path(r, max_size, [&](const DyckPath& D) {
    const auto u = unglue(D);
    const DyckPath back = glue_all(u.graph);
    r.check(back == D, [&] { return "B(B^-1(D)) = " + back.steps() + " for " + D.steps(); });
    r.check(canonical_form(map_D_inverse(back)) == canonical_form(u.graph),
            [&] { return "B^-1(B(G)) differs for " + D.steps(); });
    // Good intervals of D carry exactly the sink labels.
    std::multiset<std::vector<Int>> goods, sinks;
    for (std::size_t pos : good_intervals(D)) goods.insert(interval_skeleton(D, pos));
    std::vector<int> outdeg(u.graph.size(), 0);
    for (auto [i, j] : u.graph.edges) ++outdeg[i];
    for (int v = 0; v < u.graph.size(); ++v)
      if (outdeg[v] == 0) sinks.insert(u.graph.labels[v]);
    r.check(goods == sinks, [&] { return "good intervals are not the sinks for " + D.steps(); });
    if (D.params().d() > 1) {
      for (std::size_t pos : good_intervals(D)) {
        const auto rest = remove_interval(D, pos);
        const PeriodicPath P(D.params().n(), D.params().m(), interval_skeleton(D, pos));
        r.check(rest && glue_once(*rest, P) == D,
                [&] { return "remove/glue at " + std::to_string(pos) + " for " + D.steps(); });
      }
    }
  });
}

inline void worked_example(SuiteReport& r, int) {
  const GridParams p(3, 2, 4);
  std::vector<Int> el{0, 1, 5, 8, 9, 12, 13, 16, 17, 20, 21, 24, 25, 27, 28, 29, 30};
  for (Int x = 32; x < 50; ++x) el.push_back(x);
  const InvariantSet s = InvariantSet::from_generators(p, el);
  const Skeleton sk = skeleton(s);
  r.check(sk.part(0) == std::vector<Int>{-8, 0, 4, 8, 16} && sk.part(1) == std::vector<Int>{-7, -3, 1, 5, 9} &&
              sk.part(2) == std::vector<Int>{22, 26, 30, 34, 38} &&
              sk.part(3) == std::vector<Int>{19, 27, 31, 35, 43},
          [] { return "skeleton parts of the (12,8) example"; });
  const GraphData gd = build_graph_data(s);
  const std::vector<std::vector<Bound>> b{{std::nullopt, 0, 5, 2},
                                          {2, std::nullopt, 12, 9},
                                          {std::nullopt, std::nullopt, std::nullopt, 0},
                                          {std::nullopt, std::nullopt, 2, std::nullopt}};
  r.check(gd.bounds.b == b, [] { return "b matrix"; });
  r.check(gd.shift == std::vector<Int>{0, 0, -4, -2}, [] { return "minimal shifting"; });
  r.check(gd.level == std::vector<int>{0, 1, 2, 1}, [] { return "level function"; });
  r.check(gd.graph.labels == std::vector<std::vector<Int>>{{-2, 0, 1, 2, 4}, {-2, -1, 0, 1, 2},
                                                           {4, 5, 6, 7, 8}, {4, 6, 7, 8, 10}},
          [] { return "labels"; });
  r.check(gd.graph.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {3, 2}},
          [] { return "edges"; });
  // Left graph: vertices ordered by weakly increasing level.
  const LabeledDigraph left{p, {gd.graph.labels[0], gd.graph.labels[3], gd.graph.labels[1], gd.graph.labels[2]},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 3}}, 0};
  r.check(canonical_form(left) == canonical_form(gd.graph), [] { return "the two graphs differ"; });
  const InvariantSet rep = minimal_representative(left);
  const Skeleton rs = skeleton(rep);
  r.check(rs.part(0) == std::vector<Int>{-8, 0, 4, 8, 16} && rs.part(1) == std::vector<Int>{17, 25, 29, 33, 41} &&
              rs.part(2) == std::vector<Int>{-6, -2, 2, 6, 10} &&
              rs.part(3) == std::vector<Int>{19, 23, 27, 31, 35},
          [] { return "minimal representative parts"; });
  const DyckPath glued = glue_all(gd.graph);
  r.check(gap(rep) == 14 && area(glued) == 14,
          [&] { return "gap " + std::to_string(gap(rep)) + ", area " + std::to_string(area(glued)); });
  r.check(equivalent(rep, minimal_representative(gd.graph)) && equivalent(rep, s),
          [] { return "representatives are not equivalent"; });
  r.check(zeta(glued) == map_G(rep), [] { return "zeta of the glued path"; });
  const auto u = unglue(glued);
  r.check(canonical_form(u.graph) == canonical_form(gd.graph), [] { return "ungluing the example"; });
  std::vector<std::vector<Int>> first_round;
  for (std::size_t pos : good_intervals(glued)) first_round.push_back(interval_skeleton(glued, pos));
  r.check(first_round == std::vector<std::vector<Int>>{{-2, -1, 0, 1, 2}, {4, 5, 6, 7, 8}},
          [] { return "first round of good intervals"; });
  // The (6,4) pair of equivalent sets.
  const GridParams p64(3, 2, 2);
  const auto d1 = InvariantSet::from_generators(p64, {0, 4, 8, 9, 13, 17});
  const auto d2 = InvariantSet::from_generators(p64, {0, 4, 8, 11, 15, 19});
  r.check(skeleton(d1).values() == std::vector<Int>{-4, 0, 2, 4, 5, 8, 9, 11, 13, 17},
          [] { return "skeleton of the (6,4) example"; });
  r.check(equivalent(d1, d2), [] { return "(6,4) example sets are not equivalent"; });
  r.check(build_graph_data(d1).shift == std::vector<Int>{0, 0}, [] { return "(6,4) shift"; });
}

inline void counting(SuiteReport& r, int max_size) {
  for (const auto& p : shapes_up_to(max_size)) {
    const auto count = enumerate_paths(p, std::size_t(max_size)).size();
    r.check(BigInt(count) == bizley_count(p.n(), p.m(), p.d()),
            [&] { return shape(p) + ": " + std::to_string(count) + " paths"; });
  }
  for (auto [N, M] : census_shapes()) {
    const auto p = GridParams::from_rectangle(N, M);
    const auto c = class_census(p);
    const auto paths = enumerate_paths(p).size();
    r.check(c.classes == paths, [&] {
      return shape(p) + ": " + std::to_string(c.classes) + " classes, " + std::to_string(paths) + " paths";
    });
    if (M % N == 0)
      r.check(BigInt(c.classes) == fuss_catalan(N, M / N), [&] { return shape(p) + ": Fuss-Catalan"; });
    r.note(shape(p) + ": " + std::to_string(c.classes) + " classes, cutoff " + std::to_string(c.cutoff) +
           ", no new classes from gap " + std::to_string(c.plateau - 2) + " through " + std::to_string(c.plateau));
  }
  r.check(fuss_catalan(2, 2) == 3 && fuss_catalan(3, 1) == 5 && fuss_catalan(3, 2) == 12,
          [] { return "Fuss-Catalan values"; });
}

// How the classes of a census shape look: canonical form to its path and members.
struct ClassTable {
  std::map<std::string, std::vector<InvariantSet>> members;
};

inline ClassTable class_table(const GridParams& p) {
  ClassTable t;
  for_each_invset_by_gap(p, subdiagonal_boxes(p), [&](const InvariantSet& s) {
    t.members[canonical_form(build_graph(s))].push_back(s);
  });
  return t;
}

inline void classes(SuiteReport& r, int) {
  for (auto [N, M] : census_shapes()) {
    const auto p = GridParams::from_rectangle(N, M);
    const auto table = class_table(p);
    std::set<std::string> images;
    for (const auto& [cf, sets] : table.members) {
      const DyckPath D = map_D(sets.front());
      images.insert(D.steps());
      for (const auto& s : sets) {
        r.check(map_D(s) == D, [&] { return shape(p) + ": one class, two paths"; });
        r.check(equivalent(s, sets.front()), [&] { return shape(p) + ": equivalence is not by class"; });
      }
      r.check(canonical_form(map_D_inverse(D)) == cf, [&] { return shape(p) + ": B^-1(B(G)) != G"; });
    }
    r.check(images.size() == table.members.size() && images.size() == enumerate_paths(p).size(),
            [&] { return shape(p) + ": D is not a bijection on classes"; });
  }
}

inline void area_gap(SuiteReport& r, int max_size) {
  for (auto [N, M] : census_shapes()) {
    const auto p = GridParams::from_rectangle(N, M);
    for (const auto& [cf, sets] : class_table(p).members) {
      Int least = gap(sets.front());
      for (const auto& s : sets) least = std::min(least, gap(s));
      const Int a = area(map_D(sets.front()));
      r.check(a == least && min_gap_in_class(sets.front()) == least,
              [&] { return shape(p) + ": area " + std::to_string(a) + " vs min gap " + std::to_string(least); });
    }
  }
  each_path(r, max_size, [&](const DyckPath& D) {
    r.check(area(D) == gap(minimal_representative(map_D_inverse(D))),
            [&] { return shape(D.params()) + " " + D.steps(); });
  });
}

inline void series(SuiteReport& r, int) {
  {
    const auto c = C_series(GridParams(1, 1, 2), 10);
    QTPoly expect = QTPoly::monomial(0, 1);
    for (Int k = 1; k <= 10; ++k) expect.add(k, 0, 1);
    r.check(c.poly == expect, [&] { return "C_{2,2} = " + c.poly.to_string(); });
  }
  for (int n = 1; n <= 4; ++n) {
    const auto lhs = times_one_minus_q(F_series(n, 6, false));
    const auto rhs = F_series(n, 6, true);
    r.check(lhs == rhs, [&] { return "(1-q)F_" + std::to_string(n) + " vs restricted"; });
  }
  for (int n = 2; n <= 4; ++n) {
    const auto c = C_series(GridParams(1, 1, n), 6);
    const auto f = F_series(n, 6, true);
    r.check(c.poly == f.poly, [&] {
      return "C_{" + std::to_string(n) + "," + std::to_string(n) + "} = " + c.poly.to_string() + " vs " +
             f.poly.to_string();
    });
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 2}, {5, 3}, {4, 3}}) {
    const GridParams p(n, m, 1);
    const auto c = C_series(p, p.delta() + 3);
    r.check(c.poly == qt_catalan(p) && c.poly.max_q() <= p.delta(),
            [&] { return "coprime C_series differs from qt_catalan at " + shape(p); });
  }
}

inline void coprime(SuiteReport& r, int max_size) {
  for (int n = 1; n < max_size; ++n) {
    for (int m = 1; n + m <= max_size; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const GridParams p(n, m, 1);
      const QTPoly c = qt_catalan(p, std::size_t(max_size));
      r.check(c == c.swapped(), [&] { return shape(p) + ": q,t-Catalan is not symmetric"; });
      try {
        springer_poincare(n, m, std::size_t(max_size));
        r.check(true, [] { return std::string(); });
      } catch (const Error& e) {
        r.check(false, [&] { return shape(p) + ": " + e.what(); });
      }
      for (const auto& D : enumerate_paths(p, std::size_t(max_size))) {
        const InvariantSet s = invset_from_path_coprime(D);
        r.check(map_D_coprime(s) == D && gap(s) == area(D) && map_G(s) == zeta(D) &&
                    map_D(s) == D,
                [&] { return shape(p) + " " + D.steps(); });
      }
    }
  }
}

inline void coloring(SuiteReport& r, int max_size) {
  each_path(r, max_size, [&](const DyckPath& D) {
    const GridParams& p = D.params();
    const ColoredPath c = color(D);
    for (int col = 0; col < p.d(); ++col) {
      int vs = 0, hs = 0;
      for (std::size_t k = 0; k < D.size(); ++k)
        if (c.colors[k] == col) (D[k] == 'v' ? vs : hs)++;
      r.check(vs == p.n() && hs == p.m(), [&] { return "color counts for " + D.steps(); });
      r.check(is_dyck_word(p.coprime(), c.components[col].steps()),
              [&] { return "component is not a Dyck path for " + D.steps(); });
    }
    if (p.n() == 1 && p.m() == 1) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::map<int, std::vector<std::size_t>> by_color;
      for (std::size_t k = 0; k < D.size(); ++k) by_color[c.colors[k]].push_back(k);
      for (auto& [col, idx] : by_color) pairs.push_back({idx[0], idx[1]});
      std::sort(pairs.begin(), pairs.end());
      r.check(pairs == parenthesis_pairs(D.steps()), [&] { return "not a parenthesis matching: " + D.steps(); });
    }
  });
}

inline void ranks(SuiteReport& r, int max_size) {
  each_path(r, max_size, [&](const DyckPath& D) {
    const GridParams& p = D.params();
    const auto ranks = step_ranks(D);
    bool box_ok = true;
    const auto pts = D.points();
    for (std::size_t k = 0; k < D.size(); ++k) {
      // 'v' takes the box to its left, 'h' the box above it; both are the box at (x-1, y).
      box_ok &= ranks[k] == box_rank(p, pts[k].x - 1, pts[k].y);
    }
    r.check(box_ok, [&] { return "box and inductive ranks differ for " + D.steps(); });
    std::map<Int, int> mult;
    for (Int x : ranks) ++mult[x];
    bool mult_ok = true;
    for (auto [x, c] : mult) mult_ok &= c <= p.d();
    r.check(mult_ok, [&] { return "rank repeated more than d times in " + D.steps(); });
    r.check(D[D.size() - 1] == 'v' && ranks.back() == 0, [&] { return "last step of " + D.steps(); });
    r.check(area(D) + box_count(D) == subdiagonal_boxes(p), [&] { return "area + boxes for " + D.steps(); });
  });
}

inline void invset(SuiteReport& r, int) {
  for (auto [N, M] : std::vector<std::pair<int, int>>{{5, 3}, {3, 2}, {2, 2}, {4, 2}, {3, 3}, {6, 4}, {4, 4}, {2, 4}}) {
    const auto p = GridParams::from_rectangle(N, M);
    for (const auto& s : enumerate_invsets_by_gap(p, 6)) {
      bool closed = true, membership = true;
      const Skeleton sk = skeleton(s);
      const auto vals = sk.values();
      for (Int x = -3 * (N + M); x < 4 * (N + M); ++x) {
        if (s.contains(x)) closed &= s.contains(x + N) && s.contains(x + M);
        const bool in_sk = std::binary_search(vals.begin(), vals.end(), x);
        membership &= in_sk == (s.contains(x + M) && !s.contains(x - N));
      }
      r.check(closed, [&] { return shape(p) + ": set is not closed"; });
      r.check(membership, [&] { return shape(p) + ": skeleton membership rule fails"; });
      r.check(InvariantSet::from_skeleton(p, vals) == s, [&] { return shape(p) + ": skeleton reconstruction"; });
      r.check(dinv_invset(s) == subdiagonal_boxes(p) - box_count(map_G(s)),
              [&] { return shape(p) + ": dinv via box count"; });
      if (N == M) r.check(dinv_invset(s) == square_dinv(s), [&] { return shape(p) + ": square dinv formula"; });
      const auto parts = decompose(s);
      Int total = 0;
      for (const auto& rp : parts) total += rp.shift + gap(rp.part);
      r.check(total == gap(s), [&] { return shape(p) + ": gap decomposition"; });
      r.check(compose(p, parts) == s, [&] { return shape(p) + ": compose(decompose)"; });
    }
  }
}

inline void core(SuiteReport& r, int) {
  for (int n = 1; n <= 7; ++n)
    for (int m = 1; m <= 7; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const GridParams p(n, m, 1);
      for (const auto& D : enumerate_paths(p)) {
        const InvariantSet s = invset_from_path_coprime(D);
        if (gap(s) > 6) continue;
        const Partition lam = core_partition(s);
        r.check(invset_from_core(p, lam) == s, [&] { return shape(p) + ": core round trip"; });
        r.check(is_core(lam, n) && is_core(lam, m), [&] { return shape(p) + ": not a simultaneous core"; });
        std::vector<Int> gaps;
        for (Int x = 0; x < 2 * Int(n) * m; ++x)
          if (!s.contains(x)) gaps.push_back(x);
        std::sort(gaps.rbegin(), gaps.rend());
        r.check(first_column_hooks(conjugate(lam)) == gaps, [&] { return shape(p) + ": hooks are not the gaps"; });
      }
    }
  for (auto [N, M] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {6, 4}, {3, 3}, {4, 6}}) {
    const auto p = GridParams::from_rectangle(N, M);
    for (const auto& s : enumerate_invsets_by_gap(p, 5)) {
      const Partition lam = core_partition(s);
      r.check(is_core(lam, N) && is_core(lam, M), [&] { return shape(p) + ": not an (N,M)-core"; });
      r.check(invset_from_core(p, lam) == s, [&] { return shape(p) + ": core round trip"; });
      std::multiset<Partition> quotient, parts;
      for (const auto& q : d_quotient(lam, p.d())) quotient.insert(q);
      for (const auto& rp : decompose(s)) parts.insert(core_partition(rp.part));
      r.check(quotient == parts, [&] { return shape(p) + ": d-quotient differs from the parts"; });
      bool cores_ok = true;
      for (const auto& q : quotient) cores_ok &= is_core(q, p.n()) && is_core(q, p.m());
      r.check(cores_ok, [&] { return shape(p) + ": quotient is not made of (n,m)-cores"; });
    }
  }
}

// Integral acceptable shiftings found by moving the parts continuously in
// half-unit steps inside a box, never letting two parts overlap.
inline std::set<std::vector<Int>> reachable_shiftings(const Skeleton& sk, Int window) {
  const int d = sk.params.d();
  std::vector<std::vector<Int>> parts(d);
  for (int i = 0; i < d; ++i) parts[i] = sk.part(i);
  // forbidden[i][j]: values of 2*(a_j - a_i) at which S_i + a_i meets S_j + a_j.
  std::vector<std::vector<std::set<Int>>> forbidden(d, std::vector<std::set<Int>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j)
        for (Int x : parts[i])
          for (Int y : parts[j]) forbidden[i][j].insert(2 * (x - y));
  auto free = [&](const std::vector<Int>& z) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (forbidden[i][j].count(z[j] - z[i])) return false;
    return true;
  };
  std::set<std::vector<Int>> seen{std::vector<Int>(d, 0)};
  std::vector<std::vector<Int>> queue{std::vector<Int>(d, 0)};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int i = 1; i < d; ++i)
      for (int delta : {-1, 1}) {
        auto z = queue[k];
        z[i] += delta;
        if (std::abs(z[i]) > 2 * window || seen.count(z) || !free(z)) continue;
        seen.insert(z);
        queue.push_back(z);
      }
  }
  std::set<std::vector<Int>> out;
  for (const auto& z : seen) {
    bool integral = true;
    for (Int c : z) integral &= c % 2 == 0;
    if (!integral) continue;
    std::vector<Int> a;
    for (Int c : z) a.push_back(c / 2);
    out.insert(a);
  }
  return out;
}

inline void shifts(SuiteReport& r, int) {
  const Int window = 12;
  for (auto [N, M] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {6, 4}, {3, 3}, {2, 4}, {6, 3}}) {
    const auto p = GridParams::from_rectangle(N, M);
    for (const auto& s : enumerate_invsets_by_gap(p, 5)) {
      const Skeleton sk = skeleton(s);
      const ShiftBounds b = shift_bounds(sk);
      const auto reach = reachable_shiftings(sk, window);
      std::set<std::vector<Int>> by_bounds;
      std::vector<Int> a(p.d(), 0);
      auto rec = [&](auto&& self, int i) -> void {
        if (i == p.d()) {
          if (is_acceptable_shifting(b, a)) by_bounds.insert(a);
          return;
        }
        for (Int v = -window; v <= window; ++v) {
          a[i] = v;
          self(self, i + 1);
        }
        a[i] = 0;
      };
      rec(rec, 1);
      r.check(reach == by_bounds, [&] { return shape(p) + ": acceptable shiftings differ from the bounds"; });
      const auto m = minimal_shifting(b);
      bool minimal = reach.count(m) > 0;
      for (const auto& x : reach)
        for (int i = 0; i < p.d(); ++i) minimal &= x[i] >= m[i];
      r.check(minimal, [&] { return shape(p) + ": minimal shifting is not componentwise least"; });
    }
  }
}

inline void glue_order(SuiteReport& r, int) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}}) {
    for (int d = 1; d <= 4; ++d) {
      const GridParams p(n, m, d);
      for (const auto& D : enumerate_paths(p)) {
        const LabeledDigraph g = map_D_inverse(D);
        auto order = default_glue_order(g);
        const auto level = levels(g);
        // Every order that keeps the levels weakly increasing.
        auto by_level = [&](int a, int b) { return level[a] < level[b] || (level[a] == level[b] && a < b); };
        std::sort(order.begin(), order.end(), by_level);
        do {
          bool monotone = true;
          for (std::size_t k = 1; k < order.size(); ++k) monotone &= level[order[k - 1]] <= level[order[k]];
          if (!monotone) continue;
          r.check(glue_all(g, order) == D, [&] { return shape(p) + ": gluing order matters for " + D.steps(); });
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
}

inline void intersections(SuiteReport& r, int) {
  std::mt19937 rng(20240611u);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {5, 3}, {4, 3}, {1, 1}, {5, 2}}) {
    const GridParams cp(n, m, 1);
    std::vector<std::vector<Int>> skels;
    for (const auto& D : enumerate_paths(cp)) skels.push_back(skeleton(invset_from_path_coprime(D)).values());
    std::uniform_int_distribution<std::size_t> pick(0, skels.size() - 1);
    std::uniform_int_distribution<Int> offset(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = skels[pick(rng)];
      auto b = skels[pick(rng)];
      const Int oa = offset(rng), ob = offset(rng);
      for (Int& x : a) x += oa;
      for (Int& x : b) x += ob;
      const PeriodicPath P(n, m, a), Q(n, m, b);
      r.check(paths_intersect(P, Q) == geometric_intersect(n, m, a, b),
              [&] { return shape(cp) + ": intersection test disagrees with geometry"; });
    }
  }
}

inline void conjecture_probe(SuiteReport& r, int) {
  r.informational = true;
  const Int cutoff = 6;
  for (auto [N, M] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {3, 3}, {2, 4}, {6, 4}}) {
    const auto p = GridParams::from_rectangle(N, M);
    QTSeries s = C_series(p, cutoff);
    for (int k = 1; k < p.d(); ++k) s = times_one_minus_q(s);
    QTPoly window;
    for (const auto& [key, c] : s.poly.terms())
      if (key.first <= cutoff && key.second <= cutoff) window.add(key.first, key.second, c);
    const bool symmetric = window == window.swapped();
    r.check(symmetric, [&] { return shape(p) + ": (1-q)^(d-1) C is not q,t-symmetric through degree 6"; });
    r.note(shape(p) + ": (1-q)^(d-1) C = " + s.poly.to_string() + (symmetric ? "  [symmetric]" : "  [not symmetric]"));
  }
}

struct SuiteInfo {
  std::string name;
  int default_size;
  std::function<void(SuiteReport&, int)> run;
  std::string summary;
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"golden", 0, golden, "printed sweep, rank and skeleton examples"},
      {"zeta-bijective", 14, zeta_bijective, "the sweep map permutes every Y_{N,M}"},
      {"factorization", 14, factorization, "zeta = G o D^-1 and step ranks = skeleton / d"},
      {"dinv", 14, dinv, "dinv via sweep equals the arm/leg count"},
      {"roundtrip", 15, roundtrip, "gluing inverts ungluing; good intervals are sinks"},
      {"worked-example", 0, worked_example, "the (12,8) and (6,4) examples"},
      {"counting", 14, counting, "Bizley counts, class census, Fuss-Catalan"},
      {"classes", 0, classes, "D is a bijection on equivalence classes"},
      {"area-gap", 14, area_gap, "area of D(class) is the least gap in the class"},
      {"series", 0, series, "C_{2,2}, cyclic shift, square comparison, coprime degeneration"},
      {"coprime", 12, coprime, "q,t symmetry, Poincare formulas, coprime D and G"},
      {"coloring", 14, coloring, "color classes form (n,m)-Dyck paths"},
      {"ranks", 14, ranks, "rank definitions, multiplicities, area + boxes"},
      {"invset", 0, invset, "closure, skeleton membership, dinv formulas, decomposition"},
      {"core", 0, core, "core partitions and d-quotients"},
      {"shifts", 0, shifts, "acceptable shiftings by brute force and minimality"},
      {"glue-order", 0, glue_order, "same-level gluing order does not matter"},
      {"intersections", 0, intersections, "skeleton intersection equals path intersection"},
      {"conjecture-probe", 0, conjecture_probe, "q,t symmetry of (1-q)^(d-1) C (informational)"},
  };
  return all;
}

}  // namespace verify

/// Runs a named suite; max_size <= 0 selects the suite's default.
inline SuiteReport run_suite(const std::string& name, int max_size = 0) {
  for (const auto& s : verify::suites()) {
    if (s.name != name) continue;
    SuiteReport r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      s.run(r, max_size > 0 ? max_size : s.default_size);
    } catch (const Error& e) {
      r.check(false, [&] { return std::string("unexpected error: ") + e.what(); });
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error(ErrorKind::InvalidParams, "unknown suite '" + name + "'");
}

}  // namespace ratcat
