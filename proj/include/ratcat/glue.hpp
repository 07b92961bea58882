#pragma once

// Gluing (n, m)-periodic paths into an (N, M)-Dyck path and taking it apart.
//
// All paths share one rank function: the first point of any path has rank -m,
// a step 'h' adds n and a step 'v' subtracts m. A lattice point lies on the
// periodic path of a skeleton s exactly when its rank is in s, so translations
// by (m, -n) or (m, 0) between frames never change a rank and every splice is
// string surgery on step words.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratcat/equiv.hpp"
#include "ratcat/sweep.hpp"

namespace ratcat {

class PeriodicPath {
 public:
  PeriodicPath(int n, int m, std::vector<Int> skel) : n_(n), m_(m), skel_(std::move(skel)) {
    std::sort(skel_.begin(), skel_.end());
    const InvariantSet s = InvariantSet::from_skeleton(GridParams(n, m, 1), skel_);
    gens_ = generators_n(s);
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Int>& skeleton() const { return skel_; }

  /// Whether the point whose rank is r lies on the path.
  bool contains_rank(Int r) const { return std::binary_search(skel_.begin(), skel_.end(), r); }
  /// The step leaving a point of rank r is vertical exactly when r is a generator.
  bool vertical_at(Int r) const { return std::binary_search(gens_.begin(), gens_.end(), r); }

  /// Lattice point test in the frame of p: the box to the lower left of pt carries the rank.
  bool contains_point(const GridParams& p, Point pt) const {
    return contains_rank(box_rank(p, pt.x - 1, pt.y));
  }

  /// The n+m steps leaving the point of rank r.
  std::string window(Int r) const {
    ensure(contains_rank(r), ErrorKind::NoIntersection,
           "rank " + std::to_string(r) + " is not on the periodic path");
    std::string out;
    out.reserve(n_ + m_);
    for (int k = 0; k < n_ + m_; ++k) {
      if (vertical_at(r)) {
        out.push_back('v');
        r -= m_;
      } else {
        out.push_back('h');
        r += n_;
      }
      ensure(contains_rank(r), ErrorKind::InvalidSkeleton, "periodic walk left the skeleton");
    }
    return out;
  }

 private:
  int n_;
  int m_;
  std::vector<Int> skel_;
  std::vector<Int> gens_;
};

inline PeriodicPath periodic_from_skeleton(int n, int m, std::vector<Int> skel) {
  return PeriodicPath(n, m, std::move(skel));
}

inline bool paths_intersect(const PeriodicPath& a, const PeriodicPath& b) {
  return labels_intersect(a.skeleton(), b.skeleton());
}

/// Ranks of points 0..len of a step word: -m, then +n per 'h' and -m per 'v'.
inline std::vector<Int> point_ranks(int n, int m, std::string_view steps) {
  std::vector<Int> out;
  out.reserve(steps.size() + 1);
  Int r = -m;
  out.push_back(r);
  for (char c : steps) {
    r += (c == 'h') ? n : -m;
    out.push_back(r);
  }
  return out;
}

/// A (kn, km)-Dyck word whose steps remember the vertex that contributed them.
struct TaggedPath {
  int n = 1;
  int m = 1;
  int k = 0;
  std::string steps;
  std::vector<int> tags;

  DyckPath path() const { return DyckPath::parse(steps, GridParams(n, m, k)); }
};

/// Splices n+m steps of P in at the first point of D that lies on P.
inline TaggedPath glue_once(const TaggedPath& D, const PeriodicPath& P, int tag = 0) {
  ensure(P.n() == D.n && P.m() == D.m, ErrorKind::InvalidParams, "shape mismatch");
  const auto ranks = point_ranks(D.n, D.m, D.steps);
  std::size_t a = 0;
  while (a < ranks.size() && !P.contains_rank(ranks[a])) ++a;
  ensure(a < ranks.size(), ErrorKind::NoIntersection, "path does not meet the periodic path");
  const std::string window = P.window(ranks[a]);
  TaggedPath out{D.n, D.m, D.k + 1, {}, {}};
  out.steps = D.steps.substr(0, a) + window + D.steps.substr(a);
  out.tags.assign(D.tags.begin(), D.tags.begin() + a);
  out.tags.insert(out.tags.end(), window.size(), tag);
  out.tags.insert(out.tags.end(), D.tags.begin() + a, D.tags.end());
  ensure(is_dyck_word(GridParams(D.n, D.m, out.k), out.steps), ErrorKind::AboveDiagonal,
         "glued path crosses the diagonal");
  return out;
}

inline DyckPath glue_once(const DyckPath& D, const PeriodicPath& P) {
  const GridParams& p = D.params();
  TaggedPath t{p.n(), p.m(), p.d(), D.steps(), std::vector<int>(D.size(), 0)};
  return glue_once(t, P).path();
}

/// The map B with colors; order lists the non-source vertices by weakly increasing level.
inline TaggedPath glue_all_tagged(const LabeledDigraph& g, const std::vector<int>& order) {
  const auto level = validate_graph(g);
  const int n = g.params.n();
  const int m = g.params.m();
  ensure(int(order.size()) + 1 == g.size(), ErrorKind::InvalidGraph, "order must list every other vertex");
  std::vector<bool> seen(g.size(), false);
  seen[g.source] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    ensure(order[k] >= 0 && order[k] < g.size() && !seen[order[k]], ErrorKind::InvalidGraph,
           "order is not a permutation of the non-source vertices");
    seen[order[k]] = true;
    if (k) ensure(level[order[k - 1]] <= level[order[k]], ErrorKind::InvalidGraph,
                  "order must glue one level at a time");
  }
  const PeriodicPath p0(n, m, g.labels[g.source]);
  TaggedPath cur{n, m, 1, p0.window(-m), std::vector<int>(n + m, g.source)};
  ensure(is_dyck_word(GridParams(n, m, 1), cur.steps), ErrorKind::InvalidGraph,
         "source window is not a Dyck path");
  for (int v : order) cur = glue_once(cur, PeriodicPath(n, m, g.labels[v]), v);
  return cur;
}

inline std::vector<int> default_glue_order(const LabeledDigraph& g) {
  const auto level = levels(g);
  std::vector<int> order;
  for (int v = 0; v < g.size(); ++v)
    if (v != g.source) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return level[a] < level[b]; });
  return order;
}

inline TaggedPath glue_all_tagged(const LabeledDigraph& g) {
  return glue_all_tagged(g, default_glue_order(g));
}

inline DyckPath glue_all(const LabeledDigraph& g, const std::vector<int>& order) {
  return glue_all_tagged(g, order).path();
}

inline DyckPath glue_all(const LabeledDigraph& g) { return glue_all_tagged(g).path(); }

/// Start positions of good intervals: balanced windows of n+m steps whose
/// periodic extension misses every point of the word before the window.
inline std::vector<std::size_t> good_intervals(int n, int m, std::string_view steps) {
  const std::size_t w = std::size_t(n + m);
  std::vector<std::size_t> out;
  if (steps.size() < w) return out;
  const auto ranks = point_ranks(n, m, steps);
  std::vector<std::size_t> vcount(steps.size() + 1, 0);
  for (std::size_t k = 0; k < steps.size(); ++k) vcount[k + 1] = vcount[k] + (steps[k] == 'v');
  std::vector<Int> window;
  for (std::size_t r = 0; r + w <= steps.size(); ++r) {
    if (vcount[r + w] - vcount[r] != std::size_t(n)) continue;
    window.assign(ranks.begin() + r, ranks.begin() + r + w);
    std::sort(window.begin(), window.end());
    bool good = true;
    for (std::size_t k = 0; k < r && good; ++k)
      good = !std::binary_search(window.begin(), window.end(), ranks[k]);
    if (good) out.push_back(r);
  }
  return out;
}

inline std::vector<std::size_t> good_intervals(const DyckPath& D) {
  return good_intervals(D.params().n(), D.params().m(), D.steps());
}

/// Sorted ranks of the steps in [r, r+n+m).
inline std::vector<Int> interval_skeleton(const DyckPath& D, std::size_t r) {
  const auto ranks = step_ranks(D);
  const std::size_t w = std::size_t(D.params().n() + D.params().m());
  ensure(r + w <= D.size(), ErrorKind::NotBalanced, "interval runs past the end of the path");
  std::vector<Int> out(ranks.begin() + r, ranks.begin() + r + w);
  std::sort(out.begin(), out.end());
  return out;
}

/// Deletes the balanced interval [r, r+n+m); nullopt when nothing is left.
inline std::optional<DyckPath> remove_interval(const DyckPath& D, std::size_t r) {
  const GridParams& p = D.params();
  const std::size_t w = std::size_t(p.n() + p.m());
  ensure(r + w <= D.size(), ErrorKind::NotBalanced, "interval runs past the end of the path");
  const auto vs = std::count(D.steps().begin() + r, D.steps().begin() + r + w, 'v');
  ensure(vs == p.n(), ErrorKind::NotBalanced, "interval is not balanced");
  if (p.d() == 1) return std::nullopt;
  const std::string rest = D.steps().substr(0, r) + D.steps().substr(r + w);
  ensure(is_dyck_word(p.with_multiplicity(p.d() - 1), rest), ErrorKind::AboveDiagonal,
         "removal left a path above the diagonal");
  return DyckPath::parse(rest, p.with_multiplicity(p.d() - 1));
}

struct ColoredPath {
  DyckPath base;
  std::vector<int> colors;           // vertex carrying each step
  std::vector<DyckPath> components;  // (n, m)-Dyck path of each color

  friend bool operator==(const ColoredPath&, const ColoredPath&) = default;
};

/// The rotation of a word with n 'v' and m 'h' that is an (n, m)-Dyck path; unique since gcd(n, m) = 1.
inline std::size_t dyck_rotation(int n, int m, std::string_view word) {
  const GridParams p(n, m, 1);
  for (std::size_t t = 0; t < word.size(); ++t) {
    std::string rot = std::string(word.substr(t)) + std::string(word.substr(0, t));
    if (is_dyck_word(p, rot)) return t;
  }
  throw Error(ErrorKind::NotBalanced, "no rotation of '" + std::string(word) + "' is a Dyck path");
}

inline ColoredPath color_components(const DyckPath& D, std::vector<int> colors, int ncolors) {
  const GridParams& p = D.params();
  const int n = p.n();
  const int m = p.m();
  ColoredPath out{D, std::move(colors), {}};
  for (int c = 0; c < ncolors; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < D.size(); ++k)
      if (out.colors[k] == c) idx.push_back(k);
    ensure(idx.size() == std::size_t(n + m), ErrorKind::NotBalanced,
           "color " + std::to_string(c) + " has " + std::to_string(idx.size()) + " steps");
    std::string word;
    for (std::size_t k : idx) word.push_back(D[k]);
    const std::size_t t = dyck_rotation(n, m, word);
    out.components.push_back(
        DyckPath::parse(word.substr(t) + word.substr(0, t), GridParams(n, m, 1)));
  }
  return out;
}

struct UnglueResult {
  LabeledDigraph graph;
  ColoredPath colored;
  std::vector<int> round;  // removal round of each vertex; the source is removed last
};

/// B^{-1} and the coloring: strip good intervals round by round.
inline UnglueResult unglue(const DyckPath& D) {
  const GridParams& p = D.params();
  const int n = p.n();
  const int m = p.m();
  const std::size_t w = std::size_t(n + m);
  struct Removed {
    std::vector<Int> label;
    std::vector<int> origin;
    int round;
  };
  std::vector<Removed> removed;
  std::string cur = D.steps();
  std::vector<int> origin(D.size());
  std::iota(origin.begin(), origin.end(), 0);
  int round = 0;
  while (cur.size() > w) {
    const auto goods = good_intervals(n, m, cur);
    ensure(!goods.empty() && goods.size() * w < cur.size(), ErrorKind::InvalidGraph,
           "unexpected good interval structure");
    const auto ranks = point_ranks(n, m, cur);
    std::vector<Removed> batch;
    for (auto it = goods.rbegin(); it != goods.rend(); ++it) {
      const std::size_t r = *it;
      Removed rem{std::vector<Int>(ranks.begin() + r, ranks.begin() + r + w),
                  std::vector<int>(origin.begin() + r, origin.begin() + r + w), round};
      std::sort(rem.label.begin(), rem.label.end());
      cur.erase(r, w);
      origin.erase(origin.begin() + r, origin.begin() + r + w);
      batch.push_back(std::move(rem));
    }
    std::reverse(batch.begin(), batch.end());
    for (auto& b : batch) removed.push_back(std::move(b));
    ++round;
  }
  {
    const auto ranks = point_ranks(n, m, cur);
    Removed src{std::vector<Int>(ranks.begin(), ranks.end() - 1), origin, round};
    std::sort(src.label.begin(), src.label.end());
    removed.push_back(std::move(src));
  }
  // Source first, then later rounds before earlier ones.
  std::stable_sort(removed.begin(), removed.end(),
                   [](const Removed& a, const Removed& b) { return a.round > b.round; });
  const int d = int(removed.size());
  ensure(d == p.d(), ErrorKind::InvalidGraph, "vertex count differs from d");
  UnglueResult out{LabeledDigraph{p, {}, {}, 0}, ColoredPath{D, {}, {}}, {}};
  for (const auto& r : removed) {
    out.graph.labels.push_back(r.label);
    out.round.push_back(r.round);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j || !labels_intersect(removed[i].label, removed[j].label)) continue;
      ensure(removed[i].round != removed[j].round, ErrorKind::InvalidGraph,
             "intervals removed together intersect");
      if (removed[i].round > removed[j].round) out.graph.edges.push_back({i, j});
    }
  std::sort(out.graph.edges.begin(), out.graph.edges.end());
  validate_graph(out.graph);
  std::vector<int> colors(D.size(), -1);
  for (int v = 0; v < d; ++v)
    for (int k : removed[v].origin) colors[k] = v;
  out.colored = color_components(D, std::move(colors), d);
  // Each component is the Dyck window of its vertex's periodic path.
  for (int v = 0; v < d; ++v) {
    const InvariantSet part = InvariantSet::from_skeleton(p.coprime(), out.graph.labels[v]);
    ensure(out.colored.components[v] == map_D_coprime(part.shifted(-part.min())),
           ErrorKind::InvalidGraph, "color component differs from its label's path");
  }
  return out;
}

/// D: class data to path.
inline DyckPath map_D(const LabeledDigraph& g) { return glue_all(g); }
inline DyckPath map_D(const InvariantSet& s) { return glue_all(build_graph(s)); }
inline LabeledDigraph map_D_inverse(const DyckPath& D) { return unglue(D).graph; }

/// The coloring col_d of the steps of D.
inline ColoredPath color(const DyckPath& D) { return unglue(D).colored; }

}  // namespace ratcat
