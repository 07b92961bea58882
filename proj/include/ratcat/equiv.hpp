#pragma once

// Equivalence classes of (N, M)-invariant subsets and their labeled digraphs.
//
// The skeleton S splits into parts S_i by residue mod d. Sliding the parts
// without letting them pass through each other gives the equivalence; the
// class is recorded as d coprime skeletons s_i with an orientation.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ratcat/invset.hpp"

namespace ratcat {

/// Entry of a bound matrix; nullopt stands for infinity.
using Bound = std::optional<Int>;

struct ShiftBounds {
  int d = 1;
  std::vector<std::vector<Bound>> btilde;  // min{y - x : x in S_i, y in S_j, y > x}
  std::vector<std::vector<Bound>> b;       // btilde - 1; integral shifts satisfy a_i - a_j <= b_ij
};

inline ShiftBounds shift_bounds(const Skeleton& sk) {
  const int d = sk.params.d();
  ShiftBounds out{d, std::vector<std::vector<Bound>>(d, std::vector<Bound>(d)),
                  std::vector<std::vector<Bound>>(d, std::vector<Bound>(d))};
  std::vector<std::vector<Int>> parts(d);
  for (int i = 0; i < d; ++i) parts[i] = sk.part(i);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      Bound best;
      // For each x in S_i, the first element of S_j above it.
      auto it = parts[j].begin();
      for (Int x : parts[i]) {
        it = std::upper_bound(it, parts[j].end(), x);
        if (it == parts[j].end()) break;
        const Int diff = *it - x;
        if (!best || diff < *best) best = diff;
      }
      out.btilde[i][j] = best;
      if (best) out.b[i][j] = *best - 1;
    }
  }
  return out;
}

/// Componentwise least integral solution of a_j >= a_i - b_ij with a_0 = 0.
inline std::vector<Int> minimal_shifting(const ShiftBounds& bounds) {
  const int d = bounds.d;
  std::vector<std::optional<Int>> m(d);
  m[0] = 0;
  auto relax = [&] {
    bool changed = false;
    for (int u = 1; u < d; ++u) {
      for (int v = 0; v < d; ++v) {
        if (v == u || !m[v] || !bounds.b[v][u]) continue;
        const Int cand = *m[v] - *bounds.b[v][u];
        if (!m[u] || cand > *m[u]) {
          m[u] = cand;
          changed = true;
        }
      }
    }
    return changed;
  };
  for (int round = 0; round + 1 < d; ++round)
    if (!relax()) break;
  ensure(!relax(), ErrorKind::Infeasible, "shift constraints contain a positive cycle");
  std::vector<Int> out(d);
  for (int i = 0; i < d; ++i) {
    ensure(m[i].has_value(), ErrorKind::Infeasible,
           "part " + std::to_string(i) + " is not bounded below");
    out[i] = *m[i];
  }
  for (int v = 1; v < d; ++v)
    if (bounds.b[v][0])
      ensure(out[v] - *bounds.b[v][0] <= 0, ErrorKind::Infeasible, "part 0 would have to move");
  return out;
}

/// True when a_i - a_j <= b_ij for every ordered pair, with a_0 = 0.
inline bool is_acceptable_shifting(const ShiftBounds& bounds, const std::vector<Int>& a) {
  if (a.empty() || a[0] != 0) return false;
  for (int i = 0; i < bounds.d; ++i)
    for (int j = 0; j < bounds.d; ++j)
      if (i != j && bounds.b[i][j] && a[i] - a[j] > *bounds.b[i][j]) return false;
  return true;
}

struct LabeledDigraph {
  GridParams params{1, 1, 1};
  std::vector<std::vector<Int>> labels;    // sorted coprime skeleton values
  std::vector<std::pair<int, int>> edges;  // sorted (from, to)
  int source = 0;

  int size() const { return int(labels.size()); }

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;
};

namespace detail {

inline bool sorted_intersect(const std::vector<Int>& a, const std::vector<Int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

inline std::string join(const std::vector<Int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + "}";
}

}  // namespace detail

inline bool labels_intersect(const std::vector<Int>& a, const std::vector<Int>& b) {
  return detail::sorted_intersect(a, b);
}

/// Longest directed path length from the source; throws InvalidGraph on cycles or unreachable vertices.
inline std::vector<int> levels(const LabeledDigraph& g) {
  const int d = g.size();
  std::vector<std::vector<int>> out(d);
  std::vector<int> indeg(d, 0);
  for (auto [i, j] : g.edges) {
    ensure(i >= 0 && i < d && j >= 0 && j < d && i != j, ErrorKind::InvalidGraph,
           "edge endpoint out of range");
    out[i].push_back(j);
    ++indeg[j];
  }
  std::vector<int> level(d, -1), order;
  order.reserve(d);
  for (int v = 0; v < d; ++v)
    if (indeg[v] == 0) order.push_back(v);
  ensure(order.size() == 1 && order[0] == g.source, ErrorKind::InvalidGraph,
         "graph must have the source as its only vertex of in-degree 0");
  level[g.source] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int v = order[k];
    for (int w : out[v]) {
      level[w] = std::max(level[w], level[v] + 1);
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  ensure(int(order.size()) == d, ErrorKind::InvalidGraph, "graph has a directed cycle");
  return level;
}

/// Checks the membership conditions for labeled graphs; returns the levels.
inline std::vector<int> validate_graph(const LabeledDigraph& g) {
  const int d = g.size();
  ensure(d == g.params.d(), ErrorKind::InvalidGraph, "need one label per residue mod d");
  ensure(g.source >= 0 && g.source < d, ErrorKind::InvalidGraph, "source out of range");
  const GridParams cp = g.params.coprime();
  for (int v = 0; v < d; ++v) {
    ensure(std::is_sorted(g.labels[v].begin(), g.labels[v].end()), ErrorKind::InvalidGraph,
           "labels must be sorted");
    InvariantSet s = [&] {
      try {
        return InvariantSet::from_skeleton(cp, g.labels[v]);
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidGraph, std::string("bad label: ") + e.what());
      }
    }();
    if (v == g.source)
      ensure(s.min() == 0, ErrorKind::InvalidGraph, "source label must be zero normalized");
    else
      ensure(s.min() >= 0, ErrorKind::InvalidGraph, "labels must be non-negatively normalized");
  }
  std::set<std::pair<int, int>> adj;
  for (auto [i, j] : g.edges) {
    ensure(!adj.count({j, i}) && adj.insert({i, j}).second, ErrorKind::InvalidGraph,
           "duplicate or antiparallel edge");
  }
  const auto level = levels(g);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      ensure(labels_intersect(g.labels[i], g.labels[j]) == (adj.count({i, j}) || adj.count({j, i})),
             ErrorKind::InvalidGraph,
             "edge between " + std::to_string(i) + " and " + std::to_string(j) +
                 " does not match label intersection");
  return level;
}

struct GraphData {
  LabeledDigraph graph;
  ShiftBounds bounds;
  std::vector<Int> shift;  // minimal integral acceptable shifting
  std::vector<int> level;  // f(i), residue of S_i + m_i mod d
};

/// The map A with its intermediate data.
inline GraphData build_graph_data(const InvariantSet& s) {
  const GridParams& p = s.params();
  ensure(s.normalized(), ErrorKind::NotNormalized, "build_graph requires min(Delta) = 0");
  const int d = p.d();
  const Skeleton sk = skeleton(s);
  GraphData out{LabeledDigraph{p, std::vector<std::vector<Int>>(d), {}, 0}, shift_bounds(sk), {}, {}};
  out.shift = minimal_shifting(out.bounds);
  out.level.assign(d, 0);
  for (int i = 0; i < d; ++i) {
    const auto part = sk.part(i);
    out.level[i] = int(floor_mod(part.front() + out.shift[i], d));
    for (Int x : part) out.graph.labels[i].push_back(floor_div(x + out.shift[i], d));
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (out.level[i] < out.level[j] &&
          labels_intersect(out.graph.labels[i], out.graph.labels[j]))
        out.graph.edges.push_back({i, j});
  std::sort(out.graph.edges.begin(), out.graph.edges.end());
  ensure(levels(out.graph) == out.level, ErrorKind::InvalidGraph,
         "residue levels disagree with longest paths");
  return out;
}

inline LabeledDigraph build_graph(const InvariantSet& s) { return build_graph_data(s).graph; }

inline constexpr int kMaxCanonicalVertices = 8;

/// Isomorphism-invariant encoding: source first, remaining vertices by label,
/// ties resolved by the lexicographically least edge list.
inline std::string canonical_form(const LabeledDigraph& g) {
  const int d = g.size();
  ensure(d <= kMaxCanonicalVertices, ErrorKind::TooManyVertices,
         "canonical form supports at most " + std::to_string(kMaxCanonicalVertices) + " vertices");
  std::vector<int> rest;
  for (int v = 0; v < d; ++v)
    if (v != g.source) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(),
                   [&](int a, int b) { return g.labels[a] < g.labels[b]; });
  std::string head = "n=" + std::to_string(g.params.n()) + ";m=" + std::to_string(g.params.m()) +
                     ";d=" + std::to_string(d) + ";src=" + detail::join(g.labels[g.source]) + ";v=";
  for (std::size_t k = 0; k < rest.size(); ++k) {
    if (k) head += ',';
    head += detail::join(g.labels[rest[k]]);
  }
  // Blocks of equal labels are the only freedom left.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t k = 0; k < rest.size();) {
    std::size_t e = k + 1;
    while (e < rest.size() && g.labels[rest[e]] == g.labels[rest[k]]) ++e;
    blocks.push_back({k, e});
    k = e;
  }
  std::string best;
  bool have = false;
  auto encode = [&] {
    std::vector<int> pos(d);
    pos[g.source] = 0;
    for (std::size_t k = 0; k < rest.size(); ++k) pos[rest[k]] = int(k) + 1;
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edges.size());
    for (auto [i, j] : g.edges) e.push_back({pos[i], pos[j]});
    std::sort(e.begin(), e.end());
    std::string s = ";e=";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(e[k].first) + ">" + std::to_string(e[k].second);
    }
    if (!have || s < best) {
      best = std::move(s);
      have = true;
    }
  };
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      encode();
      return;
    }
    auto first = rest.begin() + blocks[b].first;
    auto last = rest.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return head + best;
}

/// The invariant set with skeleton parts S_i = d*s_i + i, vertices ordered by weakly increasing level.
inline InvariantSet minimal_representative(const LabeledDigraph& g) {
  const auto level = validate_graph(g);
  const int d = g.size();
  const GridParams& p = g.params;
  std::vector<int> order(d);
  for (int v = 0; v < d; ++v) order[v] = v;
  if (!std::is_sorted(order.begin(), order.end(),
                      [&](int a, int b) { return level[a] < level[b]; }))
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return level[a] < level[b]; });
  std::vector<Int> values;
  values.reserve(p.N() + p.M());
  for (int i = 0; i < d; ++i)
    for (Int x : g.labels[order[i]]) values.push_back(Int(d) * x + i);
  InvariantSet s = [&] {
    try {
      return InvariantSet::from_skeleton(p, values);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidGraph, std::string("parts do not form a skeleton: ") + e.what());
    }
  }();
  ensure(s.normalized(), ErrorKind::InvalidGraph, "representative is not normalized");
  const GraphData data = build_graph_data(s);
  ensure(canonical_form(data.graph) == canonical_form(g), ErrorKind::InvalidGraph,
         "representative lands in a different class");
  for (int i = 0; i < d; ++i)
    ensure(data.shift[i] == level[order[i]] - i, ErrorKind::InvalidGraph,
           "representative is not minimally shifted");
  return s;
}

inline bool equivalent(const InvariantSet& a, const InvariantSet& b) {
  return canonical_form(build_graph(a)) == canonical_form(build_graph(b));
}

inline Int min_gap_in_class(const InvariantSet& s) {
  return gap(minimal_representative(build_graph(s)));
}

}  // namespace ratcat
