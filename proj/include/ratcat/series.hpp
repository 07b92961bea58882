#pragma once

// q,t generating functions over Dyck paths and invariant sets.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ratcat/equiv.hpp"
#include "ratcat/qtpoly.hpp"
#include "ratcat/sweep.hpp"

namespace ratcat {

/// Sum over Y_{N,M} of q^area t^dinv.
inline QTPoly qt_catalan(const GridParams& p, std::size_t limit = kDefaultPathLimit) {
  QTPoly out;
  for (const auto& D : enumerate_paths(p, limit)) out.add(area(D), dinv_sweep(D), 1);
  return out;
}

/// Calls f on every normalized (N, M)-invariant set with gap <= max_gap, each once.
/// Sets are assembled residue by residue from shifted coprime parts.
inline void for_each_invset_by_gap(const GridParams& p, Int max_gap,
                                   const std::function<void(const InvariantSet&)>& f) {
  ensure(max_gap >= 0, ErrorKind::InvalidParams, "gap bound must be non-negative");
  const GridParams cp = p.coprime();
  std::vector<std::pair<InvariantSet, Int>> parts;  // coprime set and its gap
  for (const auto& D : enumerate_paths(cp, std::size_t(cp.N() + cp.M()))) {
    InvariantSet s = invset_from_path_coprime(D);
    parts.push_back({s, gap(s)});
  }
  const int d = p.d();
  std::vector<ResiduePart> chosen;
  chosen.reserve(d);
  auto rec = [&](auto&& self, int r, Int budget) -> void {
    if (r == d) {
      f(compose(p, chosen));
      return;
    }
    for (const auto& [part, g] : parts) {
      if (g > budget) continue;
      const Int max_shift = r == 0 ? 0 : budget - g;
      for (Int shift = 0; shift <= max_shift; ++shift) {
        chosen.push_back({r, shift, part});
        self(self, r + 1, budget - g - shift);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0, max_gap);
}

inline std::vector<InvariantSet> enumerate_invsets_by_gap(const GridParams& p, Int max_gap) {
  std::vector<InvariantSet> out;
  for_each_invset_by_gap(p, max_gap, [&](const InvariantSet& s) { out.push_back(s); });
  return out;
}

/// Sum over normalized invariant sets of q^gap t^dinv, exact through q^q_cutoff.
inline QTSeries C_series(const GridParams& p, Int q_cutoff) {
  QTSeries out{{}, q_cutoff};
  for_each_invset_by_gap(p, q_cutoff,
                         [&](const InvariantSet& s) { out.poly.add(gap(s), dinv_invset(s), 1); });
  return out;
}

/// #{i < j : a_i = a_j or a_j = a_i + 1}.
inline Int tuple_dinv(const std::vector<Int>& a) {
  Int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) count += (a[i] == a[j] || a[j] == a[i] + 1);
  return count;
}

/// Sum over a in Z>=0^n with |a| <= cutoff of q^|a| t^d(a); restricted fixes a_n = 0.
inline QTSeries F_series(int n, Int deg_cutoff, bool restricted) {
  ensure(n >= 1, ErrorKind::InvalidParams, "n must be positive");
  QTSeries out{{}, deg_cutoff};
  std::vector<Int> a(n, 0);
  const int free = restricted ? n - 1 : n;
  auto rec = [&](auto&& self, int i, Int budget) -> void {
    if (i == free) {
      out.poly.add(deg_cutoff - budget, tuple_dinv(a), 1);
      return;
    }
    for (Int v = 0; v <= budget; ++v) {
      a[i] = v;
      self(self, i + 1, budget - v);
    }
    a[i] = 0;
  };
  rec(rec, 0, deg_cutoff);
  return out;
}

/// Poincare polynomial of the compactified Jacobian, in t only; both formulas are compared.
inline QTPoly springer_poincare(int n, int m, std::size_t limit = kDefaultPathLimit) {
  const GridParams p(n, m, 1);
  const Int delta = p.delta();
  QTPoly by_dinv, by_size;
  for (const auto& D : enumerate_paths(p, limit)) {
    by_dinv.add(0, 2 * (delta - dinv_sweep(D)), 1);
    by_size.add(0, 2 * box_count(D), 1);
  }
  ensure(by_dinv == by_size, ErrorKind::FormulaMismatch,
         "the two Poincare formulas disagree: " + by_dinv.to_string() + " vs " + by_size.to_string());
  return by_size;
}

/// ((k+1)N)! / ((kN+1)! N!).
inline BigInt fuss_catalan(int N, int k) {
  ensure(N >= 1 && k >= 1, ErrorKind::InvalidParams, "N and k must be positive");
  const BigInt num = factorial(unsigned((k + 1) * N));
  const BigInt den = factorial(unsigned(k * N + 1)) * factorial(unsigned(N));
  ensure(num % den == 0, ErrorKind::Overflow, "Fuss-Catalan quotient is not integral");
  return num / den;
}

struct ClassCensus {
  Int cutoff = 0;                   // gap bound that is guaranteed to reach every class
  std::size_t classes = 0;          // distinct canonical graphs with gap <= cutoff
  std::vector<std::size_t> growth;  // classes found with gap <= g, for g = 0..cutoff+2
  Int plateau = -1;                 // first g after two consecutive steps without growth
};

/// Counts equivalence classes by canonical graph. Every class has a minimal
/// representative whose gap is the area of a path, so the number of
/// sub-diagonal boxes is a safe cutoff. Two further gap values are scanned to
/// report where a stop-when-flat search would have ended.
inline ClassCensus class_census(const GridParams& p) {
  ClassCensus out;
  out.cutoff = subdiagonal_boxes(p);
  const Int scan = out.cutoff + 2;
  std::vector<std::set<std::string>> by_gap(scan + 1);
  for_each_invset_by_gap(p, scan, [&](const InvariantSet& s) {
    by_gap[gap(s)].insert(canonical_form(build_graph(s)));
  });
  std::set<std::string> seen;
  for (Int g = 0; g <= scan; ++g) {
    seen.insert(by_gap[g].begin(), by_gap[g].end());
    out.growth.push_back(seen.size());
    if (g == out.cutoff) out.classes = seen.size();
    if (out.plateau < 0 && g >= 2 && out.growth[g] == out.growth[g - 1] &&
        out.growth[g - 1] == out.growth[g - 2])
      out.plateau = g;
  }
  ensure(seen.size() == out.classes, ErrorKind::FormulaMismatch,
         "a class appeared beyond the guaranteed cutoff");
  return out;
}

}  // namespace ratcat
