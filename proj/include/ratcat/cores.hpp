#pragma once

// Invariant sets and simultaneous core partitions.
//
// Convention: let K be max(gen) rounded up to a multiple of N. The beta-numbers
// of the partition are K-1-x for x in Delta ∩ [0, K). Its conjugate has the
// gaps of Delta as first-column hook lengths, so Z>=0 maps to the empty partition.

#include <algorithm>
#include <functional>
#include <vector>

#include "ratcat/invset.hpp"

namespace ratcat {

using Partition = std::vector<Int>;  // weakly decreasing, positive parts

namespace detail {

inline Partition from_beta(std::vector<Int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  Partition out;
  const Int len = Int(beta.size());
  for (Int i = 0; i < len; ++i) {
    const Int part = beta[i] - (len - 1 - i);
    if (part > 0) out.push_back(part);
  }
  return out;
}

inline std::vector<Int> to_beta(const Partition& lam, Int len) {
  std::vector<Int> beta;
  beta.reserve(len);
  for (Int i = 0; i < len; ++i)
    beta.push_back((i < Int(lam.size()) ? lam[i] : 0) + (len - 1 - i));
  return beta;
}

}  // namespace detail

inline Partition conjugate(const Partition& lam) {
  Partition out;
  if (lam.empty()) return out;
  for (Int j = 0; j < lam.front(); ++j) {
    Int count = 0;
    for (Int part : lam) count += part > j;
    out.push_back(count);
  }
  return out;
}

/// Hook lengths of the first column, largest first.
inline std::vector<Int> first_column_hooks(const Partition& lam) {
  return detail::to_beta(lam, Int(lam.size()));
}

/// Every hook length of the diagram, row by row.
inline std::vector<Int> hook_lengths(const Partition& lam) {
  const Partition conj = conjugate(lam);
  std::vector<Int> out;
  for (Int i = 0; i < Int(lam.size()); ++i)
    for (Int j = 0; j < lam[i]; ++j) out.push_back(lam[i] - j + conj[j] - i - 1);
  return out;
}

inline bool is_core(const Partition& lam, Int t) {
  for (Int h : hook_lengths(lam))
    if (h % t == 0) return false;
  return true;
}

inline Partition core_partition(const InvariantSet& s) {
  ensure(s.normalized(), ErrorKind::NotNormalized, "core_partition requires min(Delta) = 0");
  const Int N = s.params().N();
  const Int top = *std::max_element(s.gen().begin(), s.gen().end());
  const Int K = (top + N - 1) / N * N;
  std::vector<Int> beta;
  for (Int x = 0; x < K; ++x)
    if (s.contains(x)) beta.push_back(K - 1 - x);
  return detail::from_beta(std::move(beta));
}

/// Inverse of core_partition; throws InvalidSet when lam is not an (N, M)-core.
inline InvariantSet invset_from_core(const GridParams& p, const Partition& lam) {
  const std::vector<Int> gaps = first_column_hooks(conjugate(lam));
  const Int N = p.N();
  const Int limit = gaps.empty() ? 0 : gaps.front() + 1;
  std::vector<Int> gen(N, -1);
  for (Int c = 0; c < N; ++c) {
    Int x = c;
    while (x < limit && std::binary_search(gaps.rbegin(), gaps.rend(), x)) x += N;
    gen[c] = x;
  }
  InvariantSet s = InvariantSet::from_gen_vector(p, std::move(gen));
  for (Int g : gaps)
    ensure(!s.contains(g), ErrorKind::InvalidSet, "partition is not an (N,M)-core");
  ensure(gap(s) == Int(gaps.size()), ErrorKind::InvalidSet, "partition is not an (N,M)-core");
  return s;
}

/// Littlewood d-quotient from a beta-set whose size is a multiple of d; runner i first.
inline std::vector<Partition> d_quotient(const Partition& lam, int d) {
  ensure(d >= 1, ErrorKind::InvalidParams, "d must be positive");
  const Int len = (Int(lam.size()) + d - 1) / d * d;
  std::vector<std::vector<Int>> runners(d);
  for (Int b : detail::to_beta(lam, len)) runners[b % d].push_back(b / d);
  std::vector<Partition> out;
  out.reserve(d);
  for (auto& r : runners) out.push_back(detail::from_beta(std::move(r)));
  return out;
}

/// The d-core left after removing all d-rim hooks.
inline Partition d_core(const Partition& lam, int d) {
  const Int len = (Int(lam.size()) + d - 1) / d * d;
  std::vector<Int> count(d, 0);
  for (Int b : detail::to_beta(lam, len)) ++count[b % d];
  std::vector<Int> beta;
  for (int r = 0; r < d; ++r)
    for (Int k = 0; k < count[r]; ++k) beta.push_back(Int(d) * k + r);
  return detail::from_beta(std::move(beta));
}

}  // namespace ratcat
