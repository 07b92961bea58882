#pragma once

// (N, M)-invariant subsets of the integers.
//
// A set closed under +N and +M is determined by its N-generators: gen[c] is
// the least element congruent to c mod N, and x belongs to the set exactly
// when x >= gen[x mod N]. The infinite set is never materialized.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratcat/lattice.hpp"

namespace ratcat {

class InvariantSet {
 public:
  /// Smallest invariant set containing every element of `elements`.
  static InvariantSet from_generators(const GridParams& p, std::span<const Int> elements) {
    ensure(!elements.empty(), ErrorKind::EmptyInput, "no generators given");
    const Int N = p.N();
    const Int M = p.M();
    constexpr Int kUnset = std::numeric_limits<Int>::max();
    std::vector<Int> gen(N, kUnset);
    for (Int e : elements) {
      Int& slot = gen[floor_mod(e, N)];
      slot = std::min(slot, e);
    }
    // Adding M permutes the classes within each residue mod d; N passes reach a fixpoint.
    for (Int pass = 0; pass < N; ++pass) {
      bool changed = false;
      for (Int c = 0; c < N; ++c) {
        if (gen[c] == kUnset) continue;
        Int& next = gen[floor_mod(c + M, N)];
        if (gen[c] + M < next) {
          next = gen[c] + M;
          changed = true;
        }
      }
      if (!changed) break;
    }
    for (Int c = 0; c < N; ++c)
      ensure(gen[c] != kUnset, ErrorKind::InvalidSet,
             "generators miss residue " + std::to_string(floor_mod(c, p.d())) + " mod d");
    return InvariantSet(p, std::move(gen));
  }

  static InvariantSet from_generators(const GridParams& p, std::initializer_list<Int> elements) {
    return from_generators(p, std::span<const Int>(elements.begin(), elements.size()));
  }

  /// Builds from a vector indexed by residue mod N; checks congruence and M-invariance.
  static InvariantSet from_gen_vector(const GridParams& p, std::vector<Int> gen) {
    const Int N = p.N();
    const Int M = p.M();
    ensure(Int(gen.size()) == N, ErrorKind::InvalidSet, "generator vector must have N entries");
    for (Int c = 0; c < N; ++c) {
      ensure(floor_mod(gen[c], N) == c, ErrorKind::InvalidSet,
             "gen[" + std::to_string(c) + "] is not congruent to its index");
      ensure(gen[floor_mod(c + M, N)] <= gen[c] + M, ErrorKind::InvalidSet,
             "set is not closed under +M");
    }
    return InvariantSet(p, std::move(gen));
  }

  /// Rebuilds the set from its skeleton: the largest value in each class mod N is the generator.
  static InvariantSet from_skeleton(const GridParams& p, std::span<const Int> values);

  const GridParams& params() const { return params_; }
  /// gen()[c] is the least element congruent to c mod N.
  const std::vector<Int>& gen() const { return gen_; }

  bool contains(Int x) const { return x >= gen_[floor_mod(x, params_.N())]; }
  Int min() const { return *std::min_element(gen_.begin(), gen_.end()); }
  /// min = 0, so the set lies in Z>=0 and contains 0.
  bool normalized() const { return min() == 0; }

  InvariantSet shifted(Int s) const {
    const Int N = params_.N();
    std::vector<Int> g(N);
    for (Int c = 0; c < N; ++c) g[floor_mod(gen_[c] + s, N)] = gen_[c] + s;
    return InvariantSet(params_, std::move(g));
  }

  friend bool operator==(const InvariantSet& a, const InvariantSet& b) {
    return a.params_ == b.params_ && a.gen_ == b.gen_;
  }

 private:
  InvariantSet(GridParams p, std::vector<Int> gen) : params_(p), gen_(std::move(gen)) {}

  GridParams params_;
  std::vector<Int> gen_;
};

/// The numerical semigroup generated by n and m, as an (n, m)-invariant set.
inline InvariantSet semigroup(int n, int m) {
  return InvariantSet::from_generators(GridParams(n, m, 1), {0});
}

/// Delta \ (Delta + N), sorted.
inline std::vector<Int> generators_n(const InvariantSet& s) {
  std::vector<Int> out = s.gen();
  std::sort(out.begin(), out.end());
  return out;
}

/// (Delta - M) \ Delta, sorted: y with y not in Delta and y + M in Delta.
inline std::vector<Int> cogenerators_m(const InvariantSet& s) {
  const Int N = s.params().N();
  const Int M = s.params().M();
  std::vector<Int> out;
  out.reserve(M);
  for (Int c = 0; c < N; ++c) {
    // x = y + M runs over the class of c from gen[c] while x - M stays outside.
    const Int bound = s.gen()[floor_mod(c - M, N)] + M;
    for (Int x = s.gen()[c]; x < bound; x += N) out.push_back(x - M);
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class SkeletonKind { Generator, Cogenerator };

struct SkeletonEntry {
  Int value = 0;
  SkeletonKind kind = SkeletonKind::Generator;
  int residue = 0;  // value mod d
  friend bool operator==(const SkeletonEntry&, const SkeletonEntry&) = default;
};

struct Skeleton {
  GridParams params;
  std::vector<SkeletonEntry> entries;  // sorted by value

  std::vector<Int> values() const {
    std::vector<Int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.value);
    return out;
  }

  /// S_i: the values congruent to i mod d, ascending.
  std::vector<Int> part(int i) const {
    std::vector<Int> out;
    for (const auto& e : entries)
      if (e.residue == i) out.push_back(e.value);
    return out;
  }

  /// 'v' for generators and 'h' for cogenerators, in increasing order of value.
  std::string pattern() const {
    std::string out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.kind == SkeletonKind::Generator ? 'v' : 'h');
    return out;
  }

  friend bool operator==(const Skeleton& a, const Skeleton& b) {
    return a.params == b.params && a.entries == b.entries;
  }
};

inline Skeleton skeleton(const InvariantSet& s) {
  const GridParams& p = s.params();
  Skeleton sk{p, {}};
  sk.entries.reserve(p.N() + p.M());
  for (Int g : s.gen())
    sk.entries.push_back({g, SkeletonKind::Generator, int(floor_mod(g, p.d()))});
  for (Int c : cogenerators_m(s))
    sk.entries.push_back({c, SkeletonKind::Cogenerator, int(floor_mod(c, p.d()))});
  std::sort(sk.entries.begin(), sk.entries.end(),
            [](const SkeletonEntry& a, const SkeletonEntry& b) { return a.value < b.value; });
  return sk;
}

inline InvariantSet InvariantSet::from_skeleton(const GridParams& p, std::span<const Int> values) {
  const Int N = p.N();
  ensure(Int(values.size()) == p.N() + p.M(), ErrorKind::InvalidSkeleton,
         "skeleton must have N+M values");
  constexpr Int kUnset = std::numeric_limits<Int>::min();
  std::vector<Int> gen(N, kUnset);
  for (Int v : values) {
    Int& slot = gen[floor_mod(v, N)];
    slot = std::max(slot, v);
  }
  for (Int c = 0; c < N; ++c)
    ensure(gen[c] != kUnset, ErrorKind::InvalidSkeleton,
           "skeleton has no value in class " + std::to_string(c) + " mod N");
  InvariantSet s = [&] {
    try {
      return from_gen_vector(p, std::move(gen));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidSkeleton, e.what());
    }
  }();
  std::vector<Int> given(values.begin(), values.end());
  std::sort(given.begin(), given.end());
  ensure(skeleton(s).values() == given, ErrorKind::InvalidSkeleton,
         "values are not the skeleton of an invariant set");
  return s;
}

/// |Z>=0 \ Delta|.
inline Int gap(const InvariantSet& s) {
  const Int N = s.params().N();
  Int total = 0;
  for (Int c = 0; c < N; ++c)
    if (s.gen()[c] > c) total += (s.gen()[c] - c) / N;
  return total;
}

/// Coprime case: the diagram of boxes in the n x m rectangle whose ranks lie in Delta.
inline DyckPath map_D_coprime(const InvariantSet& s) {
  const GridParams& p = s.params();
  ensure(p.d() == 1, ErrorKind::NotCoprimeCase, "map_D_coprime requires d = 1");
  ensure(s.normalized(), ErrorKind::NotNormalized, "map_D_coprime requires min(Delta) = 0");
  std::string steps;
  steps.reserve(p.N() + p.M());
  Int x = p.M();
  for (Int y = 0; y < p.N(); ++y) {
    Int len = 0;
    while (len < p.M() && s.contains(box_rank(p, len, y))) ++len;
    for (; x > len; --x) steps.push_back('h');
    steps.push_back('v');
  }
  return DyckPath::parse(steps, p);
}

/// Inverse of map_D_coprime: the semigroup together with the ranks of the diagram's boxes.
inline InvariantSet invset_from_path_coprime(const DyckPath& path) {
  const GridParams& p = path.params();
  ensure(p.d() == 1, ErrorKind::NotCoprimeCase, "invset_from_path_coprime requires d = 1");
  std::vector<Int> elements{0};
  const auto rows = row_lengths(path);
  for (Int y = 0; y < p.N(); ++y)
    for (Int x = 0; x < rows[y]; ++x) elements.push_back(box_rank(p, x, y));
  return InvariantSet::from_generators(p, elements);
}

/// Reads the sorted skeleton as a path: generators become 'v', cogenerators 'h'.
inline DyckPath map_G(const InvariantSet& s) {
  const Skeleton sk = skeleton(s);
  const std::string word = sk.pattern();
  ensure(is_dyck_word(s.params(), word), ErrorKind::AboveDiagonal,
         "G-image '" + word + "' is not a Dyck path");
  return DyckPath::parse(word, s.params());
}

inline Int dinv_invset(const InvariantSet& s) { return area(map_G(s)); }

struct ResiduePart {
  int residue = 0;
  Int shift = 0;        // min of the residue class image
  InvariantSet part;    // zero-normalized (n, m)-invariant set
};

/// Splits Delta by residue r mod d into [(Delta ∩ (dZ + r)) - r] / d, each written as shift + part.
inline std::vector<ResiduePart> decompose(const InvariantSet& s) {
  const GridParams& p = s.params();
  const int d = p.d();
  const Int n = p.n();
  std::vector<ResiduePart> out;
  out.reserve(d);
  for (int r = 0; r < d; ++r) {
    std::vector<Int> g(n);
    for (Int c = r; c < p.N(); c += d) {
      const Int v = (s.gen()[c] - r) / d;
      g[floor_mod(v, n)] = v;
    }
    InvariantSet image = InvariantSet::from_gen_vector(p.coprime(), std::move(g));
    const Int shift = image.min();
    out.push_back({r, shift, image.shifted(-shift)});
  }
  return out;
}

/// Inverse of decompose: Delta = union over r of d * (part_r + shift_r) + r.
inline InvariantSet compose(const GridParams& p, std::span<const ResiduePart> parts) {
  ensure(Int(parts.size()) == p.d(), ErrorKind::InvalidSet, "need one part per residue mod d");
  std::vector<Int> gen(p.N());
  for (const auto& rp : parts) {
    ensure(rp.part.params() == p.coprime(), ErrorKind::InvalidSet, "part has the wrong shape");
    for (Int v : rp.part.gen()) {
      const Int x = Int(p.d()) * (v + rp.shift) + rp.residue;
      gen[floor_mod(x, p.N())] = x;
    }
  }
  return InvariantSet::from_gen_vector(p, std::move(gen));
}

}  // namespace ratcat
