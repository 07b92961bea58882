#pragma once

// Sparse polynomials in q and t with arbitrary precision coefficients.

#include <map>
#include <string>
#include <utility>

#include "ratcat/arith.hpp"

namespace ratcat {

class QTPoly {
 public:
  using Key = std::pair<Int, Int>;  // (q-exponent, t-exponent)

  QTPoly() = default;

  static QTPoly monomial(Int q, Int t, const BigInt& c = 1) {
    QTPoly p;
    p.add(q, t, c);
    return p;
  }

  void add(Int q, Int t, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({q, t}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(Int q, Int t) const {
    auto it = terms_.find({q, t});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Sum of all coefficients, i.e. the value at q = t = 1.
  BigInt total() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  Int max_q() const {
    Int best = 0;
    for (const auto& [k, c] : terms_) best = std::max(best, k.first);
    return best;
  }

  /// The polynomial with q and t exchanged.
  QTPoly swapped() const {
    QTPoly out;
    for (const auto& [k, c] : terms_) out.add(k.second, k.first, c);
    return out;
  }

  /// Terms of q-degree at most cutoff.
  QTPoly truncated(Int q_cutoff) const {
    QTPoly out;
    for (const auto& [k, c] : terms_)
      if (k.first <= q_cutoff) out.add(k.first, k.second, c);
    return out;
  }

  QTPoly& operator+=(const QTPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  QTPoly& operator-=(const QTPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  friend bool operator==(const QTPoly&, const QTPoly&) = default;

  /// Human-readable form such as "t + q + 2*q^2*t"; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      std::string mono;
      auto var = [&](const char* name, Int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += '*';
        mono += name;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      var("q", k.first);
      var("t", k.second);
      if (mono.empty()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  std::map<Key, BigInt> terms_;
};

/// A power series in q known exactly through q^q_cutoff.
struct QTSeries {
  QTPoly poly;
  Int q_cutoff = 0;

  friend bool operator==(const QTSeries&, const QTSeries&) = default;
};

/// Multiplies by (1 - q) and keeps the exact range.
inline QTSeries times_one_minus_q(const QTSeries& s) {
  QTPoly f = QTPoly::monomial(0, 0) - QTPoly::monomial(1, 0);
  return {(s.poly * f).truncated(s.q_cutoff), s.q_cutoff};
}

}  // namespace ratcat
