#pragma once

// Rational Dyck paths in the N x M rectangle.
//
// Paths are read from the bottom-right corner (M, 0) toward the top-left
// corner (0, N); 'h' moves one unit left and 'v' one unit up. Boxes are
// addressed by their bottom-left corner, so box (x, y) occupies
// [x, x+1] x [y, y+1].

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ratcat/arith.hpp"
#include "ratcat/error.hpp"

namespace ratcat {

/// The tuple (n, m, d) with gcd(n, m) = 1; the rectangle is N = d*n high and M = d*m wide.
class GridParams {
 public:
  GridParams(int n, int m, int d = 1) : n_(n), m_(m), d_(d) {
    ensure(n >= 1 && m >= 1 && d >= 1, ErrorKind::InvalidParams,
           "n, m, d must be positive");
    ensure(std::gcd(n, m) == 1, ErrorKind::InvalidParams,
           "gcd(n, m) must be 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }

  /// Splits an arbitrary rectangle into its coprime shape and multiplicity.
  static GridParams from_rectangle(int height, int width) {
    ensure(height >= 1 && width >= 1, ErrorKind::InvalidParams,
           "rectangle sides must be positive");
    int g = std::gcd(height, width);
    return GridParams(height / g, width / g, g);
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int d() const { return d_; }
  int N() const { return d_ * n_; }
  int M() const { return d_ * m_; }
  /// Genus of the coprime shape, (m-1)(n-1)/2.
  Int delta() const { return Int(m_ - 1) * (n_ - 1) / 2; }

  GridParams coprime() const { return GridParams(n_, m_, 1); }
  GridParams with_multiplicity(int d) const { return GridParams(n_, m_, d); }

  friend bool operator==(const GridParams&, const GridParams&) = default;

 private:
  int n_;
  int m_;
  int d_;
};

struct Point {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Rank of box (x, y): d*m*n - m - n - n*x - m*y. Boxes with rank >= 0 are those under the diagonal.
inline Int box_rank(const GridParams& p, Int x, Int y) {
  return Int(p.d()) * p.m() * p.n() - p.m() - p.n() - Int(p.n()) * x - Int(p.m()) * y;
}

// Diagonal test in exact arithmetic: (x, y) is weakly below the diagonal
// through (M, 0) and (0, N).
inline bool below_diagonal(const GridParams& p, Int x, Int y) {
  return Int(p.N()) * x + Int(p.M()) * y <= Int(p.N()) * p.M();
}

inline bool is_dyck_word(const GridParams& p, std::string_view steps) {
  if (steps.size() != std::size_t(p.N() + p.M())) return false;
  Int x = p.M();
  Int y = 0;
  for (char c : steps) {
    if (c == 'h') {
      --x;
    } else if (c == 'v') {
      ++y;
    } else {
      return false;
    }
    if (x < 0 || y > p.N() || !below_diagonal(p, x, y)) return false;
  }
  return x == 0 && y == p.N();
}

class DyckPath {
 public:
  /// Validates a step string; throws MalformedPath or AboveDiagonal.
  static DyckPath parse(std::string_view text, const GridParams& p) {
    const std::size_t expected = std::size_t(p.N() + p.M());
    ensure(text.size() == expected, ErrorKind::MalformedPath,
           "expected " + std::to_string(expected) + " steps, got " + std::to_string(text.size()));
    std::size_t vs = 0;
    for (char c : text) {
      ensure(c == 'h' || c == 'v', ErrorKind::MalformedPath,
             std::string("unexpected step letter '") + c + "'");
      vs += (c == 'v');
    }
    ensure(vs == std::size_t(p.N()), ErrorKind::MalformedPath,
           "expected " + std::to_string(p.N()) + " vertical steps, got " + std::to_string(vs));
    ensure(is_dyck_word(p, text), ErrorKind::AboveDiagonal,
           "path '" + std::string(text) + "' crosses the diagonal");
    return DyckPath(p, std::string(text));
  }

  const GridParams& params() const { return params_; }
  const std::string& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  char operator[](std::size_t k) const { return steps_[k]; }

  /// Start point of step k; k == size() gives the end point (0, N).
  Point point(std::size_t k) const {
    Point pt{params_.M(), 0};
    for (std::size_t i = 0; i < k; ++i) {
      if (steps_[i] == 'h') --pt.x; else ++pt.y;
    }
    return pt;
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    Point pt{params_.M(), 0};
    out.push_back(pt);
    for (char c : steps_) {
      if (c == 'h') --pt.x; else ++pt.y;
      out.push_back(pt);
    }
    return out;
  }

  friend bool operator==(const DyckPath& a, const DyckPath& b) {
    return a.params_ == b.params_ && a.steps_ == b.steps_;
  }
  friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.steps_ < b.steps_; }

 private:
  DyckPath(GridParams p, std::string steps) : params_(p), steps_(std::move(steps)) {}

  GridParams params_;
  std::string steps_;
};

/// Ranks along the path: the first step is ranked -m, an 'h' adds n, a 'v' subtracts m.
inline std::vector<Int> step_ranks(const DyckPath& path) {
  const GridParams& p = path.params();
  std::vector<Int> ranks;
  ranks.reserve(path.size());
  Int r = -p.m();
  for (char c : path.steps()) {
    ranks.push_back(r);
    r += (c == 'h') ? p.n() : -p.m();
  }
  return ranks;
}

/// x-coordinate of the vertical step in each row y = 0..N-1; the row's diagram boxes are x < length.
inline std::vector<Int> row_lengths(const DyckPath& path) {
  std::vector<Int> rows;
  rows.reserve(path.params().N());
  Int x = path.params().M();
  for (char c : path.steps()) {
    if (c == 'h') --x; else rows.push_back(x);
  }
  return rows;
}

/// Number of boxes of the Young diagram cut out by the path.
inline Int box_count(const DyckPath& path) {
  Int total = 0;
  for (Int len : row_lengths(path)) total += len;
  return total;
}

/// Number of boxes of the rectangle lying under the diagonal.
inline Int subdiagonal_boxes(const GridParams& p) {
  Int total = 0;
  for (Int y = 0; y < p.N(); ++y)
    for (Int x = 0; x < p.M(); ++x)
      total += box_rank(p, x, y) >= 0;
  return total;
}

/// Boxes between the path and the diagonal.
inline Int area(const DyckPath& path) {
  const GridParams& p = path.params();
  const auto rows = row_lengths(path);
  Int total = 0;
  for (Int y = 0; y < p.N(); ++y)
    for (Int x = rows[y]; x < p.M(); ++x)
      total += box_rank(p, x, y) >= 0;
  return total;
}

inline constexpr std::size_t kDefaultPathLimit = 24;

/// All Dyck paths of the rectangle in lexicographic order of step strings ('h' < 'v').
inline std::vector<DyckPath> enumerate_paths(const GridParams& p,
                                             std::size_t limit = kDefaultPathLimit) {
  const std::size_t len = std::size_t(p.N() + p.M());
  ensure(len <= limit, ErrorKind::LimitExceeded,
         "N+M=" + std::to_string(len) + " exceeds limit " + std::to_string(limit));
  std::vector<DyckPath> out;
  std::string word;
  word.reserve(len);
  // Depth-first with 'h' tried before 'v' yields lexicographic order.
  auto rec = [&](auto&& self, Int x, Int y) -> void {
    if (word.size() == len) {
      out.push_back(DyckPath::parse(word, p));
      return;
    }
    if (x > 0) {
      word.push_back('h');
      self(self, x - 1, y);
      word.pop_back();
    }
    if (y < p.N() && below_diagonal(p, x, y + 1)) {
      word.push_back('v');
      self(self, x, y + 1);
      word.pop_back();
    }
  };
  rec(rec, p.M(), 0);
  return out;
}

/// |Y_{dn,dm}| as the coefficient of x^d in exp(sum_j C(j(m+n), jm) x^j / (j(m+n))).
inline BigInt bizley_count(int n, int m, int d) {
  GridParams p(n, m, d);
  std::vector<BigRational> a(d + 1), b(d + 1);
  for (int j = 1; j <= d; ++j)
    a[j] = BigRational(binomial(unsigned(j * (m + n)), unsigned(j * m)), BigInt(j * (m + n)));
  // b = exp(a) via k b_k = sum_j j a_j b_{k-j}.
  b[0] = 1;
  for (int k = 1; k <= d; ++k) {
    BigRational acc = 0;
    for (int j = 1; j <= k; ++j) acc += BigRational(j) * a[j] * b[k - j];
    b[k] = acc / k;
  }
  ensure(denominator(b[d]) == 1, ErrorKind::Overflow, "Bizley coefficient is not integral");
  return numerator(b[d]);
}

}  // namespace ratcat
