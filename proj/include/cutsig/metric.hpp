#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "cutsig/rational.hpp"

namespace cutsig {

/// Number of unordered pairs {i,j} on n vertices.
constexpr Index pair_count(Index n) { return n * (n - 1) / 2; }

/// Row-major upper-triangle position of the pair (i,j), 0 <= i < j < n.
/// Pairs are ordered (0,1), (0,2), ..., (n-2,n-1); every pair-indexed
/// vector in this library (metrics, cut metrics, dual functionals) and
/// every file format uses this order.
constexpr Index pair_index(Index i, Index j, Index n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of pair_index.
inline std::pair<Index, Index> pair_from_index(Index p, Index n) {
  Index i = 0;
  Index row = n - 1;
  while (p >= row) {
    p -= row;
    --row;
    ++i;
  }
  return {i, i + 1 + p};
}

/// A (semi)metric on vertices {0,...,n-1}, stored as the upper triangle of
/// its distance matrix. Symmetry and a zero diagonal hold by construction;
/// nonnegativity, positivity and the triangle inequality are checked by
/// validate() since parsed inputs may violate them.
class FiniteMetric {
 public:
  explicit FiniteMetric(Index n) : n_(n), entries_(check_size(n)) {
    entries_.setZero();
  }

  FiniteMetric(Index n, RationalVector upper_triangle) : n_(n), entries_(std::move(upper_triangle)) {
    if (entries_.size() != check_size(n)) {
      throw std::invalid_argument("upper triangle size does not match vertex count");
    }
  }

  Index n() const { return n_; }
  Index pairs() const { return entries_.size(); }

  const Rational& operator()(Index i, Index j) const {
    if (i == j) return zero();
    return entries_[index_of(i, j)];
  }

  void set(Index i, Index j, Rational value) {
    entries_[index_of(i, j)] = std::move(value);
  }

  /// Entries in pair order; shared with the file format.
  const RationalVector& upper_triangle() const { return entries_; }
  RationalVector& upper_triangle() { return entries_; }

  bool operator==(const FiniteMetric& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  static Index check_size(Index n) {
    if (n < 2) throw std::invalid_argument("a finite metric needs at least 2 vertices");
    return pair_count(n);
  }

  Index index_of(Index i, Index j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_ || i == j) throw std::out_of_range("vertex pair out of range");
    return pair_index(i, j, n_);
  }

  static const Rational& zero() {
    static const Rational kZero(0);
    return kZero;
  }

  Index n_;
  RationalVector entries_;
};

/// Entrywise sum; usable with scale() to build composite semimetrics.
inline FiniteMetric operator+(const FiniteMetric& a, const FiniteMetric& b) {
  if (a.n() != b.n()) throw std::invalid_argument("metric size mismatch");
  return FiniteMetric(a.n(), a.upper_triangle() + b.upper_triangle());
}

inline FiniteMetric scale(const Rational& lambda, const FiniteMetric& d) {
  return FiniteMetric(d.n(), lambda * d.upper_triangle());
}

/// Relabels vertices: result(i,j) = d(perm[i], perm[j]).
inline FiniteMetric permute(const FiniteMetric& d, std::span<const Index> perm) {
  if (static_cast<Index>(perm.size()) != d.n()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  FiniteMetric out(d.n());
  for (Index i = 0; i < d.n(); ++i) {
    for (Index j = i + 1; j < d.n(); ++j) {
      out.set(i, j, d(perm[i], perm[j]));
    }
  }
  return out;
}

enum class MetricMode { Semimetric, Metric };

enum class Axiom { Nonnegativity, Positivity, Triangle };

/// One violated constraint. For Triangle, the offending statement is
/// d(i,k) > d(i,j) + d(j,k); otherwise k is unused (-1).
struct AxiomViolation {
  Axiom axiom;
  Index i;
  Index j;
  Index k;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks every axiom of the requested mode and reports all violations.
/// Semimetric mode checks nonnegativity and the full triangle inequality;
/// Metric mode additionally requires d(i,j) > 0 off the diagonal.
inline ValidationReport validate(const FiniteMetric& d, MetricMode mode) {
  ValidationReport report;
  const Index n = d.n();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const int s = sgn(d(i, j));
      if (s < 0) {
        report.violations.push_back({Axiom::Nonnegativity, i, j, -1});
      } else if (s == 0 && mode == MetricMode::Metric) {
        report.violations.push_back({Axiom::Positivity, i, j, -1});
      }
    }
  }
  // One constraint per (endpoint pair, middle vertex).
  for (Index i = 0; i < n; ++i) {
    for (Index k = i + 1; k < n; ++k) {
      for (Index j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (d(i, k) > d(i, j) + d(j, k)) {
          report.violations.push_back({Axiom::Triangle, i, j, k});
        }
      }
    }
  }
  return report;
}

/// n points with exact rational coordinates, one row per point.
class PointConfig {
 public:
  PointConfig(Index count, Index dimension) : coords_(count, dimension) {
    if (count < 1 || dimension < 1) {
      throw std::invalid_argument("point configuration needs count >= 1 and dimension >= 1");
    }
    coords_.setZero();
  }

  explicit PointConfig(RationalMatrix coords) : coords_(std::move(coords)) {
    if (coords_.rows() < 1 || coords_.cols() < 1) {
      throw std::invalid_argument("point configuration needs count >= 1 and dimension >= 1");
    }
  }

  Index count() const { return coords_.rows(); }
  Index dimension() const { return coords_.cols(); }

  const Rational& operator()(Index point, Index axis) const { return coords_(point, axis); }
  Rational& operator()(Index point, Index axis) { return coords_(point, axis); }

  auto point(Index i) const { return coords_.row(i); }

  const RationalMatrix& coords() const { return coords_; }

  bool operator==(const PointConfig& other) const {
    return coords_.rows() == other.coords_.rows() && coords_.cols() == other.coords_.cols() &&
           coords_ == other.coords_;
  }

 private:
  RationalMatrix coords_;  // count x dimension
};

enum class LpNorm { L1, LInf };

/// Exact l1 distance of two coordinate rows (or any two equally sized
/// expressions). Works in place to avoid temporary churn in hot loops.
template <typename DerivedA, typename DerivedB>
Rational l1_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Rational sum(0);
  Rational diff;
  for (Index k = 0; k < a.size(); ++k) {
    diff = a(k);
    diff -= b(k);
    mpq_abs(diff.get_mpq_t(), diff.get_mpq_t());
    sum += diff;
  }
  return sum;
}

/// Exact l-infinity distance (coordinate-wise maximum).
template <typename DerivedA, typename DerivedB>
Rational linf_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Rational best(0);
  Rational diff;
  for (Index k = 0; k < a.size(); ++k) {
    diff = a(k);
    diff -= b(k);
    mpq_abs(diff.get_mpq_t(), diff.get_mpq_t());
    if (diff > best) swap(best, diff);
  }
  return best;
}

/// Pairwise distance matrix of a point configuration under the chosen norm.
/// Only p = 1 and p = infinity are offered: these are the exponents for
/// which rational points have rational distances, keeping every later
/// comparison exact. The result is a proper metric iff the points are
/// pairwise distinct.
inline FiniteMetric metric_from_points(const PointConfig& points, LpNorm p) {
  const Index n = points.count();
  if (n < 2) throw std::invalid_argument("need at least 2 points");
  FiniteMetric d(n);
  Index pos = 0;
  RationalVector& entries = d.upper_triangle();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j, ++pos) {
      entries[pos] = p == LpNorm::L1 ? l1_distance(points.point(i), points.point(j))
                                     : linf_distance(points.point(i), points.point(j));
    }
  }
  return d;
}

/// Applies a vertex relabeling to the rows: result.point(i) = points.point(perm[i]).
inline PointConfig permute(const PointConfig& points, std::span<const Index> perm) {
  if (static_cast<Index>(perm.size()) != points.count()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  RationalMatrix coords(points.count(), points.dimension());
  for (Index i = 0; i < points.count(); ++i) {
    coords.row(i) = points.coords().row(perm[i]);
  }
  return PointConfig(std::move(coords));
}

// ---------------------------------------------------------------------------
// File formats.
//
// Metric file:  line 1 is n, line 2 the n(n-1)/2 upper-triangle entries in
// pair order. Point file: line 1 is "n m", then n lines of m rationals.
// Vertices are printed 1-based.
// ---------------------------------------------------------------------------

inline FiniteMetric read_metric(std::istream& in) {
  const long n = read_count(in, "vertex count");
  if (n < 2) throw std::invalid_argument("metric file needs n >= 2");
  RationalVector entries(pair_count(n));
  for (Index p = 0; p < entries.size(); ++p) {
    entries[p] = read_rational(in, "metric entry");
  }
  return FiniteMetric(n, std::move(entries));
}

inline void write_metric(std::ostream& out, const FiniteMetric& d) {
  out << d.n() << '\n';
  for (Index p = 0; p < d.pairs(); ++p) {
    if (p > 0) out << ' ';
    out << to_string(d.upper_triangle()[p]);
  }
  out << '\n';
}

inline PointConfig read_points(std::istream& in) {
  const long n = read_count(in, "point count");
  const long m = read_count(in, "dimension");
  if (n < 1 || m < 1) throw std::invalid_argument("point file needs n >= 1 and m >= 1");
  RationalMatrix coords(n, m);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < m; ++k) {
      coords(i, k) = read_rational(in, "coordinate");
    }
  }
  return PointConfig(std::move(coords));
}

inline void write_points(std::ostream& out, const PointConfig& points) {
  out << points.count() << ' ' << points.dimension() << '\n';
  for (Index i = 0; i < points.count(); ++i) {
    for (Index k = 0; k < points.dimension(); ++k) {
      if (k > 0) out << ' ';
      out << to_string(points(i, k));
    }
    out << '\n';
  }
}

}  // namespace cutsig
