#pragma once

// Test-side machinery that recomputes expected values through code paths
// independent of the library: plain Gauss-Jordan elimination, sign-branch
// absolute values, min_element radii, and set-based edge collection. Every
// frozen constant in the test suite was produced or checked by one of
// these, never copied from library output.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cutsig/cut.hpp"
#include "cutsig/metric.hpp"
#include "cutsig/sig.hpp"

namespace oracles {

using cutsig::FiniteMetric;
using cutsig::Index;
using cutsig::LabeledGraph;
using cutsig::PointConfig;
using cutsig::Rational;
using cutsig::RationalMatrix;
using cutsig::RationalVector;

using Rng = std::mt19937_64;

/// Gauss-Jordan solve of A x = b. Returns a solution with free variables
/// pinned to zero, or nullopt when the system is inconsistent.
inline std::optional<RationalVector> gauss_solve(RationalMatrix A, RationalVector b) {
  const Index rows = A.rows();
  const Index cols = A.cols();
  std::vector<Index> pivot_col_of_row(rows, -1);
  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index pivot = -1;
    for (Index r = rank; r < rows; ++r) {
      if (sgn(A(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    A.row(pivot).swap(A.row(rank));
    std::swap(b[pivot], b[rank]);
    const Rational inv = Rational(1) / A(rank, col);
    A.row(rank) *= inv;
    b[rank] *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == rank || sgn(A(r, col)) == 0) continue;
      const Rational factor = A(r, col);
      A.row(r) -= factor * A.row(rank);
      b[r] -= factor * b[rank];
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  for (Index r = rank; r < rows; ++r) {
    if (sgn(b[r]) != 0) return std::nullopt;
  }
  RationalVector x = RationalVector::Zero(cols);
  for (Index r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = b[r];
  return x;
}

inline Rational abs_rational(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

/// Distances recomputed without the library's in-place abs path.
inline Rational brute_l1(const PointConfig& points, Index i, Index j) {
  Rational sum(0);
  for (Index k = 0; k < points.dimension(); ++k) {
    sum += abs_rational(Rational(points(i, k) - points(j, k)));
  }
  return sum;
}

inline Rational brute_linf(const PointConfig& points, Index i, Index j) {
  Rational best(0);
  for (Index k = 0; k < points.dimension(); ++k) {
    Rational diff = abs_rational(Rational(points(i, k) - points(j, k)));
    if (diff > best) best = diff;
  }
  return best;
}

/// Radii recomputed by materializing each row and taking min_element.
inline RationalVector naive_radii(const FiniteMetric& d) {
  const Index n = d.n();
  RationalVector r(n);
  for (Index i = 0; i < n; ++i) {
    std::vector<Rational> row;
    for (Index j = 0; j < n; ++j) {
      if (j != i) row.push_back(d(i, j));
    }
    r[i] = *std::min_element(row.begin(), row.end());
  }
  return r;
}

/// Edge set recomputed from naive radii into an ordered set.
inline std::set<std::pair<Index, Index>> naive_sig_edges(const FiniteMetric& d) {
  const RationalVector r = naive_radii(d);
  std::set<std::pair<Index, Index>> edges;
  for (Index i = 0; i < d.n(); ++i) {
    for (Index j = i + 1; j < d.n(); ++j) {
      if (d(i, j) < r[i] + r[j]) edges.insert({i, j});
    }
  }
  return edges;
}

inline std::vector<Index> random_permutation(Rng& rng, Index n) {
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Pairwise distinct integer-coordinate points, uniform in [lo, hi]^m.
inline PointConfig random_int_points(Rng& rng, Index n, Index m, long lo, long hi) {
  std::uniform_int_distribution<long> coord(lo, hi);
  RationalMatrix coords(n, m);
  for (Index i = 0; i < n; ++i) {
    for (;;) {
      for (Index k = 0; k < m; ++k) coords(i, k) = Rational(coord(rng));
      bool duplicate = false;
      for (Index j = 0; j < i && !duplicate; ++j) {
        duplicate = coords.row(i) == coords.row(j);
      }
      if (!duplicate) break;
    }
  }
  return PointConfig(std::move(coords));
}

/// Integer entries uniform in [base, 2*base]: the triangle inequality then
/// holds for free since every sum of two entries reaches 2*base.
inline FiniteMetric random_proper_metric(Rng& rng, Index n, long base = 5) {
  std::uniform_int_distribution<long> entry(base, 2 * base);
  FiniteMetric d(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) d.set(i, j, Rational(entry(rng)));
  }
  return d;
}

/// The bipartite-distance metric on 5 vertices with parts {1,2} and
/// {3,4,5}: 1 across the parts, 2 within. The standard witness that the
/// semimetric cone and the cut cone part ways at n = 5.
inline FiniteMetric k23_metric() {
  FiniteMetric d(5);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 2; j < 5; ++j) d.set(i, j, Rational(1));
  }
  d.set(0, 1, Rational(2));
  d.set(2, 3, Rational(2));
  d.set(2, 4, Rational(2));
  d.set(3, 4, Rational(2));
  return d;
}

/// Hand-derived refutation of k23_metric: y_{ij} = b_i b_j for
/// b = (-1,-1,1,1,1). Every cut C with s members summing b gives
/// <y, delta_C> = s_C (1 - s_C) <= 0 since s_C is an integer, while
/// <y, d> = 2 > 0. Frozen after checking those identities by hand.
inline cutsig::FarkasCertificate k23_certificate() {
  const int b[5] = {-1, -1, 1, 1, 1};
  cutsig::FarkasCertificate certificate{5, RationalVector(10)};
  for (Index i = 0; i < 5; ++i) {
    for (Index j = i + 1; j < 5; ++j) {
      certificate.y[cutsig::pair_index(i, j, 5)] = Rational(b[i] * b[j]);
    }
  }
  return certificate;
}

/// Proper metric on n >= 5 vertices that restricts to k23_metric on a
/// random 5-subset, hence stays outside the cut cone: a decomposition of
/// the whole would restrict to one of the forbidden block. Extra vertices
/// sit at a uniform far distance M >= the base diameter from everything.
inline FiniteMetric k23_extension(Rng& rng, Index n) {
  std::uniform_int_distribution<long> far(2, 4);
  const Rational m(far(rng));
  FiniteMetric base = k23_metric();
  FiniteMetric d(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      d.set(i, j, (j < 5) ? base(i, j) : m);
    }
  }
  const std::vector<Index> perm = random_permutation(rng, n);
  return permute(d, std::span<const Index>(perm));
}

inline FiniteMetric uniform_metric(Index n, const Rational& value) {
  FiniteMetric d(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) d.set(i, j, value);
  }
  return d;
}

inline LabeledGraph complete_graph(Index n) {
  std::vector<LabeledGraph::Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return LabeledGraph(n, std::move(edges));
}

inline LabeledGraph path_graph(Index n) {
  std::vector<LabeledGraph::Edge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return LabeledGraph(n, std::move(edges));
}

inline LabeledGraph cycle_graph(Index n) {
  std::vector<LabeledGraph::Edge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return LabeledGraph(n, std::move(edges));
}

/// Star with the center at vertex 0 and `leaves` leaves.
inline LabeledGraph star_graph(Index leaves) {
  std::vector<LabeledGraph::Edge> edges;
  for (Index i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return LabeledGraph(leaves + 1, std::move(edges));
}

}  // namespace oracles
