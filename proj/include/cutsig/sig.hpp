#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "cutsig/metric.hpp"

namespace cutsig {

/// Simple undirected graph on vertices 0..n-1 with a canonical edge order:
/// every edge is stored as (i, j) with i < j, lexicographically sorted.
/// Equality is labeled edge-set equality, which is what the promise of the
/// graph problem asks for.
class LabeledGraph {
 public:
  using Edge = std::pair<Index, Index>;

  explicit LabeledGraph(Index n, std::vector<Edge> edges = {})
      : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("LabeledGraph: vertex count must be positive");
    for (Edge& e : edges_) {
      if (e.first > e.second) std::swap(e.first, e.second);
      if (e.first < 0 || e.second >= n_ || e.first == e.second) {
        throw std::invalid_argument("LabeledGraph: edge endpoints out of range");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw std::invalid_argument("LabeledGraph: duplicate edge");
    }
    adjacency_.resize(n_);
    for (const Edge& e : edges_) {
      adjacency_[e.first].push_back(e.second);
      adjacency_[e.second].push_back(e.first);
    }
    for (std::vector<Index>& row : adjacency_) std::sort(row.begin(), row.end());
  }

  Index n() const { return n_; }
  Index edge_count() const { return static_cast<Index>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Index>& neighbors(Index i) const { return adjacency_.at(i); }
  Index degree(Index i) const { return static_cast<Index>(neighbors(i).size()); }

  bool has_edge(Index i, Index j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
  }

  bool has_isolated_vertex() const {
    for (const std::vector<Index>& row : adjacency_) {
      if (row.empty()) return true;
    }
    return false;
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Index n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Index>> adjacency_;
};

/// Relabeling: the result has edge {i, j} iff the input has
/// {perm[i], perm[j]}, mirroring permute on metrics so that the two stay
/// equivariant under the same perm.
inline LabeledGraph permute(const LabeledGraph& g, std::span<const Index> perm) {
  const Index n = g.n();
  if (static_cast<Index>(perm.size()) != n) {
    throw std::invalid_argument("permute: permutation size mismatch");
  }
  std::vector<Index> inverse(n, -1);
  for (Index i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || inverse[perm[i]] != -1) {
      throw std::invalid_argument("permute: not a permutation");
    }
    inverse[perm[i]] = i;
  }
  std::vector<LabeledGraph::Edge> edges;
  edges.reserve(g.edges().size());
  for (const LabeledGraph::Edge& e : g.edges()) {
    edges.emplace_back(inverse[e.first], inverse[e.second]);
  }
  return LabeledGraph(n, std::move(edges));
}

/// Counter for the exact-comparison work of a SIG computation: one unit
/// per distance examined in the radius minima, one per pair sign test.
/// Grows quadratically in n, which tests assert empirically.
struct SigStats {
  std::int64_t comparisons = 0;
};

using InfluenceRadii = RationalVector;

namespace detail {

inline void require_proper(const FiniteMetric& d, const char* where) {
  if (d.n() < 2) throw std::invalid_argument(std::string(where) + ": need n >= 2");
  const RationalVector& upper = d.upper_triangle();
  for (Index p = 0; p < upper.size(); ++p) {
    if (sgn(upper[p]) <= 0) {
      throw std::invalid_argument(std::string(where) +
                                  ": zero or negative distance, metric is not proper");
    }
  }
}

}  // namespace detail

/// r_i = min over j != i of d(i, j). Requires a proper metric: a zero
/// distance would force an empty sphere of influence.
inline InfluenceRadii radii_of_influence(const FiniteMetric& d, SigStats* stats = nullptr) {
  detail::require_proper(d, "radii_of_influence");
  const Index n = d.n();
  InfluenceRadii r(n);
  std::int64_t comparisons = 0;
  for (Index i = 0; i < n; ++i) {
    Rational best = d(i, i == 0 ? 1 : 0);
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      ++comparisons;
      if (d(i, j) < best) best = d(i, j);
    }
    r[i] = best;
  }
  if (stats) stats->comparisons += comparisons;
  return r;
}

/// Sphere-of-influence graph of a proper metric: edge {i, j} iff
/// d(i, j) < r_i + r_j, decided by exact strict comparison. The work is n
/// radius minima plus one sign test per pair.
inline LabeledGraph sig_from_metric(const FiniteMetric& d, SigStats* stats = nullptr) {
  const InfluenceRadii r = radii_of_influence(d, stats);
  const Index n = d.n();
  std::vector<LabeledGraph::Edge> edges;
  std::int64_t comparisons = 0;
  Rational bound;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      ++comparisons;
      bound = r[i] + r[j];
      if (d(i, j) < bound) edges.emplace_back(i, j);
    }
  }
  if (stats) stats->comparisons += comparisons;
  return LabeledGraph(n, std::move(edges));
}

/// SIG of a point configuration. Points must be pairwise distinct; a
/// duplicate shows up as a zero distance and is rejected here rather than
/// surfacing as a generic properness failure.
inline LabeledGraph sig_from_points(const PointConfig& points, LpNorm p,
                                    SigStats* stats = nullptr) {
  FiniteMetric d = metric_from_points(points, p);
  const RationalVector& upper = d.upper_triangle();
  for (Index k = 0; k < upper.size(); ++k) {
    if (sgn(upper[k]) == 0) {
      throw std::invalid_argument("sig_from_points: duplicate points");
    }
  }
  return sig_from_metric(d, stats);
}

/// The promise predicate of the graph problem: d is a SIG metric for G.
/// Labeled edge-set equality, never isomorphism. Improper or mismatched
/// inputs are simply not SIG metrics for G, so this returns false rather
/// than throwing.
inline bool is_sig_metric(const LabeledGraph& g, const FiniteMetric& d) {
  if (g.n() != d.n() || d.n() < 2) return false;
  const RationalVector& upper = d.upper_triangle();
  for (Index p = 0; p < upper.size(); ++p) {
    if (sgn(upper[p]) <= 0) return false;
  }
  return sig_from_metric(d) == g;
}

/// Graph file: line 1 "n e", then e lines "i j" with 1-based endpoints,
/// i < j, lexicographically sorted. Round-trips bit-exactly.
inline LabeledGraph read_graph(std::istream& in) {
  const Index n = read_count(in, "vertex count");
  const Index e = read_count(in, "edge count");
  std::vector<LabeledGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (Index k = 0; k < e; ++k) {
    const Index i = read_count(in, "edge endpoint");
    const Index j = read_count(in, "edge endpoint");
    if (i < 1 || j < 1 || i > n || j > n) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    edges.emplace_back(i - 1, j - 1);
  }
  return LabeledGraph(n, std::move(edges));
}

inline void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const LabeledGraph::Edge& e : g.edges()) {
    out << e.first + 1 << ' ' << e.second + 1 << '\n';
  }
}

}  // namespace cutsig
