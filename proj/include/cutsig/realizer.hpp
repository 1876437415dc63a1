#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "cutsig/cut.hpp"
#include "cutsig/sig.hpp"
#include "cutsig/simplex.hpp"

namespace cutsig {

/// Candidate nearest-neighbor assignment: sigma[i] is the vertex whose
/// distance will realize the radius r_i. Always a G-neighbor of i, since
/// a vertex and its nearest neighbor share a SIG edge.
struct NearestNeighborMap {
  std::vector<Index> sigma;
};

/// Validates sigma against its target graph.
inline void require_consistent(const NearestNeighborMap& map, const LabeledGraph& g) {
  if (static_cast<Index>(map.sigma.size()) != g.n()) {
    throw std::invalid_argument("NearestNeighborMap: size mismatch");
  }
  for (Index i = 0; i < g.n(); ++i) {
    if (map.sigma[i] == i || !g.has_edge(i, map.sigma[i])) {
      throw std::invalid_argument("NearestNeighborMap: sigma(i) must be a neighbor of i");
    }
  }
}

/// Number of candidate maps, the product of vertex degrees, saturated at
/// the int64 maximum.
inline std::int64_t nn_map_count(const LabeledGraph& g) {
  const std::int64_t cap = std::numeric_limits<std::int64_t>::max();
  std::int64_t product = 1;
  for (Index i = 0; i < g.n(); ++i) {
    const std::int64_t degree = g.degree(i);
    if (degree == 0) return 0;
    if (product > cap / degree) return cap;
    product *= degree;
  }
  return product;
}

/**
 * Deterministic stream over all maps with sigma(i) in neighbors(i).
 * Odometer order: position n-1 advances fastest, and each position steps
 * through its sorted neighbor list, so the stream is lexicographic in
 * (sigma(0), ..., sigma(n-1)).
 *
 * Construction rejects graphs with an isolated vertex: no SIG has one,
 * so such graphs fail structurally before any enumeration.
 */
class NnMapStream {
 public:
  explicit NnMapStream(const LabeledGraph& g) : g_(&g), choice_(g.n(), 0) {
    if (g.has_isolated_vertex()) {
      throw std::invalid_argument("NnMapStream: graph has an isolated vertex");
    }
  }
  // The stream views the graph it was built over; a temporary would dangle.
  explicit NnMapStream(LabeledGraph&&) = delete;

  std::optional<NearestNeighborMap> next() {
    if (done_) return std::nullopt;
    NearestNeighborMap map;
    map.sigma.resize(g_->n());
    for (Index i = 0; i < g_->n(); ++i) {
      map.sigma[i] = g_->neighbors(i)[choice_[i]];
    }
    Index pos = g_->n() - 1;
    for (;;) {
      if (++choice_[pos] < g_->degree(pos)) break;
      choice_[pos] = 0;
      if (pos == 0) {
        done_ = true;
        break;
      }
      --pos;
    }
    return map;
  }

 private:
  const LabeledGraph* g_;
  std::vector<Index> choice_;
  bool done_ = false;
};

/// A verified positive answer: a normalized cut-cone metric whose SIG is
/// the target graph, with the nearest-neighbor structure that realized it
/// and the optimal strictness margin of the defining LP.
struct Realization {
  FiniteMetric d;
  CutDecomposition dec;
  NearestNeighborMap sigma;
  Rational margin;
};

inline constexpr Index kDefaultRealizerMaxN = 8;
inline constexpr std::int64_t kDefaultRealizerBudget = 10000;

/**
 * The margin LP for a fixed nearest-neighbor structure. Variables are the
 * canonical cut weights w_C >= 0 and a shared slack t >= 0; writing
 * d(i,j) for sum_C w_C delta_C(i,j) and r_i for d(i, sigma(i)), the
 * program is
 *
 *   maximize t  subject to
 *     sum_C w_C = 1                                (normalization)
 *     d(i, sigma(i)) <= d(i, k)   for k not in {i, sigma(i)}
 *     d(i, j) >= t                for every pair   (positivity)
 *     d(i, j) + t <= r_i + r_j    for every edge of G
 *     d(i, j) >= r_i + r_j        for every non-edge of G.
 *
 * Strict feasibility of the SIG system is exactly t* > 0: scale
 * invariance of the cone and of the SIG predicate makes the normalized
 * region faithful, and every strictly feasible point has a positive
 * margin after normalization. Restricting t to be nonnegative does not
 * disturb that criterion, because any optimum of the free-t program that
 * is positive is also feasible here.
 *
 * Returns the verified Realization, or nullopt when no metric of the
 * normalized cut cone with this nearest-neighbor structure has SIG equal
 * to G (the InfeasibleForSigma outcome).
 */
inline std::optional<Realization> margin_lp(const LabeledGraph& g, const NearestNeighborMap& map,
                                            Index max_n = kDefaultRealizerMaxN) {
  require_consistent(map, g);
  const Index n = g.n();
  if (n > max_n) {
    throw ResourceLimitError("margin_lp: graph exceeds size cap");
  }

  const std::vector<Cut> cuts = enumerate_cuts(n);
  const Index K = static_cast<Index>(cuts.size());
  const Index t_col = K;

  std::vector<RationalVector> rows;
  std::vector<RowRelation> relations;
  auto add_row = [&](RowRelation rel) -> RationalVector& {
    rows.emplace_back(RationalVector::Zero(K + 1));
    relations.push_back(rel);
    return rows.back();
  };
  // delta_C(i,j) summed into row coefficients.
  auto add_pair = [&](RationalVector& row, Index i, Index j, int factor) {
    if (i == j) return;
    for (Index k = 0; k < K; ++k) {
      if (cuts[k].separates(i, j)) row[k] += factor;
    }
  };

  {
    RationalVector& row = add_row(RowRelation::Eq);
    row.head(K).setConstant(Rational(1));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) {
      if (k == i || k == map.sigma[i]) continue;
      RationalVector& row = add_row(RowRelation::Le);
      add_pair(row, i, map.sigma[i], 1);
      add_pair(row, i, k, -1);
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      RationalVector& row = add_row(RowRelation::Ge);
      add_pair(row, i, j, 1);
      row[t_col] = -1;
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      RationalVector& row = add_row(g.has_edge(i, j) ? RowRelation::Le : RowRelation::Ge);
      add_pair(row, i, j, 1);
      add_pair(row, i, map.sigma[i], -1);
      add_pair(row, j, map.sigma[j], -1);
      if (g.has_edge(i, j)) row[t_col] = 1;
    }
  }

  RowFormLp<Rational> lp;
  lp.A = RationalMatrix::Zero(static_cast<Index>(rows.size()), K + 1);
  for (Index r = 0; r < lp.A.rows(); ++r) lp.A.row(r) = rows[r].transpose();
  lp.b = RationalVector::Zero(lp.A.rows());
  lp.b[0] = Rational(1);
  lp.c = RationalVector::Zero(K + 1);
  lp.c[t_col] = Rational(1);
  lp.relations = std::move(relations);
  lp.maximize = true;

  LpSolution<Rational> solution = solve_row_form(lp);
  if (solution.status == LpStatus::Unbounded) {
    throw std::logic_error("margin_lp: program cannot be unbounded");
  }
  if (solution.status == LpStatus::Infeasible || sgn(solution.objective) <= 0) {
    return std::nullopt;
  }

  std::vector<std::pair<Cut, Rational>> terms;
  for (Index k = 0; k < K; ++k) {
    if (sgn(solution.x[k]) > 0) terms.emplace_back(cuts[k], solution.x[k]);
  }
  Realization realization{FiniteMetric(n), CutDecomposition(n, std::move(terms)), map,
                          solution.objective};
  realization.d = decomposition_metric(realization.dec);

  if (!verify_decomposition(realization.d, realization.dec) ||
      !(sig_from_metric(realization.d) == g)) {
    throw std::logic_error("margin_lp: realization failed self-check");
  }
  const InfluenceRadii r = radii_of_influence(realization.d);
  for (Index i = 0; i < n; ++i) {
    if (realization.d(i, map.sigma[i]) != r[i]) {
      throw std::logic_error("margin_lp: sigma does not realize the radii");
    }
  }
  return realization;
}

enum class RealizeStatus { Realized, NotRealizableStructural, Exhausted };

/// Search outcome. Realized carries the verified realization; Exhausted
/// reports how many candidate maps were tried, and is never a proof of
/// non-realizability.
struct RealizeResult {
  RealizeStatus status;
  std::optional<Realization> realization;
  std::int64_t maps_tried = 0;
};

/// Desk-scale search for an l1 SIG realization: reject isolated vertices
/// structurally, then drive candidate maps through margin_lp in stream
/// order until one succeeds or the budget runs out. First success wins,
/// deterministically.
inline RealizeResult realize_l1_sig(const LabeledGraph& g,
                                    std::int64_t budget = kDefaultRealizerBudget,
                                    Index max_n = kDefaultRealizerMaxN) {
  if (g.has_isolated_vertex()) {
    return RealizeResult{RealizeStatus::NotRealizableStructural, std::nullopt, 0};
  }
  if (g.n() > max_n) {
    throw ResourceLimitError("realize_l1_sig: graph exceeds size cap");
  }
  NnMapStream stream(g);
  std::int64_t tried = 0;
  while (tried < budget) {
    std::optional<NearestNeighborMap> map = stream.next();
    if (!map) break;
    ++tried;
    std::optional<Realization> realization = margin_lp(g, *map, max_n);
    if (realization) {
      return RealizeResult{RealizeStatus::Realized, std::move(realization), tried};
    }
  }
  return RealizeResult{RealizeStatus::Exhausted, std::nullopt, tried};
}

/// Report file: graph, metric, decomposition, sigma line (1-based
/// images), margin line, with "---" between sections.
inline void write_realization_report(std::ostream& out, const LabeledGraph& g,
                                     const Realization& realization) {
  write_graph(out, g);
  out << "---\n";
  write_metric(out, realization.d);
  out << "---\n";
  write_decomposition(out, realization.dec);
  out << "---\n";
  out << "sigma:";
  for (Index image : realization.sigma.sigma) out << ' ' << image + 1;
  out << "\n---\n";
  out << "margin: " << to_string(realization.margin) << '\n';
}

}  // namespace cutsig
