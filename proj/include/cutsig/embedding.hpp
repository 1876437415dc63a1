#pragma once

#include <utility>
#include <variant>

#include "cutsig/cutcone.hpp"

namespace cutsig {

/**
 * Indicator-coordinate embedding of a cut decomposition: one axis per
 * term, where point i gets coordinate w_C on the axis of (C, w_C) when
 * i is in C and 0 otherwise. Per pair, the l1 distance along axis C is
 * w_C exactly when C separates the pair, so the distance matrix of the
 * output is the decomposition's semimetric, identically.
 *
 * An empty decomposition (the zero semimetric) is lifted to one axis at
 * the origin so the result is a well-formed configuration.
 */
inline PointConfig embed_from_decomposition(const CutDecomposition& decomposition) {
  const Index n = decomposition.n();
  const Index terms = static_cast<Index>(decomposition.terms().size());
  const Index m = std::max<Index>(terms, 1);
  RationalMatrix coords = RationalMatrix::Zero(n, m);
  for (Index t = 0; t < terms; ++t) {
    const auto& [cut, weight] = decomposition.terms()[t];
    for (Index i = 0; i < n; ++i) {
      if (cut.contains(i)) coords(i, t) = weight;
    }
  }
  return PointConfig(std::move(coords));
}

/// Either an explicit rational l1 configuration realizing the input
/// metric, or the Farkas certificate that none exists.
class EmbedResult {
 public:
  static EmbedResult embedded(PointConfig points) { return EmbedResult(std::move(points)); }
  static EmbedResult not_embeddable(FarkasCertificate certificate) {
    return EmbedResult(std::move(certificate));
  }

  bool is_embedded() const { return value_.index() == 0; }
  const PointConfig& points() const { return std::get<0>(value_); }
  const FarkasCertificate& certificate() const { return std::get<1>(value_); }

 private:
  explicit EmbedResult(PointConfig p) : value_(std::move(p)) {}
  explicit EmbedResult(FarkasCertificate c) : value_(std::move(c)) {}

  std::variant<PointConfig, FarkasCertificate> value_;
};

/// Constructive l1-embeddability: decide membership in the cut cone, then
/// realize a feasible decomposition as points. The roundtrip is exact: on
/// success the l1 metric of the output equals d with zero tolerance.
inline EmbedResult embed_metric(const FiniteMetric& d, Index max_n = kDefaultMembershipMaxN) {
  MembershipResult membership = cutcone_membership(d, max_n);
  if (!membership.is_feasible()) {
    return EmbedResult::not_embeddable(membership.certificate());
  }
  PointConfig points = embed_from_decomposition(membership.decomposition());
  if (!(metric_from_points(points, LpNorm::L1) == d)) {
    throw std::logic_error("embed_metric: roundtrip failed self-check");
  }
  return EmbedResult::embedded(std::move(points));
}

}  // namespace cutsig
