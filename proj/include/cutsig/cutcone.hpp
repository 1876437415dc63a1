#pragma once

#include <utility>
#include <variant>

#include "cutsig/cut.hpp"
#include "cutsig/metric.hpp"
#include "cutsig/simplex.hpp"

namespace cutsig {

/// Answer to the cut cone membership question for a semimetric d on n
/// points: either a nonnegative cut decomposition witnessing d in CUT_n,
/// or a Farkas functional witnessing that no such decomposition exists.
/// Exactly one of the two is present, and both are verified exactly
/// before being returned.
class MembershipResult {
 public:
  static MembershipResult feasible(CutDecomposition decomposition) {
    return MembershipResult(std::move(decomposition));
  }
  static MembershipResult infeasible(FarkasCertificate certificate) {
    return MembershipResult(std::move(certificate));
  }

  bool is_feasible() const { return value_.index() == 0; }
  const CutDecomposition& decomposition() const { return std::get<0>(value_); }
  const FarkasCertificate& certificate() const { return std::get<1>(value_); }

 private:
  explicit MembershipResult(CutDecomposition d) : value_(std::move(d)) {}
  explicit MembershipResult(FarkasCertificate c) : value_(std::move(c)) {}

  std::variant<CutDecomposition, FarkasCertificate> value_;
};

/// Default cap on the ground-set size for membership solves. The LP has
/// 2^(n-1) - 1 columns, so the cap guards against accidental blowup, not
/// against any theoretical limit; callers may raise it.
inline constexpr Index kDefaultMembershipMaxN = 14;

/**
 * Decides membership of d in the cut cone CUT_n by exact linear
 * programming over the full canonical cut basis.
 *
 * The feasibility system is A w = d restricted to pair rows, w >= 0,
 * where column k of A is the pair vector of the k-th canonical cut
 * metric. A feasible basic solution yields a decomposition with at most
 * n(n-1)/2 terms; infeasibility yields the Phase-I Farkas functional.
 *
 * The input must be a semimetric (symmetry and zero diagonal are
 * structural in FiniteMetric; nonnegativity is checked here). Throws
 * std::invalid_argument on a violation and ResourceLimitError when
 * n exceeds max_n.
 */
inline MembershipResult cutcone_membership(const FiniteMetric& d,
                                           Index max_n = kDefaultMembershipMaxN) {
  const Index n = d.n();
  ValidationReport report = validate(d, MetricMode::Semimetric);
  if (!report.valid()) {
    throw std::invalid_argument("cutcone_membership: input is not a semimetric");
  }
  if (n > max_n) {
    throw ResourceLimitError("cutcone_membership: ground set exceeds size cap");
  }

  const Index pairs = pair_count(n);
  const Index cuts = cut_count(n);
  RationalMatrix A = RationalMatrix::Zero(pairs, cuts);
  for (Index k = 0; k < cuts; ++k) {
    const std::uint64_t members = (static_cast<std::uint64_t>(k) << 1) | 1u;
    for (Index i = 0; i < n; ++i) {
      const bool side_i = (members >> i) & 1u;
      for (Index j = i + 1; j < n; ++j) {
        if (side_i != (((members >> j) & 1u) != 0)) {
          A(pair_index(i, j, n), k) = Rational(1);
        }
      }
    }
  }
  const RationalVector b = d.upper_triangle();
  const RationalVector c = RationalVector::Zero(cuts);

  LpSolution<Rational> lp = solve_equality_lp<Rational>(A, b, c);

  if (lp.status == LpStatus::Optimal) {
    std::vector<std::pair<Cut, Rational>> terms;
    for (Index k = 0; k < cuts; ++k) {
      if (sgn(lp.x[k]) > 0) {
        terms.emplace_back(Cut::from_ordinal(n, k), lp.x[k]);
      }
    }
    CutDecomposition decomposition(n, std::move(terms));
    if (!verify_decomposition(d, decomposition)) {
      throw std::logic_error("cutcone_membership: decomposition failed self-check");
    }
    return MembershipResult::feasible(std::move(decomposition));
  }

  FarkasCertificate certificate{n, lp.farkas};
  certificate.normalize();
  if (!verify_farkas(d, certificate)) {
    throw std::logic_error("cutcone_membership: certificate failed self-check");
  }
  return MembershipResult::infeasible(std::move(certificate));
}

}  // namespace cutsig
