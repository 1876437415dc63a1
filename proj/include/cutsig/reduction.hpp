#pragma once

#include <utility>
#include <variant>

#include "cutsig/cutcone.hpp"
#include "cutsig/sig.hpp"

namespace cutsig {

/// An instance of the graph problem: a pair (G, d) on the same vertex
/// set. The pair lies in the promise domain iff d is a SIG metric for G;
/// instances outside the domain are representable and get flagged by the
/// solver rather than rejected at construction.
struct ProblemBInstance {
  LabeledGraph g;
  FiniteMetric d;

  ProblemBInstance(LabeledGraph graph, FiniteMetric metric)
      : g(std::move(graph)), d(std::move(metric)) {
    if (g.n() != d.n()) {
      throw std::invalid_argument("ProblemBInstance: graph and metric sizes differ");
    }
  }
};

/// The reduction d |-> (G_d, d): pair the metric with its own
/// sphere-of-influence graph. Output always satisfies the promise. Runs
/// in O(n^2) exact comparisons; stats, when given, receives the count.
inline ProblemBInstance reduce_a_to_b(const FiniteMetric& d, SigStats* stats = nullptr) {
  return ProblemBInstance(sig_from_metric(d, stats), d);
}

/// The forgetful reduction (G, d) |-> d.
inline FiniteMetric reduce_b_to_a(const ProblemBInstance& instance) { return instance.d; }

enum class BAnswer { Yes, No, PromiseViolated };

/// Verdict on a ProblemBInstance. Yes carries the decomposition
/// witnessing d in CUT_n, No carries the Farkas certificate, and
/// PromiseViolated carries nothing: off-promise behavior is unconstrained
/// and the explicit flag is this artifact's choice.
class BResult {
 public:
  static BResult yes(CutDecomposition decomposition) {
    return BResult(std::variant<std::monostate, CutDecomposition, FarkasCertificate>(
        std::in_place_index<1>, std::move(decomposition)));
  }
  static BResult no(FarkasCertificate certificate) {
    return BResult(std::variant<std::monostate, CutDecomposition, FarkasCertificate>(
        std::in_place_index<2>, std::move(certificate)));
  }
  static BResult promise_violated() {
    return BResult(std::variant<std::monostate, CutDecomposition, FarkasCertificate>());
  }

  BAnswer answer() const {
    switch (value_.index()) {
      case 1:
        return BAnswer::Yes;
      case 2:
        return BAnswer::No;
      default:
        return BAnswer::PromiseViolated;
    }
  }
  const CutDecomposition& decomposition() const { return std::get<1>(value_); }
  const FarkasCertificate& certificate() const { return std::get<2>(value_); }

 private:
  explicit BResult(std::variant<std::monostate, CutDecomposition, FarkasCertificate> v)
      : value_(std::move(v)) {}

  std::variant<std::monostate, CutDecomposition, FarkasCertificate> value_;
};

/// Decides a ProblemBInstance: checks the promise, then answers
/// membership of d in CUT_n with the corresponding verified certificate.
/// The promise asks for a metric that is a SIG metric for G, so a
/// triangle violation is flagged here like a SIG mismatch rather than
/// surfacing as a membership precondition error. Resource limits of the
/// membership solve propagate.
inline BResult solve_problem_b(const ProblemBInstance& instance,
                               Index max_n = kDefaultMembershipMaxN) {
  if (!validate(instance.d, MetricMode::Metric).valid() ||
      !is_sig_metric(instance.g, instance.d)) {
    return BResult::promise_violated();
  }
  MembershipResult membership = cutcone_membership(instance.d, max_n);
  if (membership.is_feasible()) {
    return BResult::yes(membership.decomposition());
  }
  return BResult::no(membership.certificate());
}

/// Instance file: a graph file and a metric file joined by a "---" line.
inline ProblemBInstance read_instance(std::istream& in) {
  LabeledGraph g = read_graph(in);
  read_separator(in);
  FiniteMetric d = read_metric(in);
  return ProblemBInstance(std::move(g), std::move(d));
}

inline void write_instance(std::ostream& out, const ProblemBInstance& instance) {
  write_graph(out, instance.g);
  out << "---\n";
  write_metric(out, instance.d);
}

}  // namespace cutsig
