// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on
// any failure. Each criterion seeds its own generator, so reruns are
// reproducible.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "cutsig/embedding.hpp"
#include "cutsig/realizer.hpp"
#include "cutsig/reduction.hpp"
#include "oracles.hpp"

using namespace cutsig;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
  char buffer[256];
  std::va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof buffer, format, args);
  va_end(args);
  return buffer;
}

int failures = 0;

void report(int criterion, bool ok, const std::string& message) {
  if (!ok) ++failures;
  std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", criterion, message.c_str());
}

// Criteria 1 and 2 share the sampled configurations: membership of every
// integer-point l1 metric, then the exact embed roundtrip on each.
void point_metrics_and_roundtrip() {
  oracles::Rng rng(101);
  std::uniform_int_distribution<Index> pick_n(2, 7);
  std::uniform_int_distribution<Index> pick_m(1, 4);
  const auto start = std::chrono::steady_clock::now();
  bool members = true;
  bool roundtrips = true;
  for (int trial = 0; trial < 200; ++trial) {
    const PointConfig points = oracles::random_int_points(rng, pick_n(rng), pick_m(rng), -10, 10);
    const FiniteMetric d = metric_from_points(points, LpNorm::L1);
    const MembershipResult membership = cutcone_membership(d);
    if (!membership.is_feasible() || !verify_decomposition(d, membership.decomposition())) {
      members = false;
      continue;
    }
    const EmbedResult embedding = embed_metric(d);
    if (!embedding.is_embedded() ||
        !(metric_from_points(embedding.points(), LpNorm::L1) == d)) {
      roundtrips = false;
    }
  }
  const double elapsed = seconds_since(start);
  report(1, members && elapsed < 60.0,
         fmt("200 integer-point l1 metrics decompose exactly (%.1f s)", elapsed));
  report(2, roundtrips, "every decomposition re-embeds to the same metric bit-exactly");
}

void bipartite_witness() {
  const auto start = std::chrono::steady_clock::now();
  const FiniteMetric d = oracles::k23_metric();
  const MembershipResult membership = cutcone_membership(d);
  const bool refuted = !membership.is_feasible() && verify_farkas(d, membership.certificate());
  const double elapsed = seconds_since(start);
  report(3, refuted && elapsed < 1.0,
         fmt("complete bipartite 2+3 distance refuted, checked on all 15 cuts (%.3f s)", elapsed));
}

void reduction_promise() {
  oracles::Rng rng(404);
  std::uniform_int_distribution<Index> pick_n(2, 8);
  bool ok = true;
  for (int trial = 0; trial < 500; ++trial) {
    const FiniteMetric d = oracles::random_proper_metric(rng, pick_n(rng));
    const ProblemBInstance instance = reduce_a_to_b(d);
    if (!is_sig_metric(instance.g, instance.d)) ok = false;
    if (!(reduce_b_to_a(instance) == d)) ok = false;
  }
  report(4, ok, "500 reduced instances satisfy the promise and invert to their metric");
}

void answer_preservation() {
  oracles::Rng rng(505);
  std::uniform_int_distribution<Index> pick_n(2, 7);
  std::uniform_int_distribution<Index> pick_far(5, 7);
  bool ok = true;
  int yes = 0;
  int no = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteMetric d = trial % 5 == 4 ? oracles::k23_extension(rng, pick_far(rng))
                                          : oracles::random_proper_metric(rng, pick_n(rng));
    const MembershipResult membership = cutcone_membership(d);
    const BResult answer = solve_problem_b(reduce_a_to_b(d));
    if (membership.is_feasible()) {
      ++yes;
      if (answer.answer() != BAnswer::Yes ||
          !verify_decomposition(d, answer.decomposition()) ||
          !(answer.decomposition() == membership.decomposition())) {
        ok = false;
      }
    } else {
      ++no;
      if (answer.answer() != BAnswer::No || !verify_farkas(d, answer.certificate()) ||
          !(answer.certificate().y == membership.certificate().y)) {
        ok = false;
      }
    }
  }
  report(5, ok && yes > 0 && no > 0,
         fmt("100 instances answer exactly as membership does (%d yes, %d no)", yes, no));
}

void sig_properties() {
  oracles::Rng rng(606);
  std::uniform_int_distribution<Index> pick_n(2, 8);
  const std::vector<Rational> lambdas = {Rational(1, 3), Rational(2), Rational(7)};
  bool ok = true;
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = pick_n(rng);
    const FiniteMetric d = oracles::random_proper_metric(rng, n);
    const LabeledGraph g = sig_from_metric(d);
    if (g.has_isolated_vertex()) ok = false;
    for (const Rational& lambda : lambdas) {
      if (!(sig_from_metric(scale(lambda, d)) == g)) ok = false;
    }
    for (int round = 0; round < 5; ++round) {
      const std::vector<Index> perm = oracles::random_permutation(rng, n);
      if (!(sig_from_metric(permute(d, perm)) == permute(g, perm))) ok = false;
    }
  }
  report(6, ok, "300 graphs have min degree 1 and are scale/relabeling equivariant");
}

void realizer_soundness() {
  bool ok = true;
  for (Index n = 3; n <= 6; ++n) {
    const std::vector<LabeledGraph> family = {oracles::complete_graph(n), oracles::path_graph(n),
                                              oracles::cycle_graph(n)};
    for (const LabeledGraph& g : family) {
      const RealizeResult result = realize_l1_sig(g);
      if (result.status != RealizeStatus::Realized) {
        ok = false;
        continue;
      }
      const Realization& realization = *result.realization;
      if (sgn(realization.margin) <= 0) ok = false;
      if (!verify_decomposition(realization.d, realization.dec)) ok = false;
      if (!(sig_from_metric(realization.d) == g)) ok = false;
      const InfluenceRadii radii = radii_of_influence(realization.d);
      for (Index i = 0; i < g.n(); ++i) {
        if (realization.d(i, realization.sigma.sigma[i]) != radii[i]) ok = false;
      }
    }
  }

  // Structural rejection must stay linear: half a million vertices with
  // one edge are rejected without touching the map stream.
  const auto start = std::chrono::steady_clock::now();
  const RealizeResult rejected = realize_l1_sig(LabeledGraph(500000, {{0, 1}}));
  const double elapsed = seconds_since(start);
  if (rejected.status != RealizeStatus::NotRealizableStructural || rejected.maps_tried != 0) {
    ok = false;
  }
  report(7, ok && elapsed < 1.0,
         fmt("complete, path and cycle families realize verified; "
             "isolated vertex rejected in %.3f s",
             elapsed));
}

void scale_bounds() {
  oracles::Rng rng(808);
  const PointConfig big = oracles::random_int_points(rng, 12, 4, -10, 10);
  const FiniteMetric d = metric_from_points(big, LpNorm::L1);
  auto start = std::chrono::steady_clock::now();
  const MembershipResult membership = cutcone_membership(d);
  const double membership_elapsed = seconds_since(start);
  const bool member_ok = membership.is_feasible() &&
                         verify_decomposition(d, membership.decomposition()) &&
                         membership_elapsed < 120.0;

  const PointConfig crowd = oracles::random_int_points(rng, 1000, 3, -1000000, 1000000);
  start = std::chrono::steady_clock::now();
  const LabeledGraph g = sig_from_points(crowd, LpNorm::L1);
  const double sig_elapsed = seconds_since(start);
  const bool sig_ok = g.n() == 1000 && !g.has_isolated_vertex() && sig_elapsed < 5.0;

  report(8, member_ok && sig_ok,
         fmt("12-point membership in %.1f s; 1000-point influence graph in %.2f s",
             membership_elapsed, sig_elapsed));
}

}  // namespace

int main() {
  point_metrics_and_roundtrip();
  bipartite_witness();
  reduction_promise();
  answer_preservation();
  sig_properties();
  realizer_soundness();
  scale_bounds();
  if (failures > 0) {
    std::printf("%d criterion check(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria hold\n");
  return 0;
}
