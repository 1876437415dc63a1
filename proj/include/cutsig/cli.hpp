#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutsig/embedding.hpp"
#include "cutsig/realizer.hpp"
#include "cutsig/reduction.hpp"

namespace cutsig::cli {

/// Exit-status vocabulary: the promise-problem trichotomy plus the two
/// failure classes every subcommand shares.
inline constexpr int kExitYes = 0;       // Yes / success
inline constexpr int kExitNo = 1;        // No / verified negative
inline constexpr int kExitRejected = 2;  // promise violated / structural rejection
inline constexpr int kExitUsage = 3;     // usage or format error
inline constexpr int kExitResource = 4;  // resource limit

namespace detail {

/// Opens an input file, with "-" standing for stdin.
inline std::istream& open_input(const std::string& path, std::ifstream& storage) {
  if (path == "-") return std::cin;
  storage.open(path);
  if (!storage) throw std::invalid_argument("cannot open input file '" + path + "'");
  return storage;
}

template <typename Artifact>
void save_artifact(const std::string& path, const Artifact& write) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open certificate file '" + path + "'");
  write(out);
}

inline const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Nonnegativity:
      return "nonnegativity";
    case Axiom::Positivity:
      return "positivity";
    default:
      return "triangle";
  }
}

}  // namespace detail

/**
 * Runs one subcommand. `args` is the argument vector without the program
 * name; parseable artifact content goes to `out`, diagnostics to `err`.
 * Returns the exit status per the vocabulary above. Output is
 * deterministic: identical inputs produce byte-identical artifacts.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cut-cone membership, sphere-of-influence graphs, and l1 SIG realization"};
  app.require_subcommand(1);

  std::string input;
  std::string second_input;
  std::string certificate_path;
  std::string p_choice = "1";
  std::string mode_choice = "metric";
  Index max_n = kDefaultMembershipMaxN;
  Index realize_max_n = kDefaultRealizerMaxN;
  std::int64_t budget = kDefaultRealizerBudget;
  int result = kExitYes;

  auto* validate_cmd =
      app.add_subcommand("validate", "check metric axioms, listing violations");
  validate_cmd->add_option("metric", input, "metric file")->required();
  validate_cmd->add_option("--mode", mode_choice, "axiom set to check")
      ->check(CLI::IsMember({"metric", "semimetric"}));
  validate_cmd->callback([&] {
    std::ifstream file;
    FiniteMetric d = read_metric(detail::open_input(input, file));
    ValidationReport report =
        validate(d, mode_choice == "metric" ? MetricMode::Metric : MetricMode::Semimetric);
    if (report.valid()) {
      out << "valid\n";
      result = kExitYes;
      return;
    }
    for (const AxiomViolation& v : report.violations) {
      out << detail::axiom_name(v.axiom) << ' ' << v.i + 1 << ' ' << v.j + 1;
      if (v.axiom == Axiom::Triangle) out << ' ' << v.k + 1;
      out << '\n';
    }
    result = kExitNo;
  });

  auto* sig_points_cmd =
      app.add_subcommand("sig-points", "sphere-of-influence graph of a point file");
  sig_points_cmd->add_option("points", input, "point file")->required();
  sig_points_cmd->add_option("--p", p_choice, "norm exponent")
      ->check(CLI::IsMember({"1", "inf"}));
  sig_points_cmd->callback([&] {
    std::ifstream file;
    PointConfig points = read_points(detail::open_input(input, file));
    write_graph(out, sig_from_points(points, p_choice == "1" ? LpNorm::L1 : LpNorm::LInf));
    result = kExitYes;
  });

  auto* sig_metric_cmd =
      app.add_subcommand("sig-metric", "sphere-of-influence graph of a metric file");
  sig_metric_cmd->add_option("metric", input, "metric file")->required();
  sig_metric_cmd->callback([&] {
    std::ifstream file;
    FiniteMetric d = read_metric(detail::open_input(input, file));
    write_graph(out, sig_from_metric(d));
    result = kExitYes;
  });

  auto* cutcone_cmd = app.add_subcommand(
      "cutcone-check", "decide cut cone membership; emit decomposition or Farkas certificate");
  cutcone_cmd->add_option("metric", input, "metric file")->required();
  cutcone_cmd->add_option("--certificate", certificate_path, "also save the certificate here");
  cutcone_cmd->add_option("--max-n", max_n, "size cap")->check(CLI::PositiveNumber);
  cutcone_cmd->callback([&] {
    std::ifstream file;
    FiniteMetric d = read_metric(detail::open_input(input, file));
    MembershipResult membership = cutcone_membership(d, max_n);
    if (membership.is_feasible()) {
      write_decomposition(out, membership.decomposition());
      detail::save_artifact(certificate_path,
                            [&](std::ostream& o) { write_decomposition(o, membership.decomposition()); });
      result = kExitYes;
    } else {
      write_farkas(out, membership.certificate());
      detail::save_artifact(certificate_path,
                            [&](std::ostream& o) { write_farkas(o, membership.certificate()); });
      result = kExitNo;
    }
  });

  auto* embed_cmd =
      app.add_subcommand("embed", "construct an exact l1 embedding or a Farkas certificate");
  embed_cmd->add_option("metric", input, "metric file")->required();
  embed_cmd->add_option("--certificate", certificate_path, "also save the emitted artifact here");
  embed_cmd->add_option("--max-n", max_n, "size cap")->check(CLI::PositiveNumber);
  embed_cmd->callback([&] {
    std::ifstream file;
    FiniteMetric d = read_metric(detail::open_input(input, file));
    EmbedResult embedding = embed_metric(d, max_n);
    if (embedding.is_embedded()) {
      write_points(out, embedding.points());
      detail::save_artifact(certificate_path,
                            [&](std::ostream& o) { write_points(o, embedding.points()); });
      result = kExitYes;
    } else {
      write_farkas(out, embedding.certificate());
      detail::save_artifact(certificate_path,
                            [&](std::ostream& o) { write_farkas(o, embedding.certificate()); });
      result = kExitNo;
    }
  });

  auto* reduce_ab_cmd =
      app.add_subcommand("reduce-ab", "reduce a metric to the instance (G_d, d)");
  reduce_ab_cmd->add_option("metric", input, "metric file")->required();
  reduce_ab_cmd->callback([&] {
    std::ifstream file;
    FiniteMetric d = read_metric(detail::open_input(input, file));
    write_instance(out, reduce_a_to_b(d));
    result = kExitYes;
  });

  auto* reduce_ba_cmd =
      app.add_subcommand("reduce-ba", "forgetful reduction of an instance to its metric");
  reduce_ba_cmd->add_option("instance", input, "instance file")->required();
  reduce_ba_cmd->callback([&] {
    std::ifstream file;
    ProblemBInstance instance = read_instance(detail::open_input(input, file));
    write_metric(out, reduce_b_to_a(instance));
    result = kExitYes;
  });

  auto* solve_b_cmd = app.add_subcommand(
      "solve-b", "answer an instance: promise check, then membership with certificate");
  solve_b_cmd->add_option("instance", input, "instance file")->required();
  solve_b_cmd->add_option("--certificate", certificate_path, "also save the certificate here");
  solve_b_cmd->add_option("--max-n", max_n, "size cap")->check(CLI::PositiveNumber);
  solve_b_cmd->callback([&] {
    std::ifstream file;
    ProblemBInstance instance = read_instance(detail::open_input(input, file));
    BResult answer = solve_problem_b(instance, max_n);
    switch (answer.answer()) {
      case BAnswer::Yes:
        out << "yes\n";
        write_decomposition(out, answer.decomposition());
        detail::save_artifact(certificate_path,
                              [&](std::ostream& o) { write_decomposition(o, answer.decomposition()); });
        result = kExitYes;
        break;
      case BAnswer::No:
        out << "no\n";
        write_farkas(out, answer.certificate());
        detail::save_artifact(certificate_path,
                              [&](std::ostream& o) { write_farkas(o, answer.certificate()); });
        result = kExitNo;
        break;
      default:
        out << "promise-violated\n";
        result = kExitRejected;
        break;
    }
  });

  auto* realize_cmd =
      app.add_subcommand("realize", "search for an l1 SIG realization of a graph");
  realize_cmd->add_option("graph", input, "graph file")->required();
  realize_cmd->add_option("--certificate", certificate_path, "also save the report here");
  realize_cmd->add_option("--budget", budget, "candidate map limit")
      ->check(CLI::NonNegativeNumber);
  realize_cmd->add_option("--max-n", realize_max_n, "size cap")->check(CLI::PositiveNumber);
  realize_cmd->callback([&] {
    std::ifstream file;
    LabeledGraph g = read_graph(detail::open_input(input, file));
    RealizeResult search = realize_l1_sig(g, budget, realize_max_n);
    switch (search.status) {
      case RealizeStatus::Realized:
        write_realization_report(out, g, *search.realization);
        detail::save_artifact(certificate_path, [&](std::ostream& o) {
          write_realization_report(o, g, *search.realization);
        });
        result = kExitYes;
        break;
      case RealizeStatus::NotRealizableStructural:
        out << "not-realizable-structural\n";
        result = kExitRejected;
        break;
      default:
        out << "exhausted " << search.maps_tried << '\n';
        result = kExitResource;
        break;
    }
  });

  auto* verify_dec_cmd = app.add_subcommand(
      "verify-decomposition", "check that a decomposition reproduces a metric exactly");
  verify_dec_cmd->add_option("metric", input, "metric file")->required();
  verify_dec_cmd->add_option("decomposition", second_input, "decomposition file")->required();
  verify_dec_cmd->callback([&] {
    std::ifstream file_a;
    std::ifstream file_b;
    FiniteMetric d = read_metric(detail::open_input(input, file_a));
    CutDecomposition dec = read_decomposition(detail::open_input(second_input, file_b));
    const bool ok = verify_decomposition(d, dec);
    out << (ok ? "true" : "false") << '\n';
    result = ok ? kExitYes : kExitNo;
  });

  auto* verify_farkas_cmd = app.add_subcommand(
      "verify-farkas", "check a non-membership functional against every canonical cut");
  verify_farkas_cmd->add_option("metric", input, "metric file")->required();
  verify_farkas_cmd->add_option("certificate", second_input, "Farkas file")->required();
  verify_farkas_cmd->callback([&] {
    std::ifstream file_a;
    std::ifstream file_b;
    FiniteMetric d = read_metric(detail::open_input(input, file_a));
    FarkasCertificate certificate = read_farkas(detail::open_input(second_input, file_b));
    const bool ok = verify_farkas(d, certificate);
    out << (ok ? "true" : "false") << '\n';
    result = ok ? kExitYes : kExitNo;
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cutsig");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return result;
}

}  // namespace cutsig::cli
