#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conemet/cone_metrics.hpp"
#include "conemet/cones.hpp"
#include "conemet/fixpoint.hpp"
#include "conemet/io.hpp"
#include "conemet/metrize.hpp"
#include "conemet/points.hpp"
#include "conemet/self_maps.hpp"
#include "conemet/spaces.hpp"
#include "conemet/transfer.hpp"
#include "conemet/version.hpp"

namespace {

using namespace conemet;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitErrorBound = 3;
constexpr int kExitNoConvergence = 4;

struct GlobalOptions {
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  bool quiet = false;
};

void say(const GlobalOptions& g, const std::string& line) {
  if (!g.quiet) std::cout << line << "\n";
}

Point parse_point_arg(const std::string& s) {
  auto parse_full_double = [](const std::string& t,
                              double& out) -> bool {
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
  };
  if (s.find(',') != std::string::npos) {
    std::vector<double> coords;
    size_t start = 0;
    while (start <= s.size()) {
      const size_t comma = s.find(',', start);
      const std::string piece =
          s.substr(start, comma == std::string::npos ? std::string::npos
                                                     : comma - start);
      double v = 0.0;
      if (!parse_full_double(piece, v)) {
        throw ParseError("cannot parse \"" + s + "\" as coordinates",
                         "--x0");
      }
      coords.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    Eigen::VectorXd v(static_cast<Eigen::Index>(coords.size()));
    for (size_t i = 0; i < coords.size(); ++i) {
      v[static_cast<Eigen::Index>(i)] = coords[i];
    }
    return Point::vec(std::move(v));
  }
  double value = 0.0;
  if (parse_full_double(s, value)) return Point::real(value);
  return Point::label(s);
}

OrderedVectorSpace resolve_space(const std::string& space_file,
                                 const ConeMetric& metric,
                                 std::vector<std::string>& inputs) {
  if (space_file.empty()) return metric.codomain();
  inputs.push_back(space_file);
  return load_space_file(space_file);
}

void emit_manifest(const std::string& path, const RunManifest& manifest) {
  write_text_file(path, run_manifest_to_json(manifest));
}

int run_metrize(const GlobalOptions& g, const std::string& space_file,
                const std::string& metric_file,
                const std::string& points_file, const std::string& out_csv,
                double max_error) {
  RunManifest manifest;
  manifest.command = "metrize";
  manifest.seed = g.seed;
  manifest.tolerance = g.tolerance;
  manifest.version = kVersion;
  manifest.inputs = {metric_file, points_file};

  const ConeMetric metric = load_cone_metric_file(metric_file);
  const OrderedVectorSpace space =
      resolve_space(space_file, metric, manifest.inputs);
  const std::vector<Point> points = load_points_file(points_file);

  const LabeledMatrix matrix = distance_matrix(metric, space, points);
  const std::string sidecar = out_csv + ".meta.json";
  const std::string manifest_path = out_csv + ".manifest.json";
  write_text_file(out_csv, distance_matrix_to_csv(matrix));
  write_text_file(sidecar, metrize_sidecar_json(matrix));
  manifest.outputs = {out_csv, sidecar};
  emit_manifest(manifest_path, manifest);

  double worst = 0.0;
  for (double e : matrix.error_bounds) worst = std::max(worst, e);
  say(g, "wrote " + out_csv + " (" + std::to_string(matrix.labels.size()) +
             " points), max error bound " + format_number(worst));
  if (worst > max_error) {
    std::cerr << "error bound " << format_number(worst)
              << " exceeds --max-error " << format_number(max_error) << "\n";
    return kExitErrorBound;
  }
  return kExitOk;
}

int run_check(const GlobalOptions& g, const std::string& space_file,
              const std::string& metric_file, const std::string& points_file,
              int triple_cap) {
  RunManifest manifest;
  manifest.command = "check";
  manifest.seed = g.seed;
  manifest.tolerance = g.tolerance;
  manifest.version = kVersion;
  manifest.inputs = {space_file, metric_file, points_file};

  const OrderedVectorSpace space = load_space_file(space_file);
  const ConeValidationReport cone_report = validate_cone(space.cone);
  say(g, std::string("cone: ") + (cone_report.ok() ? "ok" : "invalid") +
             " (" + to_string(space.cone.kind()) + ", dim " +
             std::to_string(space.cone.dim()) + ")");
  if (!cone_report.ok()) {
    for (const auto& f : cone_report.failures) {
      std::cerr << "cone failure: " << f << "\n";
    }
    return kExitBadInput;
  }

  const ConeMetric metric = load_cone_metric_file(metric_file);
  const std::vector<Point> points = load_points_file(points_file);

  const ConeMetricValidationReport metric_report = validate_cone_metric(
      metric, points, g.tolerance, 100000, g.seed);
  say(g, std::string("cone metric axioms: ") +
             (metric_report.ok() ? "ok" : "violated") + " over " +
             std::to_string(metric_report.pair_count) + " pairs, " +
             std::to_string(metric_report.triple_count) + " triples");
  if (!metric_report.ok()) {
    for (const auto& w : metric_report.witnesses) {
      std::cerr << "violation: " << w << "\n";
    }
    emit_manifest("check.manifest.json", manifest);
    return kExitViolations;
  }

  const EquivalentMetric d(metric, space);
  const int n = static_cast<int>(points.size());
  const MetricAxiomReport axiom_report = check_metric_axioms(
      [&](int i, int j) {
        return d(points[static_cast<size_t>(i)],
                 points[static_cast<size_t>(j)]);
      },
      n, g.tolerance, 100000, g.seed);
  const bool scalar_ok = axiom_report.pass(g.tolerance);
  say(g, std::string("metrized d axioms: ") + (scalar_ok ? "ok" : "violated") +
             " (max triangle violation " +
             format_number(axiom_report.max_triangle_violation) + ")");
  if (!scalar_ok && axiom_report.worst_triple) {
    const auto& t = *axiom_report.worst_triple;
    std::cerr << "violation: worst triple (" << t[0] << ", " << t[1] << ", "
              << t[2] << ")\n";
  }
  emit_manifest("check.manifest.json", manifest);
  return scalar_ok ? kExitOk : kExitViolations;
}

int run_transfer(const GlobalOptions& g, const std::string& condition_file,
                 const std::string& space_file,
                 const std::string& metric_file, const std::string& map_file,
                 const std::string& points_file, int samples,
                 const std::string& report_file) {
  RunManifest manifest;
  manifest.command = "transfer";
  manifest.seed = g.seed;
  manifest.tolerance = g.tolerance;
  manifest.version = kVersion;
  manifest.inputs = {condition_file, metric_file, map_file, points_file};
  (void)samples;

  const ContractiveCondition condition = load_condition_file(condition_file);
  const ConeMetric metric = load_cone_metric_file(metric_file);
  const OrderedVectorSpace space =
      resolve_space(space_file, metric, manifest.inputs);
  const SelfMap map = load_self_map_file(map_file);
  const std::vector<Point> points = load_points_file(points_file);

  const TransferReport report = check_corollary(condition, metric, space, map,
                                                points, g.tolerance);
  const std::string text = transfer_report_to_json(report);
  if (!g.quiet) std::cout << text;
  if (!report_file.empty()) {
    write_text_file(report_file, text);
    manifest.outputs = {report_file};
    emit_manifest(report_file + ".manifest.json", manifest);
  } else {
    emit_manifest("transfer.manifest.json", manifest);
  }
  return report.pass() ? kExitOk : kExitViolations;
}

int run_fixpoint(const GlobalOptions& g, const std::string& space_file,
                 const std::string& metric_file, const std::string& map_file,
                 const std::string& x0_arg, double tol, int max_iter,
                 const std::string& trace_file) {
  RunManifest manifest;
  manifest.command = "fixpoint";
  manifest.seed = g.seed;
  manifest.tolerance = g.tolerance;
  manifest.version = kVersion;
  manifest.inputs = {metric_file, map_file};

  const ConeMetric metric = load_cone_metric_file(metric_file);
  const OrderedVectorSpace space =
      resolve_space(space_file, metric, manifest.inputs);
  const SelfMap map = load_self_map_file(map_file);
  const Point x0 = parse_point_arg(x0_arg);

  const IterationTrace trace =
      banach_iterate(metric, space, map, x0, tol, max_iter);
  write_text_file(trace_file, iteration_trace_to_json(trace));
  manifest.outputs = {trace_file};
  emit_manifest(trace_file + ".manifest.json", manifest);

  say(g, std::string("fixpoint: ") +
             (trace.converged ? "converged" : "did not converge") + " in " +
             std::to_string(trace.steps()) + " steps, estimated rate " +
             format_number(trace.estimated_rate) +
             (trace.diverged ? ", diverged" : ""));
  say(g, "final iterate " + trace.iterates.back().describe());
  return trace.converged ? kExitOk : kExitNoConvergence;
}

void report_spot_pair(const GlobalOptions& g, const ConeMetric& metric,
                      const Point& x, const Point& y) {
  const EquivalentMetric d(metric);
  const double solved = d(x, y);
  const std::optional<double> closed = metric.closed_form_distance(x, y);
  std::string line = "pair " + x.describe() + ", " + y.describe() +
                     ": solver " + format_number(solved);
  if (closed) {
    line += ", closed form " + format_number(*closed) + ", difference " +
            format_number(std::abs(solved - *closed));
  }
  say(g, line);
}

int run_examples(const GlobalOptions& g, const std::string& name,
                 double alpha, double q, double b, const std::string& dir) {
  RunManifest manifest;
  manifest.command = "examples";
  manifest.seed = g.seed;
  manifest.tolerance = g.tolerance;
  manifest.version = kVersion;

  const std::string prefix = dir + "/conemet_example_" + name;
  std::optional<ConeMetric> metric;
  std::vector<Point> points;

  if (name == "discrete") {
    Eigen::VectorXd a(2);
    a << 0.6, 0.8;
    metric = ConeMetric::discrete(
        a, OrderedVectorSpace::orthant_lp(2, 2.0, g.tolerance));
    points = {Point::real(0.0), Point::real(1.0), Point::real(2.0)};
  } else if (name == "product") {
    metric = ConeMetric::product(1.0, alpha, ScalarMetric::abs_diff(),
                                 ScalarMetric::abs_diff());
    points = {Point::real(0.0), Point::real(1.0), Point::real(2.5)};
  } else if (name == "lq") {
    metric = ConeMetric::geometric_lq(ScalarMetric::abs_diff(), b, q, 32);
    points = {Point::real(0.0), Point::real(1.0), Point::real(2.5)};
  } else {
    std::cerr << "unknown example \"" << name
              << "\" (expected discrete, product, or lq)\n";
    return kExitBadInput;
  }

  const std::string space_path = prefix + "_space.json";
  const std::string metric_path = prefix + "_metric.json";
  const std::string points_path = prefix + "_points.json";
  write_text_file(space_path, space_to_json(metric->codomain()));
  write_text_file(metric_path, cone_metric_to_json(*metric));
  write_text_file(points_path, points_to_json(points));
  manifest.outputs = {space_path, metric_path, points_path};
  emit_manifest(prefix + "_manifest.json", manifest);

  say(g, "wrote " + space_path);
  say(g, "wrote " + metric_path);
  say(g, "wrote " + points_path);
  report_spot_pair(g, *metric, points[0], points[1]);
  report_spot_pair(g, *metric, points[0], points[2]);
  if (metric->kind() == ConeMetric::Kind::GeometricLq) {
    const double rho = std::abs(points[0].as_real() - points[1].as_real());
    say(g, "truncation tail bound at rho " + format_number(rho) + ": " +
               format_number(truncation_tail_bound(*metric, rho)));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metrization and checking for cone metric spaces"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_option("--tolerance", g.tolerance,
                 "Comparison tolerance for checks");
  app.add_flag("--quiet", g.quiet, "Suppress informational output");

  std::string space_file, metric_file, points_file, map_file, condition_file;
  std::string out_csv, report_file, trace_file = "fixpoint_trace.json";
  std::string x0_arg = "0", example_name, example_dir = ".";
  double max_error = 1e-6, tol = 1e-8, alpha = 2.0, q = 1.0, b = 2.0;
  int max_iter = 1000, samples = 256;

  CLI::App* cmd_metrize =
      app.add_subcommand("metrize", "Write the metrized distance matrix");
  cmd_metrize->add_option("--space", space_file,
                          "Metrization space (default: metric codomain)");
  cmd_metrize->add_option("--metric", metric_file, "Cone metric file")
      ->required();
  cmd_metrize->add_option("--points", points_file, "Points file")->required();
  cmd_metrize->add_option("--out", out_csv, "Output CSV path")->required();
  cmd_metrize->add_option("--max-error", max_error,
                          "Largest acceptable certified error bound");

  CLI::App* cmd_check = app.add_subcommand(
      "check", "Validate the cone, the cone metric, and the metrized d");
  cmd_check->add_option("--space", space_file, "Space file")->required();
  cmd_check->add_option("--metric", metric_file, "Cone metric file")
      ->required();
  cmd_check->add_option("--points", points_file, "Points file")->required();

  CLI::App* cmd_transfer = app.add_subcommand(
      "transfer", "Check a contractive condition across the metrization");
  cmd_transfer->add_option("--condition", condition_file, "Condition JSON")
      ->required();
  cmd_transfer->add_option("--space", space_file,
                           "Metrization space (default: metric codomain)");
  cmd_transfer->add_option("--metric", metric_file, "Cone metric file")
      ->required();
  cmd_transfer->add_option("--map", map_file, "Self map file")->required();
  cmd_transfer->add_option("--points", points_file, "Points file")
      ->required();
  cmd_transfer->add_option("--samples", samples,
                           "Sample budget for sampled suprema");
  cmd_transfer->add_option("--report", report_file,
                           "Write the report JSON here as well");

  CLI::App* cmd_fixpoint =
      app.add_subcommand("fixpoint", "Run fixed-point iteration");
  cmd_fixpoint->add_option("--space", space_file,
                           "Metrization space (default: metric codomain)");
  cmd_fixpoint->add_option("--metric", metric_file, "Cone metric file")
      ->required();
  cmd_fixpoint->add_option("--map", map_file, "Self map file")->required();
  cmd_fixpoint->add_option("--x0", x0_arg,
                           "Start point: number, coordinates, or label");
  cmd_fixpoint->add_option("--tol", tol, "Stopping distance");
  cmd_fixpoint->add_option("--max-iter", max_iter, "Iteration cap");
  cmd_fixpoint->add_option("--trace", trace_file, "Trace JSON output path");

  CLI::App* cmd_examples = app.add_subcommand(
      "examples", "Materialize a built-in example's files");
  cmd_examples
      ->add_option("name", example_name, "One of: discrete, product, lq")
      ->required();
  cmd_examples->add_option("--alpha", alpha, "Product second weight");
  cmd_examples->add_option("--q", q, "Geometric exponent");
  cmd_examples->add_option("--b", b, "Geometric base");
  cmd_examples->add_option("--dir", example_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (cmd_metrize->parsed()) {
      return run_metrize(g, space_file, metric_file, points_file, out_csv,
                         max_error);
    }
    if (cmd_check->parsed()) {
      return run_check(g, space_file, metric_file, points_file, 100000);
    }
    if (cmd_transfer->parsed()) {
      return run_transfer(g, condition_file, space_file, metric_file,
                          map_file, points_file, samples, report_file);
    }
    if (cmd_fixpoint->parsed()) {
      return run_fixpoint(g, space_file, metric_file, map_file, x0_arg, tol,
                          max_iter, trace_file);
    }
    if (cmd_examples->parsed()) {
      return run_examples(g, example_name, alpha, q, b, example_dir);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
