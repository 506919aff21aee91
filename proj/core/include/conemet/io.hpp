#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "conemet/cone_metrics.hpp"
#include "conemet/fixpoint.hpp"
#include "conemet/metrize.hpp"
#include "conemet/points.hpp"
#include "conemet/self_maps.hpp"
#include "conemet/spaces.hpp"
#include "conemet/transfer.hpp"

namespace conemet {

/// Input rejected while reading or interpreting a file. Carries the source
/// position when one is known; line and column are 1-based, -1 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string origin, int line = -1,
             int column = -1);

  const std::string& origin() const { return origin_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string origin_;
  int line_;
  int column_;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// All file formats are JSON objects with a top-level "schema": 1 and
/// strict key checking: unknown keys are rejected, never ignored.
///
/// space     {"schema":1, "dim":2, "norm":{"type":"lp","p":2},
///            "cone":{"type":"orthant"}, "tolerance":1e-9}
///           norm types: "lp" (p > 0 or "inf"), "weighted-lp" (+ "weights")
///           cone types: "orthant", "second-order",
///                       "generators" ("G": one generator per row),
///                       "halfspaces" ("A": one inequality row per entry)
/// metric    {"schema":1, "type":"discrete", "a":[...], "codomain":{space}}
///           {"schema":1, "type":"product", "a":1, "b":2,
///            "d1":{scalar}, "d2":{scalar}}
///           {"schema":1, "type":"geometric-lq", "q":1, "b":2,
///            "truncation":32, "rho":{scalar}}
///           {"schema":1, "type":"finite-table", "labels":[...],
///            "entries":[{"x":..,"y":..,"value":[...]},...],
///            "codomain":{space}}
///           scalar metric objects: {"type":"abs-diff"|"euclidean",
///           "scale":1.0} or {"type":"discrete"}
/// points    {"schema":1, "points":[[0.5,1],...]} with labels, numbers, or
///           coordinate arrays as elements
/// map       {"schema":1, "type":"table", "table":{"a":"b",...}}
///           {"schema":1, "type":"affine", "A":[[...]], "b":[...]}
///           {"schema":1, "type":"identity"}
/// condition {"kind":"banach", "alpha":0.5} and the other contractive
///           kinds under their names; "schema" is optional here
OrderedVectorSpace parse_space_json(const std::string& text,
                                    const std::string& origin = "<input>");
ConeMetric parse_cone_metric_json(const std::string& text,
                                  const std::string& origin = "<input>");
std::vector<Point> parse_points_json(const std::string& text,
                                     const std::string& origin = "<input>");
SelfMap parse_self_map_json(const std::string& text,
                            const std::string& origin = "<input>");
ContractiveCondition parse_condition_json(
    const std::string& text, const std::string& origin = "<input>");

OrderedVectorSpace load_space_file(const std::string& path);
ConeMetric load_cone_metric_file(const std::string& path);
std::vector<Point> load_points_file(const std::string& path);
SelfMap load_self_map_file(const std::string& path);
ContractiveCondition load_condition_file(const std::string& path);

std::string space_to_json(const OrderedVectorSpace& space);
std::string cone_metric_to_json(const ConeMetric& metric);
std::string points_to_json(const std::vector<Point>& points);

/// Shared numeric format of the CSV writers: 12 significant digits, "."
/// decimal separator.
std::string format_number(double v);

/// Symmetric distance matrix as CSV with a label header row and column,
/// LF line endings.
std::string distance_matrix_to_csv(const LabeledMatrix& m);

/// Sidecar JSON for a distance matrix: per-pair method tags and certified
/// error bounds, upper triangle in row-major order.
std::string metrize_sidecar_json(const LabeledMatrix& m);

std::string transfer_report_to_json(const TransferReport& rep);
std::string iteration_trace_to_json(const IterationTrace& trace);

struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  std::vector<std::string> outputs;
  std::string version;
};

std::string run_manifest_to_json(const RunManifest& manifest);

}  // namespace conemet
