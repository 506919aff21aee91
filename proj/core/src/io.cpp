#include "conemet/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace conemet {

namespace {

using json = nlohmann::ordered_json;

std::string position_message(const std::string& origin,
                             const std::string& message, int line,
                             int column) {
  std::ostringstream out;
  out << origin;
  if (line >= 1) {
    out << ":" << line;
    if (column >= 1) out << ":" << column;
  }
  out << ": " << message;
  return out.str();
}

[[noreturn]] void fail(const std::string& origin, const std::string& message,
                       int line = -1, int column = -1) {
  throw ParseError(message, origin, line, column);
}

std::pair<int, int> position_of(const std::string& text, size_t byte) {
  int line = 1;
  int column = 1;
  const size_t end = std::min(byte, text.size());
  for (size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] =
        position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    fail(origin, e.what(), line, column);
  }
}

void require_object(const json& j, const std::string& origin,
                    const std::string& what) {
  if (!j.is_object()) fail(origin, what + " must be a JSON object");
}

void check_keys(const json& obj, const std::string& origin,
                const std::string& what,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      fail(origin, "unknown key \"" + it.key() + "\" in " + what);
    }
  }
}

const json& need(const json& obj, const char* key, const std::string& origin,
                 const std::string& what) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(origin, what + " is missing required key \"" + key + "\"");
  }
  return *it;
}

double need_double(const json& obj, const char* key,
                   const std::string& origin, const std::string& what) {
  const json& v = need(obj, key, origin, what);
  if (!v.is_number()) {
    fail(origin, what + " key \"" + std::string(key) + "\" must be a number");
  }
  return v.get<double>();
}

int need_int(const json& obj, const char* key, const std::string& origin,
             const std::string& what) {
  const json& v = need(obj, key, origin, what);
  if (!v.is_number_integer()) {
    fail(origin,
         what + " key \"" + std::string(key) + "\" must be an integer");
  }
  return v.get<int>();
}

std::string need_string(const json& obj, const char* key,
                        const std::string& origin, const std::string& what) {
  const json& v = need(obj, key, origin, what);
  if (!v.is_string()) {
    fail(origin, what + " key \"" + std::string(key) + "\" must be a string");
  }
  return v.get<std::string>();
}

Eigen::VectorXd as_vector(const json& arr, const std::string& origin,
                          const std::string& what) {
  if (!arr.is_array() || arr.empty()) {
    fail(origin, what + " must be a nonempty array of numbers");
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
  Eigen::Index i = 0;
  for (const auto& e : arr) {
    if (!e.is_number()) {
      fail(origin, what + " must contain only numbers");
    }
    v[i++] = e.get<double>();
  }
  return v;
}

/// Each element of `arr` is one row.
Eigen::MatrixXd rows_as_matrix(const json& arr, const std::string& origin,
                               const std::string& what) {
  if (!arr.is_array() || arr.empty()) {
    fail(origin, what + " must be a nonempty array of rows");
  }
  Eigen::MatrixXd M;
  Eigen::Index r = 0;
  for (const auto& row : arr) {
    const Eigen::VectorXd v = as_vector(row, origin, what + " row");
    if (r == 0) {
      M.resize(static_cast<Eigen::Index>(arr.size()), v.size());
    } else if (v.size() != M.cols()) {
      fail(origin, what + " rows have inconsistent lengths");
    }
    M.row(r++) = v.transpose();
  }
  return M;
}

void need_schema(const json& obj, const std::string& origin, bool required) {
  auto it = obj.find("schema");
  if (it == obj.end()) {
    if (required) fail(origin, "missing required key \"schema\"");
    return;
  }
  if (!it->is_number_integer() || it->get<int>() != 1) {
    fail(origin, "unsupported schema version, expected \"schema\": 1");
  }
}

double norm_exponent(const json& norm, const std::string& origin) {
  const json& p = need(norm, "p", origin, "norm");
  if (p.is_string()) {
    if (p.get<std::string>() == "inf") return NormSpec::kInf;
    fail(origin, "norm key \"p\" must be a positive number or \"inf\"");
  }
  if (!p.is_number()) {
    fail(origin, "norm key \"p\" must be a positive number or \"inf\"");
  }
  return p.get<double>();
}

NormSpec parse_norm_object(const json& j, const std::string& origin) {
  require_object(j, origin, "norm");
  const std::string type = need_string(j, "type", origin, "norm");
  try {
    if (type == "lp") {
      check_keys(j, origin, "norm", {"type", "p"});
      return NormSpec::lp(norm_exponent(j, origin));
    }
    if (type == "weighted-lp") {
      check_keys(j, origin, "norm", {"type", "p", "weights"});
      return NormSpec::weighted_lp(
          norm_exponent(j, origin),
          as_vector(need(j, "weights", origin, "norm"), origin,
                    "norm weights"));
    }
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  fail(origin, "unknown norm type \"" + type + "\"");
}

ConeSpec parse_cone_object(const json& j, int dim,
                           const std::string& origin) {
  require_object(j, origin, "cone");
  const std::string type = need_string(j, "type", origin, "cone");
  try {
    if (type == "orthant") {
      check_keys(j, origin, "cone", {"type"});
      return ConeSpec::orthant(dim);
    }
    if (type == "second-order") {
      check_keys(j, origin, "cone", {"type"});
      return ConeSpec::second_order(dim);
    }
    if (type == "generators") {
      check_keys(j, origin, "cone", {"type", "G"});
      const Eigen::MatrixXd rows =
          rows_as_matrix(need(j, "G", origin, "cone"), origin, "cone G");
      return ConeSpec::generators(rows.transpose());
    }
    if (type == "halfspaces") {
      check_keys(j, origin, "cone", {"type", "A"});
      return ConeSpec::halfspaces(
          rows_as_matrix(need(j, "A", origin, "cone"), origin, "cone A"));
    }
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  fail(origin, "unknown cone type \"" + type + "\"");
}

OrderedVectorSpace parse_space_object(const json& j,
                                      const std::string& origin,
                                      bool top_level) {
  require_object(j, origin, "space");
  need_schema(j, origin, top_level);
  check_keys(j, origin, "space", {"schema", "dim", "norm", "cone",
                                  "tolerance"});
  const int dim = need_int(j, "dim", origin, "space");
  if (dim <= 0) fail(origin, "space key \"dim\" must be positive");
  const NormSpec norm =
      parse_norm_object(need(j, "norm", origin, "space"), origin);
  const ConeSpec cone =
      parse_cone_object(need(j, "cone", origin, "space"), dim, origin);
  double tolerance = kDefaultTolerance;
  if (j.contains("tolerance")) {
    tolerance = need_double(j, "tolerance", origin, "space");
    if (tolerance < 0.0) {
      fail(origin, "space key \"tolerance\" must be nonnegative");
    }
  }
  OrderedVectorSpace space;
  try {
    space = OrderedVectorSpace::make(dim, norm, cone, tolerance);
    validate_space(space);
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  const ConeValidationReport report = validate_cone(space.cone);
  if (!report.ok()) {
    std::string detail = "cone validation failed:";
    for (const auto& f : report.failures) detail += " " + f + ";";
    fail(origin, detail);
  }
  return space;
}

ScalarMetric parse_scalar_metric_object(const json& j,
                                        const std::string& origin,
                                        const std::string& what) {
  require_object(j, origin, what);
  const std::string type = need_string(j, "type", origin, what);
  if (type == "discrete") {
    check_keys(j, origin, what, {"type"});
    return ScalarMetric::discrete();
  }
  double scale = 1.0;
  if (j.contains("scale")) {
    scale = need_double(j, "scale", origin, what);
    if (!(scale > 0.0)) {
      fail(origin, what + " key \"scale\" must be positive");
    }
  }
  if (type == "abs-diff") {
    check_keys(j, origin, what, {"type", "scale"});
    return ScalarMetric::abs_diff(scale);
  }
  if (type == "euclidean") {
    check_keys(j, origin, what, {"type", "scale"});
    return ScalarMetric::euclidean(scale);
  }
  fail(origin, "unknown " + what + " type \"" + type + "\"");
}

ConeMetric parse_cone_metric_object(const json& j, const std::string& origin,
                                    bool top_level) {
  require_object(j, origin, "cone metric");
  need_schema(j, origin, top_level);
  const std::string type = need_string(j, "type", origin, "cone metric");
  try {
    if (type == "discrete") {
      check_keys(j, origin, "cone metric", {"schema", "type", "a",
                                            "codomain"});
      return ConeMetric::discrete(
          as_vector(need(j, "a", origin, "cone metric"), origin,
                    "cone metric key \"a\""),
          parse_space_object(need(j, "codomain", origin, "cone metric"),
                             origin, false));
    }
    if (type == "product") {
      check_keys(j, origin, "cone metric", {"schema", "type", "a", "b", "d1",
                                            "d2"});
      ScalarMetric d1 = ScalarMetric::abs_diff();
      ScalarMetric d2 = ScalarMetric::abs_diff();
      if (j.contains("d1")) {
        d1 = parse_scalar_metric_object(j.at("d1"), origin, "d1");
      }
      if (j.contains("d2")) {
        d2 = parse_scalar_metric_object(j.at("d2"), origin, "d2");
      }
      return ConeMetric::product(need_double(j, "a", origin, "cone metric"),
                                 need_double(j, "b", origin, "cone metric"),
                                 d1, d2);
    }
    if (type == "geometric-lq") {
      check_keys(j, origin, "cone metric", {"schema", "type", "q", "b",
                                            "truncation", "rho"});
      ScalarMetric rho = ScalarMetric::abs_diff();
      if (j.contains("rho")) {
        rho = parse_scalar_metric_object(j.at("rho"), origin, "rho");
      }
      int truncation = 32;
      if (j.contains("truncation")) {
        truncation = need_int(j, "truncation", origin, "cone metric");
      }
      return ConeMetric::geometric_lq(rho,
                                      need_double(j, "b", origin,
                                                  "cone metric"),
                                      need_double(j, "q", origin,
                                                  "cone metric"),
                                      truncation);
    }
    if (type == "finite-table") {
      check_keys(j, origin, "cone metric", {"schema", "type", "labels",
                                            "entries", "codomain"});
      const json& jl = need(j, "labels", origin, "cone metric");
      if (!jl.is_array()) {
        fail(origin, "cone metric key \"labels\" must be an array");
      }
      std::vector<std::string> labels;
      for (const auto& l : jl) {
        if (!l.is_string()) {
          fail(origin, "cone metric labels must be strings");
        }
        labels.push_back(l.get<std::string>());
      }
      const json& je = need(j, "entries", origin, "cone metric");
      if (!je.is_array()) {
        fail(origin, "cone metric key \"entries\" must be an array");
      }
      std::vector<TableEntry> entries;
      for (const auto& e : je) {
        require_object(e, origin, "table entry");
        check_keys(e, origin, "table entry", {"x", "y", "value"});
        TableEntry t;
        t.x = need_string(e, "x", origin, "table entry");
        t.y = need_string(e, "y", origin, "table entry");
        t.value = as_vector(need(e, "value", origin, "table entry"), origin,
                            "table entry value");
        entries.push_back(std::move(t));
      }
      return ConeMetric::finite_table(
          std::move(labels), std::move(entries),
          parse_space_object(need(j, "codomain", origin, "cone metric"),
                             origin, false));
    }
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  fail(origin, "unknown cone metric type \"" + type + "\"");
}

json norm_to_json(const NormSpec& norm) {
  json j;
  j["type"] = norm.weighted() ? "weighted-lp" : "lp";
  if (std::isinf(norm.p())) {
    j["p"] = "inf";
  } else {
    j["p"] = norm.p();
  }
  if (norm.weighted()) {
    json w = json::array();
    for (Eigen::Index i = 0; i < norm.weights().size(); ++i) {
      w.push_back(norm.weights()[i]);
    }
    j["weights"] = std::move(w);
  }
  return j;
}

json matrix_rows_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json cone_to_json(const ConeSpec& cone) {
  json j;
  switch (cone.kind()) {
    case ConeKind::Orthant:
      j["type"] = "orthant";
      break;
    case ConeKind::SecondOrder:
      j["type"] = "second-order";
      break;
    case ConeKind::Generators:
      j["type"] = "generators";
      j["G"] = matrix_rows_to_json(cone.generator_matrix().transpose());
      break;
    case ConeKind::Halfspaces:
      j["type"] = "halfspaces";
      j["A"] = matrix_rows_to_json(cone.halfspace_matrix());
      break;
  }
  return j;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

json space_to_json_object(const OrderedVectorSpace& space, bool top_level) {
  json j;
  if (top_level) j["schema"] = 1;
  j["dim"] = space.dim;
  j["norm"] = norm_to_json(space.norm);
  j["cone"] = cone_to_json(space.cone);
  j["tolerance"] = space.tolerance;
  return j;
}

json scalar_metric_to_json(const ScalarMetric& m) {
  json j;
  switch (m.kind) {
    case ScalarMetric::Kind::AbsDiff:
      j["type"] = "abs-diff";
      j["scale"] = m.scale;
      break;
    case ScalarMetric::Kind::Euclidean:
      j["type"] = "euclidean";
      j["scale"] = m.scale;
      break;
    case ScalarMetric::Kind::Discrete:
      j["type"] = "discrete";
      break;
  }
  return j;
}

json point_to_json(const Point& p) {
  if (p.is_label()) return json(p.as_label());
  return vector_to_json(p.as_vec());
}

}  // namespace

ParseError::ParseError(const std::string& message, std::string origin,
                       int line, int column)
    : std::runtime_error(position_message(origin, message, line, column)),
      origin_(std::move(origin)),
      line_(line),
      column_(column) {}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing", path);
  out << content;
  if (!out) throw ParseError("write failed", path);
}

OrderedVectorSpace parse_space_json(const std::string& text,
                                    const std::string& origin) {
  return parse_space_object(parse_text(text, origin), origin, true);
}

ConeMetric parse_cone_metric_json(const std::string& text,
                                  const std::string& origin) {
  return parse_cone_metric_object(parse_text(text, origin), origin, true);
}

std::vector<Point> parse_points_json(const std::string& text,
                                     const std::string& origin) {
  const json j = parse_text(text, origin);
  require_object(j, origin, "points file");
  need_schema(j, origin, true);
  check_keys(j, origin, "points file", {"schema", "points"});
  const json& arr = need(j, "points", origin, "points file");
  if (!arr.is_array() || arr.empty()) {
    fail(origin, "points file needs a nonempty \"points\" array");
  }
  std::vector<Point> points;
  for (const auto& e : arr) {
    if (e.is_string()) {
      points.push_back(Point::label(e.get<std::string>()));
    } else if (e.is_number()) {
      points.push_back(Point::real(e.get<double>()));
    } else if (e.is_array()) {
      points.push_back(Point::vec(as_vector(e, origin, "point")));
    } else {
      fail(origin, "each point must be a label, a number, or an array");
    }
  }
  return points;
}

SelfMap parse_self_map_json(const std::string& text,
                            const std::string& origin) {
  const json j = parse_text(text, origin);
  require_object(j, origin, "map file");
  need_schema(j, origin, true);
  const std::string type = need_string(j, "type", origin, "map file");
  try {
    if (type == "identity") {
      check_keys(j, origin, "map file", {"schema", "type"});
      return SelfMap::identity();
    }
    if (type == "table") {
      check_keys(j, origin, "map file", {"schema", "type", "table"});
      const json& jt = need(j, "table", origin, "map file");
      require_object(jt, origin, "map table");
      std::map<std::string, std::string> table;
      for (auto it = jt.begin(); it != jt.end(); ++it) {
        if (!it->is_string()) {
          fail(origin, "map table values must be labels");
        }
        table[it.key()] = it->get<std::string>();
      }
      return SelfMap::table(std::move(table));
    }
    if (type == "affine") {
      check_keys(j, origin, "map file", {"schema", "type", "A", "b"});
      const Eigen::MatrixXd A = rows_as_matrix(
          need(j, "A", origin, "map file"), origin, "map key \"A\"");
      Eigen::VectorXd b = Eigen::VectorXd::Zero(A.rows());
      if (j.contains("b")) {
        b = as_vector(j.at("b"), origin, "map key \"b\"");
      }
      return SelfMap::affine(A, b);
    }
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  fail(origin, "unknown map type \"" + type + "\"");
}

ContractiveCondition parse_condition_json(const std::string& text,
                                          const std::string& origin) {
  const json j = parse_text(text, origin);
  require_object(j, origin, "condition");
  need_schema(j, origin, false);
  const std::string kind = need_string(j, "kind", origin, "condition");
  try {
    if (kind == "banach") {
      check_keys(j, origin, "condition", {"schema", "kind", "alpha"});
      return ContractiveCondition::banach(
          need_double(j, "alpha", origin, "condition"));
    }
    if (kind == "kannan") {
      check_keys(j, origin, "condition", {"schema", "kind", "lambda"});
      return ContractiveCondition::kannan(
          need_double(j, "lambda", origin, "condition"));
    }
    if (kind == "chatterjea") {
      check_keys(j, origin, "condition", {"schema", "kind", "lambda"});
      return ContractiveCondition::chatterjea(
          need_double(j, "lambda", origin, "condition"));
    }
    if (kind == "two-term") {
      check_keys(j, origin, "condition", {"schema", "kind", "alpha", "beta"});
      return ContractiveCondition::two_term(
          need_double(j, "alpha", origin, "condition"),
          need_double(j, "beta", origin, "condition"));
    }
    if (kind == "quasi-max5") {
      check_keys(j, origin, "condition", {"schema", "kind", "alpha"});
      return ContractiveCondition::quasi_max5(
          need_double(j, "alpha", origin, "condition"));
    }
    if (kind == "quasi-max5-half") {
      check_keys(j, origin, "condition", {"schema", "kind", "beta"});
      return ContractiveCondition::quasi_max5_half(
          need_double(j, "beta", origin, "condition"));
    }
    if (kind == "zamfirescu-max3") {
      check_keys(j, origin, "condition", {"schema", "kind", "beta"});
      return ContractiveCondition::zamfirescu_max3(
          need_double(j, "beta", origin, "condition"));
    }
    if (kind == "five-coefficient") {
      check_keys(j, origin, "condition", {"schema", "kind", "a"});
      const Eigen::VectorXd a =
          as_vector(need(j, "a", origin, "condition"), origin,
                    "condition key \"a\"");
      if (a.size() != 5) {
        fail(origin, "five-coefficient needs exactly five coefficients");
      }
      return ContractiveCondition::five_coefficient(
          {a[0], a[1], a[2], a[3], a[4]});
    }
    if (kind == "half-beta-max5") {
      check_keys(j, origin, "condition", {"schema", "kind", "beta"});
      return ContractiveCondition::half_beta_max5(
          need_double(j, "beta", origin, "condition"));
    }
    if (kind == "hardy-rogers-sym") {
      check_keys(j, origin, "condition", {"schema", "kind", "a"});
      const Eigen::VectorXd a =
          as_vector(need(j, "a", origin, "condition"), origin,
                    "condition key \"a\"");
      if (a.size() != 4) {
        fail(origin, "hardy-rogers-sym needs exactly four coefficients");
      }
      return ContractiveCondition::hardy_rogers_sym({a[0], a[1], a[2], a[3]});
    }
    if (kind == "iterated-power") {
      check_keys(j, origin, "condition",
                 {"schema", "kind", "m", "n", "k", "existential"});
      bool existential = false;
      if (j.contains("existential")) {
        const json& e = j.at("existential");
        if (!e.is_boolean()) {
          fail(origin, "condition key \"existential\" must be a boolean");
        }
        existential = e.get<bool>();
      }
      return ContractiveCondition::iterated_power(
          need_int(j, "m", origin, "condition"),
          need_int(j, "n", origin, "condition"),
          need_double(j, "k", origin, "condition"), existential);
    }
    if (kind == "dominance") {
      check_keys(j, origin, "condition", {"schema", "kind", "dstar"});
      std::shared_ptr<const ConeMetric> dstar;
      if (j.contains("dstar")) {
        dstar = std::make_shared<ConeMetric>(
            parse_cone_metric_object(j.at("dstar"), origin, false));
      }
      return ContractiveCondition::dominance(std::move(dstar));
    }
  } catch (const std::invalid_argument& e) {
    fail(origin, e.what());
  }
  fail(origin, "unknown condition kind \"" + kind + "\"");
}

OrderedVectorSpace load_space_file(const std::string& path) {
  return parse_space_json(read_text_file(path), path);
}

ConeMetric load_cone_metric_file(const std::string& path) {
  return parse_cone_metric_json(read_text_file(path), path);
}

std::vector<Point> load_points_file(const std::string& path) {
  return parse_points_json(read_text_file(path), path);
}

SelfMap load_self_map_file(const std::string& path) {
  return parse_self_map_json(read_text_file(path), path);
}

ContractiveCondition load_condition_file(const std::string& path) {
  return parse_condition_json(read_text_file(path), path);
}

std::string space_to_json(const OrderedVectorSpace& space) {
  return space_to_json_object(space, true).dump(2) + "\n";
}

std::string cone_metric_to_json(const ConeMetric& metric) {
  json j;
  j["schema"] = 1;
  switch (metric.kind()) {
    case ConeMetric::Kind::Discrete:
      j["type"] = "discrete";
      j["a"] = vector_to_json(metric.discrete_direction());
      j["codomain"] = space_to_json_object(metric.codomain(), false);
      break;
    case ConeMetric::Kind::Product:
      j["type"] = "product";
      j["a"] = metric.product_a();
      j["b"] = metric.product_b();
      j["d1"] = scalar_metric_to_json(metric.product_d1());
      j["d2"] = scalar_metric_to_json(metric.product_d2());
      break;
    case ConeMetric::Kind::GeometricLq:
      j["type"] = "geometric-lq";
      j["q"] = metric.lq_exponent();
      j["b"] = metric.lq_base();
      j["truncation"] = metric.lq_truncation();
      j["rho"] = scalar_metric_to_json(metric.lq_rho());
      break;
    case ConeMetric::Kind::FiniteTable: {
      j["type"] = "finite-table";
      json labels = json::array();
      for (const auto& l : metric.table_labels()) labels.push_back(l);
      j["labels"] = std::move(labels);
      json entries = json::array();
      for (const auto& e : metric.table_entries()) {
        json entry;
        entry["x"] = e.x;
        entry["y"] = e.y;
        entry["value"] = vector_to_json(e.value);
        entries.push_back(std::move(entry));
      }
      j["entries"] = std::move(entries);
      j["codomain"] = space_to_json_object(metric.codomain(), false);
      break;
    }
  }
  return j.dump(2) + "\n";
}

std::string points_to_json(const std::vector<Point>& points) {
  json j;
  j["schema"] = 1;
  json arr = json::array();
  for (const auto& p : points) arr.push_back(point_to_json(p));
  j["points"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string distance_matrix_to_csv(const LabeledMatrix& m) {
  std::string out = "label";
  for (const auto& l : m.labels) {
    out += ",";
    out += l;
  }
  out += "\n";
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    out += m.labels[static_cast<size_t>(i)];
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
      out += ",";
      out += format_number(m.values(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string metrize_sidecar_json(const LabeledMatrix& m) {
  json j;
  j["schema"] = 1;
  json labels = json::array();
  for (const auto& l : m.labels) labels.push_back(l);
  j["labels"] = std::move(labels);
  json entries = json::array();
  const int n = static_cast<int>(m.labels.size());
  size_t k = 0;
  double max_error = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int jdx = i + 1; jdx < n; ++jdx, ++k) {
      json entry;
      entry["x"] = m.labels[static_cast<size_t>(i)];
      entry["y"] = m.labels[static_cast<size_t>(jdx)];
      entry["value"] = m.values(i, jdx);
      entry["method"] = to_string(m.methods[k]);
      entry["error_bound"] = m.error_bounds[k];
      max_error = std::max(max_error, m.error_bounds[k]);
      entries.push_back(std::move(entry));
    }
  }
  j["entries"] = std::move(entries);
  j["max_error_bound"] = max_error;
  return j.dump(2) + "\n";
}

std::string transfer_report_to_json(const TransferReport& rep) {
  json j;
  j["schema"] = 1;
  j["samples_checked"] = rep.samples_checked;
  j["cone_holds"] = rep.cone_holds;
  j["scalar_holds_given_cone"] = rep.scalar_holds_given_cone;
  j["pass"] = rep.pass();
  json violations = json::array();
  for (const auto& v : rep.violations) {
    json jv;
    jv["x_index"] = v.x_index;
    jv["y_index"] = v.y_index;
    jv["cone_lhs"] = v.cone_lhs;
    jv["cone_rhs"] = v.cone_rhs;
    jv["scalar_lhs"] = v.scalar_lhs;
    jv["scalar_rhs"] = v.scalar_rhs;
    jv["slack"] = v.slack;
    jv["detail"] = v.detail;
    violations.push_back(std::move(jv));
  }
  j["violations"] = std::move(violations);
  return j.dump(2) + "\n";
}

std::string iteration_trace_to_json(const IterationTrace& trace) {
  json j;
  j["schema"] = 1;
  j["converged"] = trace.converged;
  j["diverged"] = trace.diverged;
  j["steps"] = trace.steps();
  j["estimated_rate"] = trace.estimated_rate;
  json iterates = json::array();
  for (const auto& p : trace.iterates) iterates.push_back(point_to_json(p));
  j["iterates"] = std::move(iterates);
  json distances = json::array();
  for (double d : trace.distances) distances.push_back(d);
  j["distances"] = std::move(distances);
  json to_final = json::array();
  for (double d : trace.distances_to_final) to_final.push_back(d);
  j["distances_to_final"] = std::move(to_final);
  return j.dump(2) + "\n";
}

std::string run_manifest_to_json(const RunManifest& manifest) {
  json j;
  j["schema"] = 1;
  j["command"] = manifest.command;
  json inputs = json::array();
  for (const auto& p : manifest.inputs) inputs.push_back(p);
  j["inputs"] = std::move(inputs);
  j["seed"] = manifest.seed;
  j["tolerance"] = manifest.tolerance;
  json outputs = json::array();
  for (const auto& p : manifest.outputs) outputs.push_back(p);
  j["outputs"] = std::move(outputs);
  j["version"] = manifest.version;
  return j.dump(2) + "\n";
}

}  // namespace conemet
