#pragma once

// JSON input schemas (group descriptions, sweep specs) and JSON reports.
// Every document carries "schema": 1 and a "type" tag.

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hypcollar/combination.hpp"
#include "hypcollar/errors.hpp"
#include "hypcollar/hyperboloid.hpp"
#include "hypcollar/stability.hpp"
#include "hypcollar/surface_group.hpp"
#include "hypcollar/sweep.hpp"

namespace hypcollar::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input. `where` is a JSON pointer to the offending field, or
/// "line L, column C" for syntax errors.
class InputError : public DomainError {
 public:
  InputError(std::string where, const std::string& what)
      : DomainError(where + ": " + what), where_(std::move(where)) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column),
                     "invalid JSON syntax");
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ", " + e.where(), "invalid JSON syntax");
  }
}

namespace detail {

inline std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
inline std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

inline const json& require(const json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) throw InputError(path.empty() ? "/" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(child(path, key), "missing required field");
  return *it;
}

inline const json* optional_field(const json& j, std::string_view key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

/// A real number; the strings "inf" and "-inf" stand for infinities.
inline double number(const json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw InputError(path, "expected a number");
}

inline double finite_number(const json& j, const std::string& path) {
  const double x = number(j, path);
  if (!std::isfinite(x)) throw InputError(path, "expected a finite number");
  return x;
}

inline int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw InputError(path, "integer out of range");
  }
  return static_cast<int>(v);
}

inline const std::string& string(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a string");
  return j.get_ref<const std::string&>();
}

inline bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw InputError(path, "expected true or false");
  return j.get<bool>();
}

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

inline void check_header(const json& j, std::string_view type) {
  if (!j.is_object()) throw InputError("/", "expected a JSON object");
  const int schema = integer(require(j, "schema", ""), "/schema");
  if (schema != kSchemaVersion) {
    throw InputError("/schema", "unsupported schema version " + std::to_string(schema));
  }
  const std::string& t = string(require(j, "type", ""), "/type");
  if (t != type) throw InputError("/type", "expected \"" + std::string(type) + "\", got \"" + t + "\"");
}

}  // namespace detail

/// Row-major matrix, either nested ([[a, b], [c, d]]) or flat ([a, b, c, d]).
inline Eigen::MatrixXd parse_matrix(const json& j, int rows, int cols, const std::string& path) {
  detail::array(j, path);
  Eigen::MatrixXd m(rows, cols);
  const auto expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (!j.empty() && j.front().is_array()) {
    if (j.size() != static_cast<std::size_t>(rows)) {
      throw InputError(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    }
    for (int r = 0; r < rows; ++r) {
      const std::string rp = detail::child(path, static_cast<std::size_t>(r));
      const json& row = detail::array(j[r], rp);
      if (row.size() != static_cast<std::size_t>(cols)) {
        throw InputError(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
      }
      for (int c = 0; c < cols; ++c) m(r, c) = detail::finite_number(row[c], detail::child(rp, static_cast<std::size_t>(c)));
    }
    return m;
  }
  if (j.size() != expected) {
    throw InputError(path, "expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const auto k = static_cast<std::size_t>(r * cols + c);
      m(r, c) = detail::finite_number(j[k], detail::child(path, k));
    }
  }
  return m;
}

inline Eigen::VectorXd parse_vector(const json& j, int size, const std::string& path) {
  detail::array(j, path);
  if (j.size() != static_cast<std::size_t>(size)) {
    throw InputError(path, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  }
  Eigen::VectorXd v(size);
  for (int i = 0; i < size; ++i) v[i] = detail::finite_number(j[i], detail::child(path, static_cast<std::size_t>(i)));
  return v;
}

// ---------------------------------------------------------------------------
// Surface groups
// ---------------------------------------------------------------------------

struct SurfaceGroupFile {
  SurfaceGroupData group;
  std::vector<Word> words;
};

/// {"schema": 1, "type": "surface_group",
///  "generators": [{"label": "a", "matrix": [[a, b], [c, d]]}, ...],
///  "words": ["a", "ab"]}            (words optional)
/// Words use the letters a, b, ... for the generators in order and upper
/// case for inverses, whatever the labels.
inline SurfaceGroupFile parse_surface_group(const json& j) {
  detail::check_header(j, "surface_group");
  const json& gens = detail::array(detail::require(j, "generators", ""), "/generators");
  if (gens.empty()) throw InputError("/generators", "at least one generator is required");
  std::vector<Mat2> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = detail::child("/generators", i);
    const json& g = gens[i];
    const json& mj = g.is_object() ? detail::require(g, "matrix", p) : g;
    const std::string mp = g.is_object() ? detail::child(p, "matrix") : p;
    mats.emplace_back(parse_matrix(mj, 2, 2, mp));
    if (g.is_object()) {
      if (const json* l = detail::optional_field(g, "label")) {
        labels.push_back(detail::string(*l, detail::child(p, "label")));
      }
    }
  }
  if (!labels.empty() && labels.size() != mats.size()) {
    throw InputError("/generators", "either every generator has a label or none does");
  }
  std::optional<SurfaceGroupData> group;
  try {
    group.emplace(std::move(mats), std::move(labels));
  } catch (const DomainError& e) {
    throw InputError("/generators", e.what());
  }
  SurfaceGroupFile out{*group, {}};
  if (const json* w = detail::optional_field(j, "words")) {
    detail::array(*w, "/words");
    for (std::size_t i = 0; i < w->size(); ++i) {
      const std::string p = detail::child("/words", i);
      try {
        out.words.push_back(Word::parse(detail::string((*w)[i], p), out.group.size()));
      } catch (const InputError&) {
        throw;
      } catch (const DomainError& e) {
        throw InputError(p, e.what());
      }
    }
  }
  return out;
}

inline json to_json(const SurfaceGroupData& g) {
  json gens = json::array();
  for (int i = 0; i < g.size(); ++i) {
    const Mat2& m = g.generators()[i];
    gens.push_back({{"label", g.labels()[i]}, {"matrix", {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}}});
  }
  return {{"schema", kSchemaVersion}, {"type", "surface_group"}, {"generators", gens}};
}

// ---------------------------------------------------------------------------
// Fuchsian subgroup pairs
// ---------------------------------------------------------------------------

struct FuchsianPairFile {
  int dimension;
  std::vector<FuchsianSubgroup> subgroups;  // exactly two
  std::optional<int> depth;
};

inline SubgroupKind parse_kind(const json& j, const std::string& path) {
  const std::string& s = detail::string(j, path);
  if (s == "cyclic_hyperbolic") return SubgroupKind::cyclic_hyperbolic;
  if (s == "general") return SubgroupKind::general;
  throw InputError(path, "kind must be \"cyclic_hyperbolic\" or \"general\"");
}

/// {"schema": 1, "type": "fuchsian_pair", "dimension": n, "depth": D,
///  "subgroups": [{"kind": "cyclic_hyperbolic" | "general",
///                 "normal": [u_1, ..., u_n, u_{n+1}],
///                 "generators": [(n+1)x(n+1) matrices]}, {...}]}
/// Normals are spacelike vectors in coordinates (x_1..x_n, x_{n+1}) with the
/// form x.y - x_{n+1} y_{n+1}; they are rescaled to unit length. "depth" is
/// optional.
inline FuchsianPairFile parse_fuchsian_pair(const json& j) {
  detail::check_header(j, "fuchsian_pair");
  const int n = detail::integer(detail::require(j, "dimension", ""), "/dimension");
  if (n < Dimension::kMin || n > Dimension::kMax) {
    throw InputError("/dimension", "dimension must be in [" + std::to_string(Dimension::kMin) + ", " +
                                       std::to_string(Dimension::kMax) + "]");
  }
  FuchsianPairFile out{n, {}, std::nullopt};
  if (const json* d = detail::optional_field(j, "depth")) {
    out.depth = detail::integer(*d, "/depth");
    if (*out.depth < 1) throw InputError("/depth", "depth must be >= 1");
  }
  const json& subs = detail::array(detail::require(j, "subgroups", ""), "/subgroups");
  if (subs.size() != 2) throw InputError("/subgroups", "exactly two subgroups are required");
  for (std::size_t s = 0; s < 2; ++s) {
    const std::string p = detail::child("/subgroups", s);
    const json& sub = subs[s];
    const SubgroupKind kind = parse_kind(detail::require(sub, "kind", p), detail::child(p, "kind"));
    const std::string np = detail::child(p, "normal");
    const Eigen::VectorXd normal = parse_vector(detail::require(sub, "normal", p), n + 1, np);
    std::optional<Hyperplane> plane;
    try {
      plane.emplace(Hyperplane::through_normal_direction(normal));
    } catch (const DomainError& e) {
      throw InputError(np, e.what());
    }
    const std::string gp = detail::child(p, "generators");
    const json& gens = detail::array(detail::require(sub, "generators", p), gp);
    std::vector<Isometry> isos;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string ip = detail::child(gp, i);
      const Eigen::MatrixXd m = parse_matrix(gens[i], n + 1, n + 1, ip);
      try {
        isos.push_back(Isometry::from_matrix(m));
      } catch (const DomainError& e) {
        throw InputError(ip, e.what());
      }
    }
    try {
      out.subgroups.emplace_back(*plane, std::move(isos), kind);
    } catch (const DomainError& e) {
      throw InputError(p, e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweep specs
// ---------------------------------------------------------------------------

enum class SweepFormat { csv, json };

struct SweepFile {
  SweepSpec spec;
  SweepFormat format = SweepFormat::csv;
};

inline SweepQuantity parse_quantity(const json& j, const std::string& path) {
  const std::string& s = detail::string(j, path);
  for (const auto q : {SweepQuantity::collar, SweepQuantity::stable_width, SweepQuantity::tube_width,
                       SweepQuantity::tube_volume, SweepQuantity::ball_volume}) {
    if (s == to_string(q)) return q;
  }
  throw InputError(path, "unknown quantity \"" + s + "\"");
}

/// {"schema": 1, "type": "sweep", "quantity": "tube_volume", "dimension": 3,
///  "two_sided": false, "grid": {"min": 1, "max": 1e8, "count": 100,
///  "scale": "log"}, "format": "csv"}
/// dimension, two_sided, scale (default linear) and format (default csv)
/// are optional.
inline SweepFile parse_sweep_spec(const json& j) {
  detail::check_header(j, "sweep");
  SweepFile out;
  out.spec.quantity = parse_quantity(detail::require(j, "quantity", ""), "/quantity");
  if (const json* d = detail::optional_field(j, "dimension")) {
    out.spec.dimension = detail::integer(*d, "/dimension");
    if (out.spec.dimension < Dimension::kMin || out.spec.dimension > Dimension::kMax) {
      throw InputError("/dimension", "dimension out of range");
    }
  }
  if (const json* t = detail::optional_field(j, "two_sided")) out.spec.two_sided = detail::boolean(*t, "/two_sided");
  const json& grid = detail::require(j, "grid", "");
  out.spec.min = detail::finite_number(detail::require(grid, "min", "/grid"), "/grid/min");
  out.spec.max = detail::finite_number(detail::require(grid, "max", "/grid"), "/grid/max");
  out.spec.count = detail::integer(detail::require(grid, "count", "/grid"), "/grid/count");
  if (out.spec.count < 2) throw InputError("/grid/count", "count must be >= 2");
  if (!(out.spec.min < out.spec.max)) throw InputError("/grid", "min must be < max");
  if (const json* s = detail::optional_field(grid, "scale")) {
    const std::string& v = detail::string(*s, "/grid/scale");
    if (v == "linear") {
      out.spec.scale = GridScale::linear;
    } else if (v == "log") {
      out.spec.scale = GridScale::log;
      if (!(out.spec.min > 0.0)) throw InputError("/grid/min", "log scale needs min > 0");
    } else {
      throw InputError("/grid/scale", "scale must be \"linear\" or \"log\"");
    }
  }
  if (const json* f = detail::optional_field(j, "format")) {
    const std::string& v = detail::string(*f, "/format");
    if (v == "csv") {
      out.format = SweepFormat::csv;
    } else if (v == "json") {
      out.format = SweepFormat::json;
    } else {
      throw InputError("/format", "format must be \"csv\" or \"json\"");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Number formatting
// ---------------------------------------------------------------------------

/// Decimal text with `digits` significant digits; "inf", "-inf", "nan" for
/// non-finite values.
inline std::string format_number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

/// A JSON value for x: rounded to `digits` significant digits when digits
/// is set (otherwise the shortest text that round-trips), and the strings
/// "inf" / "-inf" for infinities since JSON has no literal for them.
inline json number_json(double x, std::optional<int> digits = std::nullopt) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (digits) return std::strtod(format_number(x, *digits).c_str(), nullptr);
  return x;
}

inline json vector_json(const Eigen::VectorXd& v, std::optional<int> digits) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number_json(v[i], digits));
  return a;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json to_json(const CombinationReport& r, std::optional<int> digits = std::nullopt) {
  return {
      {"schema", kSchemaVersion},
      {"type", "combination_report"},
      {"depth", r.depth},
      {"distance", number_json(r.d.value(), digits)},
      {"boundary_distance", number_json(r.boundary_distance.value(), digits)},
      {"feet", {vector_json(r.feet.first.coords(), digits), vector_json(r.feet.second.coords(), digits)}},
      {"injectivity_radii", {number_json(r.inj.first.value(), digits), number_json(r.inj.second.value(), digits)}},
      {"injectivity_certified", {r.inj_certified.first, r.inj_certified.second}},
      {"lhs", number_json(r.lhs.value(), digits)},
      {"margin", number_json(r.margin, digits)},
      {"verdict", to_string(r.verdict)},
      {"reason", r.reason},
  };
}

/// Stability report. The check covers lifts up to the truncation depth
/// only, which "globally_verified": false records.
inline json to_json(const StabilityReport& r, const ClosedGeodesicH2& geo, std::optional<int> digits = std::nullopt) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"lifts", {r.lifts[v.first].label(), r.lifts[v.second].label()}},
                          {"crossing", v.crossing},
                          {"overlap", v.overlap}});
  }
  return {
      {"schema", kSchemaVersion},
      {"type", "stability_report"},
      {"word", geo.word.to_string()},
      {"length", number_json(geo.length.value(), digits)},
      {"width", number_json(r.width.value(), digits)},
      {"truncation_depth", r.truncation_depth},
      {"lifts_examined", r.lifts.size()},
      {"pairs_checked", r.pairs_checked},
      {"crossing_pairs", r.crossing_pairs},
      {"violation_count", r.violations.size()},
      {"violations", violations},
      {"globally_verified", false},
  };
}

inline json to_json(const SeparatedPairReport& r, const std::string& first, const std::string& second,
                    std::optional<int> digits = std::nullopt) {
  json overlapping = json::array();
  for (const auto& [a, b] : r.overlapping) overlapping.push_back({a, b});
  return {
      {"words", {first, second}},
      {"asserted_separated", r.checked},
      {"widths", {number_json(r.first_width.value(), digits), number_json(r.second_width.value(), digits)}},
      {"truncation_depth", r.truncation_depth},
      {"pairs_checked", r.pairs_checked},
      {"overlapping", overlapping},
  };
}

inline json to_json(const std::vector<TrendRow>& rows, int max_word_length, int depth,
                    std::optional<int> digits = std::nullopt) {
  json table = json::array();
  for (const auto& row : rows) {
    table.push_back({{"self_intersections", row.self_intersections},
                     {"min_length", number_json(row.min_length.value(), digits)},
                     {"shortest_word", row.shortest_word},
                     {"curves", row.curves}});
  }
  return {{"schema", kSchemaVersion},
          {"type", "trend_report"},
          {"max_word_length", max_word_length},
          {"depth", depth},
          {"self_intersection_is_lower_bound", true},
          {"rows", table}};
}

inline std::string trend_csv(const std::vector<TrendRow>& rows, int digits) {
  std::string out = "self_intersections,min_length,shortest_word,curves\n";
  for (const auto& row : rows) {
    out += std::to_string(row.self_intersections) + "," + format_number(row.min_length.value(), digits) + "," +
           row.shortest_word + "," + std::to_string(row.curves) + "\n";
  }
  return out;
}

inline json to_json(const GluingSpec& g, std::optional<int> digits = std::nullopt) {
  return {{"schema", kSchemaVersion},
          {"type", "gluing_spec"},
          {"radii", {number_json(g.radii.first.value(), digits), number_json(g.radii.second.value(), digits)}},
          {"separation", number_json(g.separation.value(), digits)},
          {"description", g.description}};
}

inline std::string sweep_csv(const SweepSpec& s, const std::vector<SweepRow>& rows, int digits) {
  std::string out = std::string(parameter_name(s.quantity)) + "," + to_string(s.quantity) + "\n";
  for (const auto& r : rows) out += format_number(r.parameter, digits) + "," + format_number(r.value, digits) + "\n";
  return out;
}

inline json to_json(const SweepSpec& s, const std::vector<SweepRow>& rows, std::optional<int> digits = std::nullopt) {
  json table = json::array();
  for (const auto& r : rows) table.push_back({number_json(r.parameter, digits), number_json(r.value, digits)});
  return {{"schema", kSchemaVersion},
          {"type", "sweep_report"},
          {"quantity", to_string(s.quantity)},
          {"dimension", s.dimension},
          {"two_sided", s.two_sided},
          {"columns", {parameter_name(s.quantity), to_string(s.quantity)}},
          {"rows", table}};
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace detail {

inline void require_number(const json& j, std::string_view key) { number(require(j, key, ""), "/" + std::string(key)); }

inline void require_number_array(const json& j, std::string_view key, std::size_t size) {
  const std::string p = "/" + std::string(key);
  const json& a = array(require(j, key, ""), p);
  if (a.size() != size) throw InputError(p, "expected " + std::to_string(size) + " entries");
  for (std::size_t i = 0; i < a.size(); ++i) number(a[i], child(p, i));
}

inline void require_string_in(const json& j, std::string_view key, std::initializer_list<std::string_view> allowed) {
  const std::string p = "/" + std::string(key);
  const std::string& s = string(require(j, key, ""), p);
  for (const auto a : allowed) {
    if (s == a) return;
  }
  throw InputError(p, "unexpected value \"" + s + "\"");
}

inline void require_count(const json& j, std::string_view key) {
  const std::string p = "/" + std::string(key);
  if (integer(require(j, key, ""), p) < 0) throw InputError(p, "expected a nonnegative integer");
}

}  // namespace detail

/// Checks a document against its schema, identified by "type". Input files
/// are fully parsed into library types; reports are checked field by field.
/// Returns the type name; throws InputError otherwise.
inline std::string validate_document(const json& j) {
  if (!j.is_object()) throw InputError("/", "expected a JSON object");
  const std::string type = detail::string(detail::require(j, "type", ""), "/type");
  if (type == "surface_group") {
    parse_surface_group(j);
  } else if (type == "fuchsian_pair") {
    parse_fuchsian_pair(j);
  } else if (type == "sweep") {
    parse_sweep_spec(j);
  } else if (type == "combination_report") {
    detail::check_header(j, type);
    detail::require_count(j, "depth");
    for (const auto* k : {"distance", "boundary_distance", "lhs", "margin"}) detail::require_number(j, k);
    detail::require_number_array(j, "injectivity_radii", 2);
    const json& feet = detail::array(detail::require(j, "feet", ""), "/feet");
    if (feet.size() != 2) throw InputError("/feet", "expected two points");
    const json& cert = detail::array(detail::require(j, "injectivity_certified", ""), "/injectivity_certified");
    if (cert.size() != 2) throw InputError("/injectivity_certified", "expected two flags");
    for (std::size_t i = 0; i < 2; ++i) detail::boolean(cert[i], detail::child("/injectivity_certified", i));
    detail::require_string_in(j, "verdict", {"certified_free_product", "boundary_case", "not_certified"});
    detail::string(detail::require(j, "reason", ""), "/reason");
  } else if (type == "stability_report") {
    detail::check_header(j, type);
    detail::string(detail::require(j, "word", ""), "/word");
    for (const auto* k : {"length", "width"}) detail::require_number(j, k);
    for (const auto* k : {"truncation_depth", "lifts_examined", "pairs_checked", "crossing_pairs", "violation_count"}) {
      detail::require_count(j, k);
    }
    const json& v = detail::array(detail::require(j, "violations", ""), "/violations");
    if (v.size() != j["violation_count"].get<std::size_t>()) {
      throw InputError("/violations", "length differs from violation_count");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string p = detail::child("/violations", i);
      const bool c = detail::boolean(detail::require(v[i], "crossing", p), detail::child(p, "crossing"));
      const bool o = detail::boolean(detail::require(v[i], "overlap", p), detail::child(p, "overlap"));
      if (c == o) throw InputError(p, "a violation needs crossing != overlap");
    }
    if (detail::boolean(detail::require(j, "globally_verified", ""), "/globally_verified")) {
      throw InputError("/globally_verified", "a truncated check cannot be globally verified");
    }
  } else if (type == "trend_report") {
    detail::check_header(j, type);
    detail::require_count(j, "max_word_length");
    detail::require_count(j, "depth");
    const json& rows = detail::array(detail::require(j, "rows", ""), "/rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string p = detail::child("/rows", i);
      detail::integer(detail::require(rows[i], "self_intersections", p), detail::child(p, "self_intersections"));
      detail::number(detail::require(rows[i], "min_length", p), detail::child(p, "min_length"));
      detail::string(detail::require(rows[i], "shortest_word", p), detail::child(p, "shortest_word"));
      detail::integer(detail::require(rows[i], "curves", p), detail::child(p, "curves"));
    }
  } else if (type == "gluing_spec") {
    detail::check_header(j, type);
    detail::require_number_array(j, "radii", 2);
    detail::require_number(j, "separation");
    detail::string(detail::require(j, "description", ""), "/description");
  } else if (type == "sweep_report") {
    detail::check_header(j, type);
    parse_quantity(detail::require(j, "quantity", ""), "/quantity");
    const json& rows = detail::array(detail::require(j, "rows", ""), "/rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string p = detail::child("/rows", i);
      const json& row = detail::array(rows[i], p);
      if (row.size() != 2) throw InputError(p, "expected [parameter, value]");
      detail::number(row[0], detail::child(p, 0));
      detail::number(row[1], detail::child(p, 1));
    }
  } else {
    throw InputError("/type", "unknown document type \"" + type + "\"");
  }
  return type;
}

}  // namespace hypcollar::io
