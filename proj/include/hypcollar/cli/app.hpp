#pragma once

// The hypcollar command-line front end. run() takes the arguments after the
// program name and writes data to `out`, diagnostics to `err`.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypcollar/collar_tube.hpp"
#include "hypcollar/combination.hpp"
#include "hypcollar/errors.hpp"
#include "hypcollar/io/json_io.hpp"
#include "hypcollar/special_functions.hpp"
#include "hypcollar/stability.hpp"
#include "hypcollar/surface_group.hpp"
#include "hypcollar/sweep.hpp"

namespace hypcollar::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,  // unexpected exception; a bug
  kInvalidInput = 2,
  kNumericalFailure = 3,
  kNegativeVerdict = 4,  // --strict / --verify found a failure
};

/// Overrides the combination boundary band (default 1e-9).
inline constexpr const char* kBoundaryBandEnv = "HYPCOLLAR_BOUNDARY_BAND";

namespace detail {

struct Options {
  std::optional<int> digits;

  double length = 0.0;
  double x = 0.0;
  int dim = 3;
  double area = 0.0;
  double radius = 0.0;
  bool two_sided = false;
  long cusps = 0;
  long surfaces = 0;
  bool display_rounded = false;

  std::string file;
  std::optional<int> depth;
  bool strict = false;
  std::string word;
  std::string width = "auto";
  std::string partner;
  bool assert_separated = false;
  int max_word_length = 0;
  std::string format;
  bool verify = false;
  double r1 = 0.0;
  double r2 = 0.0;
};

inline int text_digits(const Options& o) { return o.digits.value_or(17); }

inline void print_number(std::ostream& out, const Options& o, double v) {
  out << io::format_number(v, text_digits(o)) << '\n';
}

inline void print_json(std::ostream& out, const io::json& j) { out << j.dump(2) << '\n'; }

inline double boundary_band_from_env() {
  const char* v = std::getenv(kBoundaryBandEnv);
  if (v == nullptr || *v == '\0') return kBoundaryBand;
  char* end = nullptr;
  const double band = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(band >= 0.0) || !std::isfinite(band)) {
    throw io::InputError(kBoundaryBandEnv, std::string("expected a nonnegative number, got \"") + v + "\"");
  }
  return band;
}

inline int cmd_combine(const Options& o, std::ostream& out, std::ostream& err) {
  const io::FuchsianPairFile f = io::parse_fuchsian_pair(io::read_json_file(o.file));
  const int depth = o.depth.value_or(f.depth.value_or(4));
  if (depth < 1) throw DomainError("--depth must be >= 1");
  const CombinationReport r =
      check_combination(f.subgroups[0], f.subgroups[1], depth, CombinationOptions{boundary_band_from_env()});
  print_json(out, io::to_json(r, o.digits));
  if (o.strict && r.verdict != CombinationVerdict::certified_free_product) {
    err << "combine: " << to_string(r.verdict) << ": " << r.reason << '\n';
    return kNegativeVerdict;
  }
  return kOk;
}

inline int cmd_stability(const Options& o, std::ostream& out, std::ostream& err) {
  const io::SurfaceGroupFile f = io::parse_surface_group(io::read_json_file(o.file));
  if (!o.depth || *o.depth < 0) throw DomainError("--depth must be >= 0");
  const ClosedGeodesicH2 geo = geodesic_from_word(f.group, Word::parse(o.word, f.group.size()));
  Width width = stable_width(geo);
  if (o.width != "auto") {
    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(o.width, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.width.size() || !(w > 0.0) || !std::isfinite(w)) {
      throw io::InputError("--width", "expected \"auto\" or a positive number, got \"" + o.width + "\"");
    }
    width = Width(w);
  }
  const StabilityReport r = verify_stability(f.group, geo, width, *o.depth);
  io::json j = io::to_json(r, geo, o.digits);
  j["width_mode"] = o.width == "auto" ? "auto" : "given";
  bool negative = !r.violations.empty();
  if (!o.partner.empty()) {
    const ClosedGeodesicH2 other = geodesic_from_word(f.group, Word::parse(o.partner, f.group.size()));
    const SeparatedPairReport sep = check_separated_pair(f.group, geo, other, *o.depth, o.assert_separated);
    j["separated_pair"] = io::to_json(sep, geo.word.to_string(), other.word.to_string(), o.digits);
    negative = negative || !sep.overlapping.empty();
  }
  print_json(out, j);
  if (o.strict && negative) {
    err << "stability: violations found up to depth " << *o.depth << '\n';
    return kNegativeVerdict;
  }
  return kOk;
}

inline int cmd_trend(const Options& o, std::ostream& out) {
  const io::SurfaceGroupFile f = io::parse_surface_group(io::read_json_file(o.file));
  if (!o.depth) throw DomainError("--depth is required");
  const auto rows = self_intersection_trend(f.group, o.max_word_length, *o.depth);
  if (o.format == "csv") {
    out << io::trend_csv(rows, text_digits(o));
  } else {
    print_json(out, io::to_json(rows, o.max_word_length, *o.depth, o.digits));
  }
  return kOk;
}

inline int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const io::SweepFile f = io::parse_sweep_spec(io::read_json_file(o.file));
  const auto rows = run_sweep(f.spec);
  io::SweepFormat format = f.format;
  if (o.format == "csv") format = io::SweepFormat::csv;
  if (o.format == "json") format = io::SweepFormat::json;
  if (format == io::SweepFormat::csv) {
    out << io::sweep_csv(f.spec, rows, text_digits(o));
  } else {
    print_json(out, io::to_json(f.spec, rows, o.digits));
  }
  if (o.verify) {
    const auto failures = verify_sweep(f.spec, rows);
    for (const auto& msg : failures) err << "sweep: " << msg << '\n';
    if (!failures.empty()) return kNegativeVerdict;
  }
  return kOk;
}

inline int cmd_validate(const Options& o, std::ostream& out) {
  const std::string type = io::validate_document(io::read_json_file(o.file));
  out << "valid " << type << '\n';
  return kOk;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Collar, tube and combination calculators for hyperbolic manifolds", "hypcollar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--digits", o.digits, "Significant digits in output (default: full precision)")
      ->check(CLI::Range(1, 17));

  auto* collar = app.add_subcommand("collar", "Stable width r(l/2) of a closed geodesic, or r(x) itself");
  auto* collar_len = collar->add_option("--length", o.length, "Geodesic length l > 0");
  auto* collar_x = collar->add_option("--x", o.x, "Argument x > 0 of r(x) = log coth(x/2)");
  collar_len->excludes(collar_x);
  collar->require_option(1);

  auto* tw = app.add_subcommand("tube-width", "Tube width c_n(A) of an embedded hypersurface of area A");
  tw->add_option("--dim", o.dim, "Ambient dimension n")->required();
  tw->add_option("--area", o.area, "Hypersurface area A > 0")->required();

  auto* bv = app.add_subcommand("ball-volume", "Volume of a hyperbolic ball");
  bv->add_option("--dim", o.dim, "Dimension n")->required();
  bv->add_option("--radius", o.radius, "Radius r >= 0")->required();

  auto* tv = app.add_subcommand("tube-volume", "Volume of the tube of width c_n(A)");
  tv->add_option("--dim", o.dim, "Ambient dimension n")->required();
  tv->add_option("--area", o.area, "Hypersurface area A > 0")->required();
  tv->add_flag("--two-sided", o.two_sided, "Count both sides of the hypersurface");

  auto* bounds = app.add_subcommand("bounds", "Volume lower bound from cusps and closed geodesic surfaces");
  bounds->add_option("--cusps", o.cusps, "Number of cusps")->required();
  bounds->add_option("--surfaces", o.surfaces, "Number of closed totally geodesic surfaces")->required();
  bounds->add_option("--dim", o.dim, "Dimension (only 3 is supported)");
  bounds->add_flag("--display-rounded", o.display_rounded, "Use the rounded surface constant 4.4");

  auto* combine = app.add_subcommand("combine", "Check the combination criterion for two fuchsian subgroups");
  combine->add_option("--file", o.file, "fuchsian_pair JSON file")->required();
  combine->add_option("--depth", o.depth, "Orbit search depth (default: file, else 4)");
  combine->add_flag("--strict", o.strict, "Exit 4 unless the verdict is certified_free_product");

  auto* stab = app.add_subcommand("stability", "Check stability of the width-w neighborhood over lifts");
  stab->add_option("--file", o.file, "surface_group JSON file")->required();
  stab->add_option("--word", o.word, "Word in a, b, ... (upper case = inverse)")->required();
  stab->add_option("--depth", o.depth, "Lift enumeration depth")->required();
  stab->add_option("--width", o.width, "Neighborhood width, or auto for r(l/2)");
  stab->add_flag("--strict", o.strict, "Exit 4 if any violation is found");
  stab->add_option("--partner", o.partner, "Second word for the separated-pair check");
  stab->add_flag("--assert-separated", o.assert_separated,
                 "Assert the two geodesics are separated by disjoint simple closed geodesics");

  auto* trend = app.add_subcommand("trend", "Minimum length per self-intersection count");
  trend->add_option("--file", o.file, "surface_group JSON file")->required();
  trend->add_option("--max-word-length", o.max_word_length, "Longest word enumerated")->required();
  trend->add_option("--depth", o.depth, "Lift depth for counting self-intersections")->required();
  trend->add_option("--format", o.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* sweep = app.add_subcommand("sweep", "Tabulate a quantity over a parameter grid");
  sweep->add_option("--spec", o.file, "sweep JSON spec")->required();
  sweep->add_option("--format", o.format, "Override the output format in the sweep file")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_flag("--verify", o.verify, "Check monotonicity and bounds; exit 4 on failure");

  auto* glue = app.add_subcommand("glue", "Boundary separation after gluing around balls of radii R1, R2");
  glue->add_option("--r1", o.r1, "First ball radius > 0 (inf allowed)")->required();
  glue->add_option("--r2", o.r2, "Second ball radius > 0 (inf allowed)")->required();

  auto* validate = app.add_subcommand("validate", "Check a JSON input file or report against its schema");
  validate->add_option("--file", o.file, "JSON document")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hypcollar: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (collar->parsed()) {
      if (collar_len->count() > 0) {
        detail::print_number(out, o, stable_width(Length(o.length)).value());
      } else {
        detail::print_number(out, o, collar_function(Length(o.x)).value());
      }
    } else if (tw->parsed()) {
      detail::print_number(out, o, tube_width(Dimension(o.dim), Area(o.area)).value());
    } else if (bv->parsed()) {
      detail::print_number(out, o, ball_volume(Dimension(o.dim), Radius(o.radius)).value());
    } else if (tv->parsed()) {
      const Sides sides = o.two_sided ? Sides::two : Sides::one;
      detail::print_number(out, o, tube_volume(Dimension(o.dim), Area(o.area), sides).value());
    } else if (bounds->parsed()) {
      const auto constant = o.display_rounded ? SurfaceConstant::display_rounded : SurfaceConstant::exact;
      detail::print_number(out, o, volume_lower_bound(BoundInputs{o.cusps, o.surfaces, o.dim}, constant).value());
    } else if (combine->parsed()) {
      return detail::cmd_combine(o, out, err);
    } else if (stab->parsed()) {
      return detail::cmd_stability(o, out, err);
    } else if (trend->parsed()) {
      return detail::cmd_trend(o, out);
    } else if (sweep->parsed()) {
      return detail::cmd_sweep(o, out, err);
    } else if (glue->parsed()) {
      detail::print_json(out, io::to_json(gluing_separation(Radius(o.r1), Radius(o.r2)), o.digits));
    } else if (validate->parsed()) {
      return detail::cmd_validate(o, out);
    }
    return kOk;
  } catch (const DomainError& e) {
    err << "hypcollar: invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NumericalError& e) {
    err << "hypcollar: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "hypcollar: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace hypcollar::cli
