#pragma once

// Parameter sweeps of the scalar calculators, for tables and plots.

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "hypcollar/collar_tube.hpp"
#include "hypcollar/errors.hpp"
#include "hypcollar/quantity.hpp"
#include "hypcollar/special_functions.hpp"

namespace hypcollar {

enum class SweepQuantity { collar, stable_width, tube_width, tube_volume, ball_volume };
enum class GridScale { linear, log };

struct SweepSpec {
  SweepQuantity quantity = SweepQuantity::tube_width;
  int dimension = 3;
  bool two_sided = false;
  double min = 1.0;
  double max = 2.0;
  int count = 2;
  GridScale scale = GridScale::linear;
};

inline const char* to_string(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::collar: return "collar";
    case SweepQuantity::stable_width: return "stable_width";
    case SweepQuantity::tube_width: return "tube_width";
    case SweepQuantity::tube_volume: return "tube_volume";
    case SweepQuantity::ball_volume: return "ball_volume";
  }
  return "unknown";
}

/// Name of the swept parameter.
inline const char* parameter_name(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::collar: return "x";
    case SweepQuantity::stable_width: return "length";
    case SweepQuantity::tube_width:
    case SweepQuantity::tube_volume: return "area";
    case SweepQuantity::ball_volume: return "radius";
  }
  return "parameter";
}

inline std::vector<double> sweep_grid(const SweepSpec& s) {
  if (s.count < 2) throw DomainError("sweep count must be >= 2");
  if (!(s.min < s.max) || !std::isfinite(s.min) || !std::isfinite(s.max)) {
    throw DomainError("sweep needs finite min < max");
  }
  if (s.scale == GridScale::log && !(s.min > 0.0)) throw DomainError("log-scale sweep needs min > 0");
  std::vector<double> grid(static_cast<std::size_t>(s.count));
  for (int i = 0; i < s.count; ++i) {
    const double f = static_cast<double>(i) / (s.count - 1);
    grid[i] = s.scale == GridScale::linear ? s.min + f * (s.max - s.min)
                                           : std::exp(std::log(s.min) + f * (std::log(s.max) - std::log(s.min)));
  }
  grid.back() = s.max;
  return grid;
}

inline double evaluate(const SweepSpec& s, double x) {
  const Sides sides = s.two_sided ? Sides::two : Sides::one;
  switch (s.quantity) {
    case SweepQuantity::collar: return collar_value(x);
    case SweepQuantity::stable_width: return stable_width(Length(x)).value();
    case SweepQuantity::tube_width: return tube_width(Dimension(s.dimension), Area(x)).value();
    case SweepQuantity::tube_volume: return tube_volume(Dimension(s.dimension), Area(x), sides).value();
    case SweepQuantity::ball_volume: return ball_volume(Dimension(s.dimension), Radius(x)).value();
  }
  throw DomainError("unknown sweep quantity");
}

struct SweepRow {
  double parameter;
  double value;
};

inline std::vector<SweepRow> run_sweep(const SweepSpec& s) {
  std::vector<SweepRow> rows;
  for (const double x : sweep_grid(s)) rows.push_back({x, evaluate(s, x)});
  return rows;
}

/// Sanity checks on a sweep: the expected direction of monotonicity, and
/// for three-dimensional tube volumes the bound pi per side. Returns one
/// message per failed check.
inline std::vector<std::string> verify_sweep(const SweepSpec& s, const std::vector<SweepRow>& rows) {
  std::vector<std::string> failures;
  int direction = 0;  // +1 increasing, -1 decreasing
  switch (s.quantity) {
    case SweepQuantity::collar:
    case SweepQuantity::stable_width:
    case SweepQuantity::tube_width: direction = -1; break;
    case SweepQuantity::tube_volume: direction = s.dimension == 2 ? -1 : 1; break;
    case SweepQuantity::ball_volume: direction = 1; break;
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double step = rows[i].value - rows[i - 1].value;
    if (!(direction * step > 0.0)) {
      failures.push_back(std::string(to_string(s.quantity)) + " is not strictly " +
                         (direction > 0 ? "increasing" : "decreasing") + " at row " + std::to_string(i));
    }
  }
  if (s.quantity == SweepQuantity::tube_volume && s.dimension == 3) {
    const double cap = std::numbers::pi * (s.two_sided ? 2.0 : 1.0) + 1e-6;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].value > cap) failures.push_back("tube_volume exceeds pi per side at row " + std::to_string(i));
    }
  }
  return failures;
}

}  // namespace hypcollar
