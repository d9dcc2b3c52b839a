#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "hypcollar/errors.hpp"

namespace hypcollar {

struct RootOptions {
  double relative_tolerance = 1e-12;
  int max_iterations = 200;
};

struct RootResult {
  double root;
  int iterations;
};

/// Finds the sign change of a monotone function inside [lo, hi] (0 < lo < hi)
/// with f(lo) and f(hi) of opposite sign. Bisection (geometric while the
/// bracket spans more than a factor 4) guards secant steps. Infinite values
/// of f are allowed at the bracket ends; they only force bisection.
template <class F>
RootResult find_bracketed_root(F&& f, double lo, double hi, const RootOptions& opts = {}) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw NumericalError("root is not bracketed by [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  double last_width = hi - lo;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    double x;
    const bool finite = std::isfinite(flo) && std::isfinite(fhi);
    const double secant = hi - fhi * (hi - lo) / (fhi - flo);
    const bool wide = hi > 4.0 * lo;
    if (finite && !wide && secant > lo && secant < hi && (hi - lo) <= 0.5 * last_width) {
      x = secant;
    } else {
      x = wide ? std::sqrt(lo) * std::sqrt(hi) : 0.5 * (lo + hi);
    }
    last_width = hi - lo;
    const double fx = f(x);
    if (fx == 0.0) return {x, it};
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo <= opts.relative_tolerance * lo) {
      // Final secant inside the converged bracket, otherwise the better end.
      if (std::isfinite(flo) && std::isfinite(fhi) && fhi != flo) {
        const double s = hi - fhi * (hi - lo) / (fhi - flo);
        if (s >= lo && s <= hi) return {s, it};
      }
      return {std::abs(flo) < std::abs(fhi) ? lo : hi, it};
    }
  }
  throw NumericalError("bracketed root finder did not converge in " +
                       std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace hypcollar
