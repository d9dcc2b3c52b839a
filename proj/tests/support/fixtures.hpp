#pragma once

#include <cmath>

#include "hypcollar/surface_group.hpp"

namespace hypcollar::testing {

/// [[C, S k], [S / k, C]] with C = tr / 2: hyperbolic with axis (-k, k).
inline Mat2 symmetric_hyperbolic(double trace, double k) {
  const double c = trace / 2.0, s = std::sqrt(c * c - 1.0);
  Mat2 m;
  m << c, s * k, s / k, c;
  return m;
}

/// Two translations of length 2 with axes (-1, 1) and (-6, 6). Their
/// isometric circles sit over [tanh(1/2), coth(1/2)] and 6 times that, which
/// are disjoint, so ping-pong makes the group Schottky.
inline SurfaceGroupData schottky_group() {
  const double tr = 2.0 * std::cosh(1.0);
  return SurfaceGroupData({symmetric_hyperbolic(tr, 1.0), symmetric_hyperbolic(tr, 6.0)}, {"a", "b"});
}

/// Pair of pants with boundary classes a, b and aB, all of trace 3 (length
/// 2 arccosh(3/2)); ab is the figure-eight. k = 3 + 2 sqrt 2 solves
/// tr(aB) = 4.5 - 1.25 (k + 1/k) = -3.
inline SurfaceGroupData pants_group() {
  const double k = 3.0 + 2.0 * std::sqrt(2.0);
  return SurfaceGroupData({symmetric_hyperbolic(3.0, 1.0), symmetric_hyperbolic(3.0, k)}, {"a", "b"});
}

}  // namespace hypcollar::testing
