#pragma once

// Universal widths and volumes attached to closed geodesics and closed
// totally geodesic hypersurfaces: stable/collar widths, the tubular
// neighborhood function c_n, tube volumes and the volume lower bounds.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypcollar/errors.hpp"
#include "hypcollar/monotone_inverse.hpp"
#include "hypcollar/quantity.hpp"
#include "hypcollar/special_functions.hpp"

namespace hypcollar {

/// Width r(l/2) of the stable neighborhood of a closed geodesic of length l.
/// For a simple geodesic this is the classical collar width.
inline Width stable_width(Length length) {
  if (!(length.value() > 0.0)) throw DomainError("geodesic length must be > 0");
  return collar_function(length / 2.0);
}

/// Radius r(d) of the embedded disc a hypersurface must contain when its
/// shortest self-orthogonal has length d.
inline Radius disc_radius_from_orthogonal(Length orthogonal) {
  if (!(orthogonal.value() > 0.0)) throw DomainError("orthogonal length must be > 0");
  return collar_function(orthogonal);
}

struct TubeWidthOptions {
  double initial_lo = 1e-12;
  double initial_hi = 60.0;
  RootOptions root{};
};

/// The n-dimensional tubular neighborhood function
///   c_n(A) = (1/2) (V_{n-1} o r)^{-1}(A),
/// i.e. the unique c > 0 with V_{n-1}(r(2c)) = A. Requires n >= 3.
inline Width tube_width(Dimension n, Area area, const TubeWidthOptions& opts = {}) {
  if (n.value() < 3) {
    throw UnsupportedDimension("tube_width requires n >= 3; in dimension 2 use stable_width");
  }
  const double a = area.value();
  if (!(a > 0.0) || std::isinf(a)) throw DomainError("tube_width requires a finite area > 0");

  const Dimension face(n.value() - 1);
  const double log_a = std::log(a);
  // Strictly decreasing in c.
  auto excess = [&](double c) { return log_ball_volume(face, collar_value(2.0 * c)) - log_a; };

  double lo = opts.initial_lo;
  double hi = opts.initial_hi;
  while (excess(lo) < 0.0) {
    if (lo < 1e-290) throw NumericalError("tube_width: area too large to bracket");
    hi = lo;
    lo *= 1e-6;
  }
  while (excess(hi) > 0.0) {
    if (hi > 1e3) throw NumericalError("tube_width: area too small to bracket");
    lo = hi;
    hi *= 4.0;
  }
  return Width(find_bracketed_root(excess, lo, hi, opts.root).root);
}

enum class Sides { one, two };

struct TubeSpec {
  Dimension n;
  Area area;
  Width width;
  bool one_sided;
};

/// Width paired with `area` in dimension n: c_n(A) for n >= 3, and for n = 2
/// (where the "area" is a geodesic length) the stable width r(l/2).
inline TubeSpec make_tube(Dimension n, Area area, Sides sides = Sides::one) {
  if (!(area.value() > 0.0) || area.is_infinite()) throw DomainError("tube area must be finite and > 0");
  const Width w = n.value() == 2 ? stable_width(Length(area.value())) : tube_width(n, area);
  return TubeSpec{n, area, w, sides == Sides::one};
}

/// Fermi-coordinate volume A * int_0^w cosh^{n-1}(t) dt, doubled for a
/// two-sided tube.
inline Volume tube_volume(const TubeSpec& tube) {
  const int m = tube.n.value() - 1;
  const double w = tube.width.value();
  double one_sided;
  if (w > 30.0) {
    one_sided = detail::checked_exp(std::log(tube.area.value()) + log_cosh_power_integral(m, w),
                                    "tube volume");
  } else {
    one_sided = tube.area.value() * cosh_power_integral(m, tube.width);
  }
  return Volume(tube.one_sided ? one_sided : 2.0 * one_sided);
}

inline Volume tube_volume(Dimension n, Area area, Sides sides = Sides::one) {
  return tube_volume(make_tube(n, area, sides));
}

/// a_3 = pi (log 2 + sqrt(2)/2), the per-surface volume constant in dimension 3.
inline const double kSurfaceVolumeConstant3 = std::numbers::pi * (std::numbers::ln2 + std::numbers::sqrt2 / 2.0);
/// The rounded per-surface constant used in the printed cusp+surface bound.
inline constexpr double kSurfaceVolumeConstant3Display = 4.4;
/// Volume contributed by one rank-two cusp.
inline const double kCuspVolumeConstant = std::numbers::sqrt3 / 4.0;

struct BoundInputs {
  long cusp_count = 0;
  long surface_count = 0;
  int dimension = 3;
};

enum class SurfaceConstant { exact, display_rounded };

/// Lower bound (sqrt3/4) * cusps + a_3 * surfaces for a hyperbolic 3-manifold.
/// Only dimension 3 has explicit constants.
inline Volume volume_lower_bound(const BoundInputs& in,
                                 SurfaceConstant constant = SurfaceConstant::exact) {
  if (in.cusp_count < 0 || in.surface_count < 0) throw DomainError("counts must be nonnegative");
  if (in.dimension != 3) {
    throw UnsupportedDimension(
        "explicit volume constants a_n are only known for n = 3 (open question: a_n for n >= 4 "
        "exist but have no formula); got n = " +
        std::to_string(in.dimension));
  }
  const double a3 = constant == SurfaceConstant::exact ? kSurfaceVolumeConstant3
                                                       : kSurfaceVolumeConstant3Display;
  return Volume(kCuspVolumeConstant * static_cast<double>(in.cusp_count) +
                a3 * static_cast<double>(in.surface_count));
}

/// Distance below which a cusp torus (shortest geodesic of length one) and a
/// closed totally geodesic surface cannot sit: log 2.
inline constexpr double cusp_surface_threshold() { return std::numbers::ln2; }

inline bool cusp_surface_separation_check(Length distance) {
  return distance.value() > cusp_surface_threshold();
}

}  // namespace hypcollar
