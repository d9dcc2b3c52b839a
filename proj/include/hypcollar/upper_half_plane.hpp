#pragma once

// Upper half-plane conveniences for H^2: boundary points of R u {inf},
// geodesics by their endpoints, the Mobius action of SL(2,R), and exact
// conversion to and from the hyperboloid model.
//
// Coordinates on the hyperboloid follow (X1, X2, X0) with X0 timelike:
//   x + iy  ->  (x/y, (|z|^2 - 1)/(2y), (|z|^2 + 1)/(2y)).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "hypcollar/errors.hpp"
#include "hypcollar/hyperboloid.hpp"
#include "hypcollar/quantity.hpp"

namespace hypcollar {

/// A point of the boundary R u {inf}; +infinity stands for the point at
/// infinity.
using BoundaryPoint = double;
inline constexpr BoundaryPoint kBoundaryInfinity = std::numeric_limits<double>::infinity();

/// Tolerance used to identify boundary points (relative above magnitude 1).
inline constexpr double kEndpointTolerance = 1e-9;

inline bool same_boundary_point(BoundaryPoint x, BoundaryPoint y, double tol = kEndpointTolerance) {
  if (std::isinf(x) || std::isinf(y)) return std::isinf(x) && std::isinf(y);
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

/// Geodesic of H^2 given by its two endpoints. The order is kept, so a
/// geodesic can carry an orientation (e.g. repelling -> attracting).
class GeodesicH2 {
 public:
  GeodesicH2(BoundaryPoint from, BoundaryPoint to) : from_(normalize(from)), to_(normalize(to)) {
    if (same_boundary_point(from_, to_)) throw DomainError("geodesic endpoints must be distinct");
  }

  [[nodiscard]] BoundaryPoint from() const { return from_; }
  [[nodiscard]] BoundaryPoint to() const { return to_; }

  /// Unoriented endpoint comparison.
  [[nodiscard]] bool same_endpoints(const GeodesicH2& o, double tol = kEndpointTolerance) const {
    return (same_boundary_point(from_, o.from_, tol) && same_boundary_point(to_, o.to_, tol)) ||
           (same_boundary_point(from_, o.to_, tol) && same_boundary_point(to_, o.from_, tol));
  }

  [[nodiscard]] bool shares_endpoint(const GeodesicH2& o, double tol = kEndpointTolerance) const {
    return same_boundary_point(from_, o.from_, tol) || same_boundary_point(from_, o.to_, tol) ||
           same_boundary_point(to_, o.from_, tol) || same_boundary_point(to_, o.to_, tol);
  }

 private:
  static BoundaryPoint normalize(BoundaryPoint x) {
    if (std::isnan(x)) throw DomainError("geodesic endpoint is NaN");
    return std::isinf(x) ? kBoundaryInfinity : x;
  }
  BoundaryPoint from_;
  BoundaryPoint to_;
};

namespace detail {
// x strictly inside the real interval between a and b (infinity counts as +inf).
inline bool strictly_between(BoundaryPoint x, BoundaryPoint a, BoundaryPoint b) {
  const double lo = std::min(a, b), hi = std::max(a, b);
  return x > lo && x < hi;
}

inline void require_no_shared_endpoint(const GeodesicH2& g1, const GeodesicH2& g2) {
  if (g1.shares_endpoint(g2)) {
    throw GeometryError("geodesics share an endpoint (asymptotic): neither crossing nor at positive distance");
  }
}
}  // namespace detail

/// True iff the endpoint pairs interleave on the boundary circle.
inline bool geodesics_cross_h2(const GeodesicH2& g1, const GeodesicH2& g2) {
  detail::require_no_shared_endpoint(g1, g2);
  const bool c_in = detail::strictly_between(g2.from(), g1.from(), g1.to());
  const bool d_in = detail::strictly_between(g2.to(), g1.from(), g1.to());
  return c_in != d_in;
}

/// Cross ratio X = (a-c)(b-d) / ((a-d)(b-c)) of the endpoints (a,b), (c,d),
/// with factors involving the point at infinity cancelled. X < 0 exactly when
/// the geodesics cross.
inline double endpoint_cross_ratio(const GeodesicH2& g1, const GeodesicH2& g2) {
  const double a = g1.from(), b = g1.to(), c = g2.from(), d = g2.to();
  if (std::isinf(a)) return (b - d) / (b - c);
  if (std::isinf(b)) return (a - c) / (a - d);
  const double first = std::isinf(c) ? 1.0 : (a - c) / (b - c);
  const double second = std::isinf(d) ? 1.0 : (b - d) / (a - d);
  return first * second;
}

/// Distance between two geodesics of H^2. For non-crossing geodesics with
/// cross ratio X > 0, tanh^2(delta/2) = min(X, 1/X). Crossing geodesics are
/// at distance 0 by convention.
inline double geodesic_distance_h2(const GeodesicH2& g1, const GeodesicH2& g2) {
  detail::require_no_shared_endpoint(g1, g2);
  if (geodesics_cross_h2(g1, g2)) return 0.0;
  const double x = endpoint_cross_ratio(g1, g2);
  const double t = std::sqrt(std::min(x, 1.0 / x));
  return 2.0 * std::atanh(t);
}

/// Whether the width-d1 and width-d2 neighborhoods of g1 and g2 meet.
/// Tangent neighborhoods do not overlap.
inline bool neighborhoods_overlap(const GeodesicH2& g1, Width d1, const GeodesicH2& g2, Width d2) {
  if (geodesics_cross_h2(g1, g2)) return true;
  return geodesic_distance_h2(g1, g2) < d1.value() + d2.value();
}

// ---- Mobius action -------------------------------------------------------

using Mat2 = Eigen::Matrix2d;

inline BoundaryPoint mobius_boundary(const Mat2& m, BoundaryPoint x) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  if (std::isinf(x)) return c == 0.0 ? kBoundaryInfinity : a / c;
  const double den = c * x + d;
  if (den == 0.0) return kBoundaryInfinity;
  return (a * x + b) / den;
}

inline std::complex<double> mobius(const Mat2& m, std::complex<double> z) {
  return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

inline GeodesicH2 apply(const Mat2& m, const GeodesicH2& g) {
  return GeodesicH2(mobius_boundary(m, g.from()), mobius_boundary(m, g.to()));
}

/// Inverse of an SL(2,R) matrix.
inline Mat2 sl2_inverse(const Mat2& m) {
  Mat2 out;
  out << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return out;
}

// ---- Conversions to the hyperboloid ---------------------------------------

inline HPoint to_hyperboloid(std::complex<double> z) {
  const double x = z.real(), y = z.imag();
  if (!(y > 0.0)) throw DomainError("upper half-plane point needs positive imaginary part");
  const double r2 = x * x + y * y;
  return HPoint::from_vector(MinkowskiVector{x / y, (r2 - 1.0) / (2.0 * y), (r2 + 1.0) / (2.0 * y)});
}

inline std::complex<double> to_upper_half_plane(const HPoint& p) {
  if (p.dimension() != 2) throw DomainError("upper half-plane conversion needs a point of H^2");
  const Eigen::VectorXd& v = p.coords();
  const double y = 1.0 / (v[2] - v[1]);
  return {v[0] * y, y};
}

/// Null vector representing a boundary point.
inline Eigen::Vector3d boundary_to_null_vector(BoundaryPoint t) {
  if (std::isinf(t)) return {0.0, 1.0, 1.0};
  return {2.0 * t, t * t - 1.0, t * t + 1.0};
}

/// The hyperplane (a geodesic of H^2) with the given endpoints; the normal of
/// the semicircle with endpoints a, b is (-(a+b), 1-ab, -(1+ab)), and of the
/// vertical line at a is (1, a, a).
inline Hyperplane to_hyperplane(const GeodesicH2& g) {
  double a = g.from(), b = g.to();
  if (std::isinf(a)) std::swap(a, b);
  Eigen::VectorXd n(3);
  if (std::isinf(b)) {
    n << 1.0, a, a;
  } else {
    n << -(a + b), 1.0 - a * b, -(1.0 + a * b);
  }
  return Hyperplane::through_normal_direction(n);
}

/// Endpoints of a geodesic of H^2 given as a hyperplane (unordered).
inline GeodesicH2 to_geodesic(const Hyperplane& h) {
  if (h.dimension() != 2) throw DomainError("to_geodesic needs a hyperplane of H^2");
  const Eigen::VectorXd& n = h.normal().coords();
  const double k = (n[1] - n[2]) / 2.0;
  const double scale = n.cwiseAbs().maxCoeff();
  if (std::abs(k) <= 1e-15 * scale) {
    return GeodesicH2(n[1] / n[0], kBoundaryInfinity);
  }
  const double sum = -n[0] / k;
  const double prod = -(n[1] + n[2]) / (2.0 * k);
  const double disc = std::sqrt(std::max(0.0, sum * sum - 4.0 * prod));
  // Stable quadratic roots of z^2 - sum z + prod.
  const double q = 0.5 * (sum + std::copysign(disc, sum));
  if (q == 0.0) return GeodesicH2(-disc / 2.0, disc / 2.0);
  return GeodesicH2(prod / q, q);
}

}  // namespace hypcollar
