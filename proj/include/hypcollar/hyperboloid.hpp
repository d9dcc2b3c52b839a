#pragma once

// Hyperboloid model of H^n inside R^{n,1}: the last coordinate is the
// timelike one, <u, v> = u_1 v_1 + ... + u_n v_n - u_{n+1} v_{n+1}.
// Points live on the upper sheet <x, x> = -1, hyperplanes are described by a
// unit spacelike normal, isometries by matrices preserving the form and the
// upper sheet.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include "hypcollar/errors.hpp"

namespace hypcollar {

/// Tolerance for all constraint checks (normalization, form preservation).
inline constexpr double kConstraintTolerance = 1e-9;
/// Inputs needing a larger normalization correction than this are rejected.
inline constexpr double kRenormalizationLimit = 1e-6;

class MinkowskiVector {
 public:
  MinkowskiVector() = default;
  explicit MinkowskiVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {
    if (coords_.size() < 3) throw DomainError("Minkowski vectors need at least 3 coordinates (n >= 2)");
    if (!coords_.allFinite()) throw DomainError("Minkowski vector has non-finite entries");
  }
  MinkowskiVector(std::initializer_list<double> values)
      : MinkowskiVector(Eigen::Map<const Eigen::VectorXd>(values.begin(), static_cast<Eigen::Index>(values.size()))) {}

  /// n for a vector of R^{n,1}.
  [[nodiscard]] int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  [[nodiscard]] const Eigen::VectorXd& coords() const { return coords_; }
  [[nodiscard]] double operator[](Eigen::Index i) const { return coords_[i]; }
  [[nodiscard]] double time() const { return coords_[coords_.size() - 1]; }

  friend MinkowskiVector operator-(const MinkowskiVector& v) { return MinkowskiVector(Eigen::VectorXd(-v.coords_)); }

 private:
  Eigen::VectorXd coords_;
};

inline double minkowski_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size()) {
    throw DomainError("dimension mismatch in Minkowski form: " + std::to_string(u.size()) + " vs " +
                      std::to_string(v.size()));
  }
  const Eigen::Index last = u.size() - 1;
  return u.head(last).dot(v.head(last)) - u[last] * v[last];
}

/// The signature-(n,1) bilinear form.
inline double minkowski_inner(const MinkowskiVector& u, const MinkowskiVector& v) {
  return minkowski_inner(u.coords(), v.coords());
}

/// Point of H^n on the upper sheet of the hyperboloid.
class HPoint {
 public:
  /// Validates <x,x> = -1 (rescaling away drift up to `limit`) and last
  /// coordinate > 0.
  static HPoint from_vector(const MinkowskiVector& v, double limit = kRenormalizationLimit) {
    const double q = minkowski_inner(v, v);
    if (!(q < 0.0) || v.time() <= 0.0) throw DomainError("vector is not on the upper sheet of the hyperboloid");
    const double scale = std::sqrt(-q);
    if (std::abs(scale - 1.0) > limit) {
      throw DomainError("point violates <x,x> = -1 by more than the renormalization limit");
    }
    return HPoint(MinkowskiVector(Eigen::VectorXd(v.coords() / scale)));
  }

  /// Lifts x in R^n to (x, sqrt(1 + |x|^2)).
  static HPoint from_spatial(const Eigen::VectorXd& x) {
    Eigen::VectorXd v(x.size() + 1);
    v.head(x.size()) = x;
    v[x.size()] = std::sqrt(1.0 + x.squaredNorm());
    return HPoint(MinkowskiVector(std::move(v)));
  }

  static HPoint origin(int n) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n + 1);
    v[n] = 1.0;
    return HPoint(MinkowskiVector(std::move(v)));
  }

  [[nodiscard]] const MinkowskiVector& vector() const { return v_; }
  [[nodiscard]] const Eigen::VectorXd& coords() const { return v_.coords(); }
  [[nodiscard]] int dimension() const { return v_.dimension(); }

 private:
  explicit HPoint(MinkowskiVector v) : v_(std::move(v)) {}
  MinkowskiVector v_;
};

/// Totally geodesic hyperplane {x : <x, u> = 0}, u a unit spacelike normal.
/// The normal's sign selects one of the two half-spaces.
class Hyperplane {
 public:
  static Hyperplane from_normal(const MinkowskiVector& u) {
    const double q = minkowski_inner(u, u);
    if (!(q > 0.0)) throw DomainError("hyperplane normal must be spacelike");
    const double scale = std::sqrt(q);
    if (std::abs(scale - 1.0) > kRenormalizationLimit) {
      throw DomainError("hyperplane normal violates <u,u> = 1 by more than the renormalization limit");
    }
    return Hyperplane(MinkowskiVector(Eigen::VectorXd(u.coords() / scale)));
  }

  /// Normalizes any spacelike vector.
  static Hyperplane through_normal_direction(const Eigen::VectorXd& u) {
    const double q = minkowski_inner(u, u);
    if (!(q > 0.0)) throw DomainError("hyperplane normal must be spacelike");
    return Hyperplane(MinkowskiVector(Eigen::VectorXd(u / std::sqrt(q))));
  }

  [[nodiscard]] const MinkowskiVector& normal() const { return u_; }
  [[nodiscard]] int dimension() const { return u_.dimension(); }

  [[nodiscard]] bool contains(const HPoint& x, double tol = kConstraintTolerance) const {
    return std::abs(minkowski_inner(x.vector(), u_)) <= tol;
  }

 private:
  explicit Hyperplane(MinkowskiVector u) : u_(std::move(u)) {}
  MinkowskiVector u_;
};

inline Eigen::MatrixXd minkowski_metric(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(n + 1, n + 1);
  j(n, n) = -1.0;
  return j;
}

/// Element of Isom(H^n) as an (n+1)x(n+1) matrix M with M^T J M = J and
/// M(n,n) > 0.
class Isometry {
 public:
  /// The form check is relative to max(1, |M|_max^2), the scale at which
  /// roundoff in the entries shows up in M^T J M.
  static Isometry from_matrix(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() < 3) throw DomainError("isometry matrix must be square of size >= 3");
    if (!m.allFinite()) throw DomainError("isometry matrix has non-finite entries");
    const int n = static_cast<int>(m.rows()) - 1;
    const Eigen::MatrixXd j = minkowski_metric(n);
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double defect = (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
    if (defect > kConstraintTolerance * scale * scale) {
      throw DomainError("matrix does not preserve the Minkowski form (defect " + std::to_string(defect) + ")");
    }
    if (m(n, n) <= 0.0) throw DomainError("matrix does not preserve the upper sheet");
    return Isometry(m);
  }

  static Isometry identity(int n) { return Isometry(Eigen::MatrixXd::Identity(n + 1, n + 1)); }

  /// Translation by distance s along the geodesic through the origin in the
  /// direction of spatial axis `axis`.
  static Isometry translation(int n, int axis, double s) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
    m(axis, axis) = std::cosh(s);
    m(axis, n) = std::sinh(s);
    m(n, axis) = std::sinh(s);
    m(n, n) = std::cosh(s);
    return Isometry(std::move(m));
  }

  /// Rotation by angle theta in the spatial (i, j) plane, fixing the origin.
  static Isometry rotation(int n, int i, int j, double theta) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
    m(i, i) = std::cos(theta);
    m(i, j) = -std::sin(theta);
    m(j, i) = std::sin(theta);
    m(j, j) = std::cos(theta);
    return Isometry(std::move(m));
  }

  [[nodiscard]] const Eigen::MatrixXd& matrix() const { return m_; }
  [[nodiscard]] int dimension() const { return static_cast<int>(m_.rows()) - 1; }

  /// Lorentz inverse J M^T J.
  [[nodiscard]] Isometry inverse() const {
    const Eigen::MatrixXd j = minkowski_metric(dimension());
    return Isometry(j * m_.transpose() * j);
  }

  friend Isometry operator*(const Isometry& a, const Isometry& b) {
    if (a.dimension() != b.dimension()) throw DomainError("composing isometries of different dimensions");
    return Isometry(a.m_ * b.m_);
  }

  /// Image of a point; roundoff drift off the hyperboloid is renormalized.
  [[nodiscard]] HPoint apply(const HPoint& x) const {
    return HPoint::from_vector(MinkowskiVector(Eigen::VectorXd(m_ * x.coords())),
                               std::numeric_limits<double>::infinity());
  }
  [[nodiscard]] Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return m_ * v; }
  [[nodiscard]] Hyperplane apply(const Hyperplane& h) const {
    return Hyperplane::through_normal_direction(m_ * h.normal().coords());
  }
  [[nodiscard]] Isometry conjugate_by(const Isometry& h) const { return h * (*this) * h.inverse(); }

 private:
  explicit Isometry(Eigen::MatrixXd m) : m_(std::move(m)) {}
  Eigen::MatrixXd m_;
};

/// Hyperbolic distance arccosh(-<p,q>), evaluated as 2 asinh(|p-q|/2) when
/// the points are close.
inline double point_distance(const HPoint& p, const HPoint& q) {
  const double c = -minkowski_inner(p.vector(), q.vector());
  if (c < 1.0 - kConstraintTolerance) {
    throw DomainError("invalid points: -<p,q> = " + std::to_string(c) + " < 1");
  }
  if (c < 2.0) {
    const Eigen::VectorXd diff = p.coords() - q.coords();
    const double chord2 = std::max(0.0, minkowski_inner(diff, diff));
    return 2.0 * std::asinh(std::sqrt(chord2) / 2.0);
  }
  return std::acosh(c);
}

enum class HyperplaneRelation { intersecting, asymptotic, ultraparallel };

struct HyperplanePair {
  HyperplaneRelation relation;
  /// |<u1,u2>|; cosh of the distance when ultraparallel.
  double abs_inner;
  /// Distance between the hyperplanes, 0 unless ultraparallel.
  double distance;
};

namespace detail {
inline bool same_up_to_sign(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  const double tol = kConstraintTolerance * scale;
  return (a - b).cwiseAbs().maxCoeff() <= tol || (a + b).cwiseAbs().maxCoeff() <= tol;
}
}  // namespace detail

/// Classifies two hyperplanes by c = |<u1,u2>|: c < 1 intersecting,
/// |c - 1| <= 1e-9 asymptotic, c > 1 ultraparallel at distance arccosh(c).
/// Identical hyperplanes are rejected as degenerate.
inline HyperplanePair hyperplane_distance(const Hyperplane& x1, const Hyperplane& x2) {
  if (detail::same_up_to_sign(x1.normal().coords(), x2.normal().coords())) {
    throw GeometryError("degenerate input: the two hyperplanes coincide");
  }
  const double c = std::abs(minkowski_inner(x1.normal(), x2.normal()));
  if (std::abs(c - 1.0) <= kConstraintTolerance) return {HyperplaneRelation::asymptotic, c, 0.0};
  if (c < 1.0) return {HyperplaneRelation::intersecting, c, 0.0};
  return {HyperplaneRelation::ultraparallel, c, std::acosh(c)};
}

struct PerpendicularFeet {
  HPoint first;   // on the first hyperplane
  HPoint second;  // on the second hyperplane
  double distance;
};

/// Endpoints of the unique common perpendicular of two ultraparallel
/// hyperplanes. The perpendicular lies in span(u1, u2); with
/// <u1,u2> = sigma cosh d the feet are (u2 - sigma cosh d u1) / sinh d and
/// (u1 - sigma cosh d u2) / sinh d up to sign.
inline PerpendicularFeet common_perpendicular_feet(const Hyperplane& x1, const Hyperplane& x2) {
  const HyperplanePair pair = hyperplane_distance(x1, x2);
  if (pair.relation != HyperplaneRelation::ultraparallel) {
    throw GeometryError(pair.relation == HyperplaneRelation::asymptotic
                            ? "asymptotic hyperplanes have no common perpendicular"
                            : "intersecting hyperplanes have no common perpendicular");
  }
  const Eigen::VectorXd& u1 = x1.normal().coords();
  const Eigen::VectorXd& u2 = x2.normal().coords();
  const double inner = minkowski_inner(u1, u2);
  const double sh = std::sinh(pair.distance);
  auto foot = [&](const Eigen::VectorXd& own, const Eigen::VectorXd& other) {
    Eigen::VectorXd v = (other - inner * own) / sh;
    if (v[v.size() - 1] < 0.0) v = -v;
    return HPoint::from_vector(MinkowskiVector(std::move(v)));
  };
  return {foot(u1, u2), foot(u2, u1), pair.distance};
}

/// log of the eigenvalue of largest modulus, which must be real and > 1.
inline double translation_length(const Isometry& g) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(g.matrix(), false);
  const auto& ev = solver.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i)
    if (std::abs(ev[i]) > std::abs(ev[best])) best = i;
  const std::complex<double> lambda = ev[best];
  if (std::abs(lambda) <= 1.0 + kConstraintTolerance) {
    throw GeometryError("isometry is not loxodromic (no eigenvalue of modulus > 1)");
  }
  return std::log(std::abs(lambda));
}

/// Invariant axis of a loxodromic isometry, given by the future-pointing null
/// eigenvectors for e^{t} (attracting) and e^{-t} (repelling).
struct LoxodromicAxis {
  Eigen::VectorXd attracting;
  Eigen::VectorXd repelling;
  double translation;
};

inline LoxodromicAxis loxodromic_axis(const Isometry& g) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(g.matrix(), true);
  const auto& ev = solver.eigenvalues();
  Eigen::Index hi = 0, lo = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    if (std::abs(ev[i]) > std::abs(ev[hi])) hi = i;
    if (std::abs(ev[i]) < std::abs(ev[lo])) lo = i;
  }
  if (std::abs(ev[hi]) <= 1.0 + kConstraintTolerance) {
    throw GeometryError("isometry is not loxodromic (no eigenvalue of modulus > 1)");
  }
  auto future = [&](Eigen::Index k) {
    Eigen::VectorXd v = solver.eigenvectors().col(k).real();
    if (v[v.size() - 1] < 0.0) v = -v;
    return Eigen::VectorXd(v / v[v.size() - 1]);
  };
  return {future(hi), future(lo), std::log(std::abs(ev[hi]))};
}

/// cosh of the distance from x to the axis spanned by null vectors e+, e-:
/// cosh^2 rho = -2 <x,e+><x,e-> / <e+,e->.
inline double cosh_distance_to_axis(const HPoint& x, const LoxodromicAxis& axis) {
  const Eigen::VectorXd& xv = x.coords();
  const double num = -2.0 * minkowski_inner(xv, axis.attracting) * minkowski_inner(xv, axis.repelling);
  const double den = minkowski_inner(axis.attracting, axis.repelling);
  return std::sqrt(std::max(1.0, num / den));
}

inline double distance_to_axis(const HPoint& x, const LoxodromicAxis& axis) {
  return std::acosh(cosh_distance_to_axis(x, axis));
}

}  // namespace hypcollar
