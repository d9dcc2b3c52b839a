#pragma once

// Combination checker for two fuchsian subgroups with ultraparallel
// hyperplanes X1, X2: the group they generate is a free product when
//   r(inj(x1)) + r(inj(x2)) < d(X1, X2),
// x_i being the feet of the common perpendicular. Also the gluing
// separation r(R1) + r(R2) for boundary hypersurfaces built from balls.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypcollar/errors.hpp"
#include "hypcollar/hyperboloid.hpp"
#include "hypcollar/quantity.hpp"
#include "hypcollar/special_functions.hpp"

namespace hypcollar {

enum class SubgroupKind { cyclic_hyperbolic, general };

inline const char* to_string(SubgroupKind k) {
  return k == SubgroupKind::cyclic_hyperbolic ? "cyclic_hyperbolic" : "general";
}

/// Tolerance for identifying orbit points and group elements.
inline constexpr double kOrbitTolerance = 1e-9;

/// A hyperplane X together with generators of a group preserving X and each
/// of its half-spaces (every generator maps the normal u to +u).
///
/// kind = cyclic_hyperbolic requires a single generator that is a pure
/// translation along an axis in X, so that the orbit distance has a closed
/// form. Anything else must be tagged general.
class FuchsianSubgroup {
 public:
  FuchsianSubgroup(Hyperplane plane, std::vector<Isometry> generators, SubgroupKind kind)
      : plane_(std::move(plane)), generators_(std::move(generators)), kind_(kind) {
    if (generators_.empty()) throw DomainError("fuchsian subgroup needs at least one generator");
    const Eigen::VectorXd& u = plane_.normal().coords();
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const Isometry& g = generators_[i];
      if (g.dimension() != plane_.dimension()) {
        throw DomainError("generator " + std::to_string(i) + " has the wrong dimension");
      }
      const double scale = std::max(1.0, g.matrix().cwiseAbs().maxCoeff());
      const double defect = (g.apply(u) - u).cwiseAbs().maxCoeff();
      if (defect > kConstraintTolerance * scale) {
        throw DomainError("generator " + std::to_string(i) +
                          " does not preserve the hyperplane and its half-spaces (|g u - u| = " +
                          std::to_string(defect) + ")");
      }
    }
    if (kind_ == SubgroupKind::cyclic_hyperbolic) validate_cyclic();
  }

  [[nodiscard]] const Hyperplane& hyperplane() const { return plane_; }
  [[nodiscard]] const std::vector<Isometry>& generators() const { return generators_; }
  [[nodiscard]] SubgroupKind kind() const { return kind_; }
  [[nodiscard]] int dimension() const { return plane_.dimension(); }

  /// The subgroup (h X, h F h^-1).
  [[nodiscard]] FuchsianSubgroup conjugate_by(const Isometry& h) const {
    std::vector<Isometry> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) gens.push_back(g.conjugate_by(h));
    return FuchsianSubgroup(h.apply(plane_), std::move(gens), kind_);
  }

 private:
  void validate_cyclic() const {
    if (generators_.size() != 1) throw DomainError("cyclic_hyperbolic subgroup needs exactly one generator");
    const Isometry& g = generators_.front();
    const double t = translation_length(g);
    if (!(t > kConstraintTolerance)) throw DomainError("cyclic_hyperbolic generator is not loxodromic");
    // A pure translation has trace 2 cosh t + (n - 1); a rotational part
    // lowers it.
    const double expected = 2.0 * std::cosh(t) + (dimension() - 1);
    if (std::abs(g.matrix().trace() - expected) > kConstraintTolerance * std::max(1.0, expected)) {
      throw DomainError("cyclic_hyperbolic generator has a rotational part; use kind general");
    }
  }

  Hyperplane plane_;
  std::vector<Isometry> generators_;
  SubgroupKind kind_;
};

struct InjectivityRadius {
  Radius radius;
  /// True when the value is exact; truncated orbit searches only give an
  /// upper bound.
  bool certified;
};

namespace detail {

inline void require_on_hyperplane(const FuchsianSubgroup& f, const HPoint& x) {
  if (x.dimension() != f.dimension()) throw DomainError("point and subgroup have different dimensions");
  const double scale = std::max(1.0, x.coords().cwiseAbs().maxCoeff());
  if (std::abs(minkowski_inner(x.vector(), f.hyperplane().normal())) > kConstraintTolerance * scale) {
    throw DomainError("base point does not lie on the subgroup's hyperplane");
  }
}

inline bool same_matrix(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() <= kOrbitTolerance * scale * scale;
}

// Orbit point reached by a freely reduced word, with the word's matrix and
// its first letter (generator index, sign) so extensions stay reduced.
struct OrbitNode {
  HPoint point;
  Eigen::MatrixXd matrix;
  int letter;  // 0 for the empty word, otherwise +-(generator index + 1)
};

}  // namespace detail

/// Injectivity radius of F at x: half the minimal displacement d(x, g x)
/// over nontrivial g. Cyclic groups use sinh(d/2) = cosh(rho) sinh(t/2) with
/// rho = d(x, axis); the generator itself minimizes over its powers.
/// General groups search freely reduced words of length <= depth
/// breadth-first, so the result is an upper bound (certified = false) unless
/// a nontrivial element fixing x turns up, in which case it is 0 and exact.
inline InjectivityRadius injectivity_radius_at(const FuchsianSubgroup& f, const HPoint& x, int depth) {
  detail::require_on_hyperplane(f, x);
  if (depth < 1) throw DomainError("orbit search depth must be >= 1");

  if (f.kind() == SubgroupKind::cyclic_hyperbolic) {
    const LoxodromicAxis axis = loxodromic_axis(f.generators().front());
    const double half = std::asinh(cosh_distance_to_axis(x, axis) * std::sinh(axis.translation / 2.0));
    return {Radius(half), true};
  }

  const int n = f.dimension();
  std::vector<Isometry> letters;  // g_0, g_0^-1, g_1, g_1^-1, ...
  for (const auto& g : f.generators()) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }

  std::vector<detail::OrbitNode> seen{{x, Eigen::MatrixXd::Identity(n + 1, n + 1), 0}};
  std::multimap<double, std::size_t> by_cosh{{1.0, 0}};
  // Index of an already seen orbit point within tolerance of y, if any. The
  // tolerance scales with cosh d(x, y) since coordinates do.
  auto find_seen = [&](const HPoint& y, double c) -> std::optional<std::size_t> {
    const double slack = kOrbitTolerance * c;
    for (auto it = by_cosh.lower_bound(c - slack); it != by_cosh.end() && it->first <= c + slack; ++it) {
      if (point_distance(y, seen[it->second].point) <= slack) return it->second;
    }
    return std::nullopt;
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> frontier{0};
  for (int level = 1; level <= depth && !frontier.empty(); ++level) {
    std::vector<std::size_t> next;
    for (const std::size_t idx : frontier) {
      for (int k = 0; k < static_cast<int>(letters.size()); ++k) {
        const int letter = (k % 2 == 0 ? 1 : -1) * (k / 2 + 1);
        if (letter == -seen[idx].letter) continue;  // free reduction
        HPoint y = letters[k].apply(seen[idx].point);
        Eigen::MatrixXd m = letters[k].matrix() * seen[idx].matrix;
        const double c = -minkowski_inner(x.vector(), y.vector());
        if (const auto hit = find_seen(y, c)) {
          // w1 x = w2 x: w2^-1 w1 fixes x. Distinct elements mean an
          // elliptic element at x; equal ones are a relation.
          const detail::OrbitNode& other = seen[*hit];
          if (!detail::same_matrix(m, other.matrix)) return {Radius(0.0), true};
          continue;
        }
        best = std::min(best, point_distance(x, y));
        seen.push_back({std::move(y), std::move(m), letter});
        by_cosh.emplace(c, seen.size() - 1);
        next.push_back(seen.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return {best == std::numeric_limits<double>::infinity() ? Radius::infinity() : Radius(best / 2.0), false};
}

enum class CombinationVerdict { certified_free_product, boundary_case, not_certified };

inline const char* to_string(CombinationVerdict v) {
  switch (v) {
    case CombinationVerdict::certified_free_product: return "certified_free_product";
    case CombinationVerdict::boundary_case: return "boundary_case";
    case CombinationVerdict::not_certified: return "not_certified";
  }
  return "unknown";
}

/// Band around equality reported as boundary_case.
inline constexpr double kBoundaryBand = 1e-9;

struct CombinationReport {
  Length d;
  std::pair<HPoint, HPoint> feet;
  std::pair<Radius, Radius> inj;
  std::pair<bool, bool> inj_certified;
  Length lhs;
  CombinationVerdict verdict;
  /// d - lhs; -inf when a radius is 0.
  double margin;
  /// Distance between the boundary hypersurfaces of the quotient, equal to d.
  Length boundary_distance;
  int depth;
  std::string reason;
};

struct CombinationOptions {
  double boundary_band = kBoundaryBand;
};

namespace detail {
// r extended to [0, inf]: r(0) = inf, r(inf) = 0.
inline double collar_extended(Radius x) {
  if (x.value() == 0.0) return std::numeric_limits<double>::infinity();
  return collar_value(x.value());
}
}  // namespace detail

inline CombinationReport check_combination(const FuchsianSubgroup& f1, const FuchsianSubgroup& f2, int depth,
                                           const CombinationOptions& opts = {}) {
  if (f1.dimension() != f2.dimension()) throw DomainError("subgroups live in different dimensions");
  const HyperplanePair pair = hyperplane_distance(f1.hyperplane(), f2.hyperplane());
  if (pair.relation != HyperplaneRelation::ultraparallel) {
    throw GeometryError(std::string("hyperplanes must be ultraparallel, they are ") +
                        (pair.relation == HyperplaneRelation::intersecting ? "intersecting" : "asymptotic"));
  }
  PerpendicularFeet feet = common_perpendicular_feet(f1.hyperplane(), f2.hyperplane());
  const InjectivityRadius i1 = injectivity_radius_at(f1, feet.first, depth);
  const InjectivityRadius i2 = injectivity_radius_at(f2, feet.second, depth);
  const double lhs = detail::collar_extended(i1.radius) + detail::collar_extended(i2.radius);
  const double d = feet.distance;
  const double margin = d - lhs;

  CombinationVerdict verdict = CombinationVerdict::not_certified;
  std::string reason;
  if (std::abs(margin) <= opts.boundary_band) {
    verdict = CombinationVerdict::boundary_case;
    reason = "r(inj1) + r(inj2) equals d within the boundary band";
  } else if (margin < 0.0) {
    reason = "r(inj1) + r(inj2) exceeds d";
  } else if (!i1.certified || !i2.certified) {
    reason = "injectivity radius from a truncated orbit search is only an upper bound";
  } else {
    verdict = CombinationVerdict::certified_free_product;
  }
  return {Length(d),
          {std::move(feet.first), std::move(feet.second)},
          {i1.radius, i2.radius},
          {i1.certified, i2.certified},
          Length(lhs),
          verdict,
          margin,
          Length(d),
          depth,
          std::move(reason)};
}

/// Two boundary hypersurfaces obtained by gluing around embedded balls of
/// radii R1, R2 end up at distance r(R1) + r(R2).
struct GluingSpec {
  std::pair<Radius, Radius> radii;
  Length separation;
  std::string description;
};

/// Radii must be positive; +infinity is accepted (r = 0).
inline GluingSpec gluing_separation(Radius r1, Radius r2) {
  if (!(r1.value() > 0.0) || !(r2.value() > 0.0)) throw DomainError("ball radii must be > 0");
  const double s = detail::collar_extended(r1) + detail::collar_extended(r2);
  return {{r1, r2},
          Length(s),
          "Sigma1 and Sigma2 are totally geodesic boundary hypersurfaces of the glued manifold N, "
          "at distance r(R1) + r(R2), where N contains embedded balls of radii R1 and R2"};
}

}  // namespace hypcollar
