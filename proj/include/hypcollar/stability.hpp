#pragma once

// Finite checks of the stable-neighborhood property for a closed geodesic of
// an upper half-plane group: two lifts cross iff their width-w neighborhoods
// meet. Every check runs over lifts g . axis with g a freely reduced word of
// bounded length, so results hold up to that truncation depth only.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypcollar/collar_tube.hpp"
#include "hypcollar/errors.hpp"
#include "hypcollar/surface_group.hpp"
#include "hypcollar/upper_half_plane.hpp"

namespace hypcollar {

/// A lift g . axis of a closed geodesic, with the first g (breadth-first
/// order) that produced it.
struct Lift {
  GeodesicH2 axis;
  std::vector<Letter> element;
  Mat2 matrix;

  [[nodiscard]] std::string label() const { return element.empty() ? std::string("1") : letters_to_string(element); }
};

namespace detail {

// Freely reduced words of length <= depth in breadth-first order (length,
// then letters a, A, b, B, ...), extended on the right.
template <class Visit>
void for_each_reduced_element(const SurfaceGroupData& group, int depth, Visit&& visit) {
  struct Node {
    std::vector<Letter> letters;
    Mat2 matrix;
  };
  std::vector<Node> level{{{}, Mat2::Identity()}};
  visit(level.front().letters, level.front().matrix);
  for (int len = 1; len <= depth; ++len) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (int g = 0; g < group.size(); ++g) {
        for (const int e : {1, -1}) {
          const Letter l{g, e};
          if (!node.letters.empty() && node.letters.back() == l.inverse()) continue;
          Node child{node.letters, node.matrix * letter_matrix(group, l)};
          child.letters.push_back(l);
          visit(child.letters, child.matrix);
          next.push_back(std::move(child));
        }
      }
    }
    level = std::move(next);
  }
}

// Geodesics indexed by their smaller endpoint for tolerance lookups.
class GeodesicIndex {
 public:
  [[nodiscard]] bool contains(const GeodesicH2& g) const {
    const double lo = std::min(g.from(), g.to());
    const double slack = kEndpointTolerance * std::max(1.0, std::abs(lo));
    for (auto it = by_lo_.lower_bound(lo - slack); it != by_lo_.end() && it->first <= lo + slack; ++it) {
      if (it->second.same_endpoints(g)) return true;
    }
    return false;
  }
  void insert(const GeodesicH2& g) { by_lo_.emplace(std::min(g.from(), g.to()), g); }

 private:
  std::multimap<double, GeodesicH2> by_lo_;
};

}  // namespace detail

/// Lifts g . axis for freely reduced g with |g| <= depth, without repeats
/// (g and g w^k give the same lift). The first entry is the axis itself.
inline std::vector<Lift> enumerate_lifts(const SurfaceGroupData& group, const ClosedGeodesicH2& geodesic, int depth) {
  if (depth < 0) throw DomainError("lift depth must be >= 0");
  std::vector<Lift> lifts;
  detail::GeodesicIndex index;
  detail::for_each_reduced_element(group, depth, [&](const std::vector<Letter>& g, const Mat2& m) {
    GeodesicH2 axis = apply(m, geodesic.axis);
    if (index.contains(axis)) return;
    index.insert(axis);
    lifts.push_back({std::move(axis), g, m});
  });
  return lifts;
}

struct StabilityViolation {
  std::size_t first;
  std::size_t second;
  bool crossing;
  bool overlap;
};

struct StabilityReport {
  Width width;
  int truncation_depth;
  std::vector<Lift> lifts;
  std::size_t pairs_checked = 0;
  std::size_t crossing_pairs = 0;
  /// Pairs whose crossing and overlap disagree, in (first, second) order.
  std::vector<StabilityViolation> violations;
};

namespace detail {
// Crossing and overlap of two lifts. Lifts sharing an endpoint (only
// possible numerically) count as non-crossing but overlapping.
inline std::pair<bool, bool> crossing_and_overlap(const GeodesicH2& g1, const GeodesicH2& g2, Width w1, Width w2) {
  if (g1.shares_endpoint(g2)) return {false, true};
  return {geodesics_cross_h2(g1, g2), neighborhoods_overlap(g1, w1, g2, w2)};
}
}  // namespace detail

/// Checks every unordered pair of lifts up to `depth`: a pair violates
/// stability when exactly one of "the lifts cross" and "the width
/// neighborhoods meet" holds.
inline StabilityReport verify_stability(const SurfaceGroupData& group, const ClosedGeodesicH2& geodesic, Width width,
                                        int depth) {
  if (!(width.value() > 0.0)) throw DomainError("stability width must be > 0");
  StabilityReport rep{width, depth, enumerate_lifts(group, geodesic, depth), 0, 0, {}};
  const auto& lifts = rep.lifts;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    for (std::size_t j = i + 1; j < lifts.size(); ++j) {
      const auto [cross, overlap] = detail::crossing_and_overlap(lifts[i].axis, lifts[j].axis, width, width);
      ++rep.pairs_checked;
      if (cross) ++rep.crossing_pairs;
      if (cross != overlap) rep.violations.push_back({i, j, cross, overlap});
    }
  }
  return rep;
}

/// Width r(l/2) at which the neighborhood of a closed geodesic of length l
/// is stable.
inline Width stable_width(const ClosedGeodesicH2& geodesic) { return stable_width(geodesic.length); }

namespace detail {

// Mobius map (as a 2x2 matrix, any determinant) sending the axis to (0, inf)
// with the repelling end at 0.
inline Mat2 normalizing_map(const GeodesicH2& axis) {
  const double p = axis.from(), q = axis.to();
  Mat2 t;
  if (std::isinf(q)) {
    t << 1.0, -p, 0.0, 1.0;
  } else if (std::isinf(p)) {
    t << 0.0, -1.0, 1.0, -q;
  } else {
    t << 1.0, -p, 1.0, -q;
  }
  return t;
}

inline Mat2 adjugate(const Mat2& m) {
  Mat2 a;
  a << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return a;
}

inline double circle_distance(double a, double b, double period) {
  const double d = std::abs(a - b);
  return std::min(d, period - d);
}

inline double wrap(double s, double period) {
  double r = std::fmod(s, period);
  if (r < 0.0) r += period;
  return r;
}

}  // namespace detail

/// Parameters of crossing points closer than this (mod the length) are
/// identified. Positions from deep lifts carry roundoff near 1e-8, well below
/// any separation between distinct double points of a closed geodesic.
inline constexpr double kCrossingPositionTolerance = 1e-6;

/// A transverse double point of the closed geodesic, given by the two
/// parameters (mod length) at which the curve passes through it.
struct DoublePoint {
  double first;
  double second;
  std::string element;  // g with the double point on axis and g . axis
};

/// Double points found among the lifts up to `depth`. Each crossing of the
/// base axis A with a lift gA sits at some parameter s1 on A; applying g^-1
/// moves it to A again at s2. The pair {s1, s2} mod the length identifies a
/// self-intersection, so crossings are counted once per pair. The word is
/// taken to be primitive.
inline std::vector<DoublePoint> double_points(const SurfaceGroupData& group, const ClosedGeodesicH2& geodesic,
                                              int depth) {
  if (depth < 1) throw DomainError("self-intersection depth must be >= 1");
  const double ell = geodesic.length.value();
  const double tol = kCrossingPositionTolerance;
  const Mat2 t = detail::normalizing_map(geodesic.axis);
  const Mat2 t_inv = detail::adjugate(t);
  std::vector<DoublePoint> found;
  auto known = [&](double s1, double s2) {
    for (const auto& d : found) {
      const bool same = detail::circle_distance(d.first, s1, ell) <= tol && detail::circle_distance(d.second, s2, ell) <= tol;
      const bool swapped = detail::circle_distance(d.first, s2, ell) <= tol && detail::circle_distance(d.second, s1, ell) <= tol;
      if (same || swapped) return true;
    }
    return false;
  };
  const auto lifts = enumerate_lifts(group, geodesic, depth);
  for (std::size_t i = 1; i < lifts.size(); ++i) {
    const Lift& lift = lifts[i];
    if (lift.axis.shares_endpoint(geodesic.axis)) continue;
    const double p = mobius_boundary(t, lift.axis.from()), q = mobius_boundary(t, lift.axis.to());
    if (!(p * q < 0.0)) continue;
    const double y = std::sqrt(-p * q);
    const std::complex<double> crossing = mobius(t_inv, std::complex<double>(0.0, y));
    const std::complex<double> back = mobius(t, mobius(sl2_inverse(lift.matrix), crossing));
    const double s1 = detail::wrap(std::log(y), ell);
    const double s2 = detail::wrap(std::log(std::abs(back)), ell);
    if (known(s1, s2)) continue;
    found.push_back({s1, s2, lift.label()});
  }
  return found;
}

/// Lower bound for the self-intersection number: the number of distinct
/// double points visible among lifts up to `depth`. Nondecreasing in depth.
inline int self_intersection_lower_bound(const SurfaceGroupData& group, const ClosedGeodesicH2& geodesic, int depth) {
  return static_cast<int>(double_points(group, geodesic, depth).size());
}

/// Representative of the conjugacy class of w and w^-1 (unoriented closed
/// curve): least string among all rotations of w and w^-1.
inline Word unoriented_canonical(const Word& w) {
  const Word a = w.canonical(), b = w.inverse().canonical();
  return b.to_string() < a.to_string() ? b : a;
}

/// All primitive, cyclically reduced words of length 1..max_length, one per
/// unoriented conjugacy class, in (length, string) order.
inline std::vector<Word> enumerate_closed_curves(int generator_count, int max_length) {
  std::vector<Word> out;
  std::vector<std::vector<Letter>> level{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : level) {
      for (int g = 0; g < generator_count; ++g) {
        for (const int e : {1, -1}) {
          const Letter l{g, e};
          if (!w.empty() && w.back() == l.inverse()) continue;
          auto child = w;
          child.push_back(l);
          next.push_back(std::move(child));
        }
      }
    }
    std::vector<Word> at_length;
    for (const auto& letters : next) {
      if (letters.size() > 1 && letters.front() == letters.back().inverse()) continue;
      const Word w(letters);
      if (!w.is_primitive()) continue;
      if (unoriented_canonical(w).to_string() != w.to_string()) continue;
      at_length.push_back(w);
    }
    std::sort(at_length.begin(), at_length.end(),
              [](const Word& a, const Word& b) { return a.to_string() < b.to_string(); });
    out.insert(out.end(), at_length.begin(), at_length.end());
    level = std::move(next);
  }
  return out;
}

struct TrendRow {
  int self_intersections;
  Length min_length;
  std::string shortest_word;
  int curves;  // number of enumerated classes in this bin
};

/// Closed curves up to max_word_length binned by their self-intersection
/// lower bound, with the shortest length seen in each bin. Non-hyperbolic
/// words are skipped. Bins without curves are omitted.
inline std::vector<TrendRow> self_intersection_trend(const SurfaceGroupData& group, int max_word_length, int depth) {
  if (max_word_length < 1 || depth < 1) throw DomainError("trend bounds must be >= 1");
  std::map<int, TrendRow> bins;
  for (const Word& w : enumerate_closed_curves(group.size(), max_word_length)) {
    if (!(std::abs(word_matrix(group, w).trace()) > 2.0 + kDeterminantTolerance)) continue;
    const ClosedGeodesicH2 geo = geodesic_from_word(group, w);
    const int k = self_intersection_lower_bound(group, geo, depth);
    auto [it, inserted] = bins.try_emplace(k, TrendRow{k, geo.length, w.to_string(), 0});
    TrendRow& row = it->second;
    ++row.curves;
    if (geo.length < row.min_length) {
      row.min_length = geo.length;
      row.shortest_word = w.to_string();
    }
  }
  std::vector<TrendRow> out;
  for (auto& [k, row] : bins) out.push_back(std::move(row));
  return out;
}

struct SeparatedPairReport {
  /// False when the caller did not assert separation; nothing is checked.
  bool checked;
  Width first_width;
  Width second_width;
  int truncation_depth;
  std::size_t pairs_checked = 0;
  /// (lift of first, lift of second) whose neighborhoods meet.
  std::vector<std::pair<std::string, std::string>> overlapping;
};

/// Disjointness of the stable neighborhoods (widths r(l1/2), r(l2/2)) of two
/// disjoint closed geodesics across lift pairs up to `depth`. Only
/// meaningful, and only run, when the caller asserts the two are separated
/// by a disjoint union of simple closed geodesics; disjointness alone does
/// not imply it.
inline SeparatedPairReport check_separated_pair(const SurfaceGroupData& group, const ClosedGeodesicH2& first,
                                                const ClosedGeodesicH2& second, int depth, bool asserted_separated) {
  SeparatedPairReport rep{asserted_separated, stable_width(first.length), stable_width(second.length), depth, 0, {}};
  if (!asserted_separated) return rep;
  const auto l1 = enumerate_lifts(group, first, depth);
  const auto l2 = enumerate_lifts(group, second, depth);
  for (const auto& a : l1) {
    for (const auto& b : l2) {
      ++rep.pairs_checked;
      const auto [cross, overlap] = detail::crossing_and_overlap(a.axis, b.axis, rep.first_width, rep.second_width);
      if (cross || overlap) rep.overlapping.emplace_back(a.label(), b.label());
    }
  }
  return rep;
}

}  // namespace hypcollar
