#pragma once

// Collar function, unit-sphere areas, hyperbolic ball volumes and the
// power integrals of sinh/cosh they are built from.
//
// The power integrals are evaluated with exact integration-by-parts
// recurrences carried in e^{-mT}-scaled form, so every quantity is also
// available in log space without overflow. Small arguments of the sinh
// integral switch to a termwise-integrated power series, where the
// recurrence would subtract nearly equal terms.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hypcollar/errors.hpp"
#include "hypcollar/quantity.hpp"

namespace hypcollar {

namespace detail {

inline constexpr double kCollarSmallCrossover = 1e-3;
inline constexpr double kCollarLargeCrossover = 20.0;
inline const double kLogMaxDouble = std::log(std::numeric_limits<double>::max());

inline void require_integral_args(int m, double t) {
  if (m < 0) throw DomainError("power integral exponent must be >= 0, got " + std::to_string(m));
  if (!(t >= 0.0) || std::isinf(t)) {
    throw DomainError("power integral upper limit must be finite and >= 0");
  }
}

/// Coefficients of (sinh(t)/t)^m as a polynomial in t^2, truncated to `terms`.
inline std::vector<double> sinhc_power_series(int m, std::size_t terms) {
  std::vector<double> base(terms);
  double fact = 1.0;  // (2k+1)!
  for (std::size_t k = 0; k < terms; ++k) {
    if (k > 0) fact *= static_cast<double>((2 * k) * (2 * k + 1));
    base[k] = 1.0 / fact;
  }
  std::vector<double> out(terms, 0.0);
  out[0] = 1.0;
  for (int p = 0; p < m; ++p) {
    std::vector<double> next(terms, 0.0);
    for (std::size_t i = 0; i < terms; ++i) {
      if (out[i] == 0.0) continue;
      for (std::size_t j = 0; i + j < terms; ++j) next[i + j] += out[i] * base[j];
    }
    out.swap(next);
  }
  return out;
}

// Series branch is used when every term ratio is bounded by (m T^2 / 6) <= 2/3.
inline bool sinh_series_applies(int m, double t) {
  return t < 1.0 && t * t * std::max(m, 1) <= 4.0;
}

inline double log_sinh_power_series(int m, double t) {
  constexpr std::size_t kTerms = 40;
  const auto coeffs = sinhc_power_series(m, kTerms);
  const double u = t * t;
  double sum = 0.0;
  double upow = 1.0;
  for (std::size_t k = 0; k < kTerms; ++k) {
    sum += coeffs[k] * upow / static_cast<double>(m + 2 * static_cast<int>(k) + 1);
    upow *= u;
  }
  return (m + 1) * std::log(t) + std::log(sum);
}

// Scaled integrals I_m(T) * e^{-mT}; both recurrences start from m = 0, 1.
inline double scaled_sinh_power_integral(int m, double t) {
  const double e2 = std::exp(-2.0 * t);
  const double s = -std::expm1(-2.0 * t) / 2.0;  // sinh(T) e^{-T}
  const double c = (1.0 + e2) / 2.0;             // cosh(T) e^{-T}
  const double em1 = std::expm1(-t);
  double even = t;                  // m = 0
  double odd = em1 * em1 / 2.0;     // m = 1: (cosh T - 1) e^{-T}
  if (m == 0) return even;
  if (m == 1) return odd;
  double prev = (m % 2 == 0) ? even : odd;
  for (int k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2) {
    const double kk = static_cast<double>(k);
    prev = std::pow(s, k - 1) * c / kk - (kk - 1.0) / kk * e2 * prev;
  }
  return prev;
}

inline double scaled_cosh_power_integral(int m, double t) {
  const double e2 = std::exp(-2.0 * t);
  const double s = -std::expm1(-2.0 * t) / 2.0;
  const double c = (1.0 + e2) / 2.0;
  if (m == 0) return t;
  if (m == 1) return s;
  double prev = (m % 2 == 0) ? t : s;
  for (int k = (m % 2 == 0) ? 2 : 3; k <= m; k += 2) {
    const double kk = static_cast<double>(k);
    prev = std::pow(c, k - 1) * s / kk + (kk - 1.0) / kk * e2 * prev;
  }
  return prev;
}

inline double checked_exp(double log_value, const char* what) {
  if (log_value > kLogMaxDouble) {
    throw OverflowError(std::string(what) + " exceeds the representable range (log value " +
                        std::to_string(log_value) + ")");
  }
  return std::exp(log_value);
}

}  // namespace detail

/// r(x) = log coth(x/2) on raw doubles. Accepts x = +inf (returns 0).
inline double collar_value(double x) {
  if (std::isnan(x) || x <= 0.0) {
    throw DomainError("collar function requires x > 0, got " + std::to_string(x));
  }
  if (std::isinf(x)) return 0.0;
  if (x < detail::kCollarSmallCrossover) {
    const double x2 = x * x;
    return -std::log(x / 2.0) + x2 / 12.0 - 7.0 * x2 * x2 / 1440.0;
  }
  const double q = std::exp(-x);
  if (x > detail::kCollarLargeCrossover) {
    return 2.0 * (q + q * q * q / 3.0);
  }
  if (x > 1.0) return 2.0 * std::atanh(q);
  return std::log1p(q) - std::log(-std::expm1(-x));
}

/// The collar function r(x) = log coth(x/2). Strictly decreasing, tends to 0
/// at infinity, and is an involution on (0, inf).
inline Width collar_function(Length x) { return Width(collar_value(x.value())); }

/// Gamma(k/2) for integer k >= 1, by recurrence from Gamma(1/2) and Gamma(1).
inline double gamma_half_integer(int twice_arg) {
  if (twice_arg < 1) throw DomainError("gamma_half_integer requires a positive argument");
  double g = (twice_arg % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (int k = (twice_arg % 2 == 0) ? 2 : 1; k + 2 <= twice_arg; k += 2) {
    g *= k / 2.0;
  }
  return g;
}

/// Area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
inline double sphere_surface_area(Dimension n) {
  const int d = n.value();
  return 2.0 * std::pow(std::numbers::pi, d / 2.0) / gamma_half_integer(d);
}

/// log of the integral of sinh^m over [0, T]; -inf at T = 0.
inline double log_sinh_power_integral(int m, double t) {
  detail::require_integral_args(m, t);
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  if (m == 0) return std::log(t);
  if (m >= 2 && detail::sinh_series_applies(m, t)) return detail::log_sinh_power_series(m, t);
  if (m == 1 && t < 1.0) {
    const double h = std::sinh(t / 2.0);
    return std::log(2.0 * h * h);
  }
  return m * t + std::log(detail::scaled_sinh_power_integral(m, t));
}

inline double log_cosh_power_integral(int m, double t) {
  detail::require_integral_args(m, t);
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  return m * t + std::log(detail::scaled_cosh_power_integral(m, t));
}

/// Integral of sinh^m(t) over [0, T]. Throws OverflowError rather than
/// returning infinity.
inline double sinh_power_integral(int m, Length t) {
  if (t.value() == 0.0 || m == 0) return t.value();
  return detail::checked_exp(log_sinh_power_integral(m, t.value()), "sinh power integral");
}

/// Integral of cosh^m(t) over [0, T].
inline double cosh_power_integral(int m, Length t) {
  if (t.value() == 0.0 || m == 0) return t.value();
  return detail::checked_exp(log_cosh_power_integral(m, t.value()), "cosh power integral");
}

/// log V_n(r); -inf at r = 0.
inline double log_ball_volume(Dimension n, double radius) {
  return std::log(sphere_surface_area(n)) + log_sinh_power_integral(n.value() - 1, radius);
}

/// Volume of the hyperbolic n-ball of the given radius,
/// omega_{n-1} * int_0^r sinh^{n-1}(t) dt.
inline Volume ball_volume(Dimension n, Radius radius) {
  if (radius.is_infinite()) throw OverflowError("ball volume of infinite radius");
  if (radius.value() == 0.0) return Volume(0.0);
  return Volume(detail::checked_exp(log_ball_volume(n, radius.value()), "ball volume"));
}

}  // namespace hypcollar
