#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's evaluation paths.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

namespace hypcollar::testing {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// log coth(x/2) in 50-digit arithmetic.
inline double collar_high_precision(double x) {
  const HighPrecision hx(x);
  const HighPrecision half = hx / 2;
  return static_cast<double>(log(cosh(half) / sinh(half)));
}

/// Adaptive Gauss-Kronrod quadrature of f over [a, b].
inline double quadrature(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13, &err);
}

inline double sinh_power_quadrature(int m, double t) {
  return quadrature([m](double s) { return std::pow(std::sinh(s), m); }, 0.0, t);
}

inline double cosh_power_quadrature(int m, double t) {
  return quadrature([m](double s) { return std::pow(std::cosh(s), m); }, 0.0, t);
}

/// Plain bisection on an interval where f changes sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// c_3(A) = (1/2) arccoth(1 + A / 2 pi), from V_2(r(d)) = 2 pi (coth d - 1),
/// written as (1/4) log(1 + 4 pi / A) so it stays accurate for tiny A.
inline double tube_width_dim3_closed_form(double area) {
  return 0.25 * std::log1p(4.0 * std::numbers::pi / area);
}

/// Golden-section minimization of a unimodal function on [lo, hi].
inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         int iters = 200) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && b - a > 1e-13 * (1.0 + std::abs(a)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return std::min(fc, fd);
}

inline std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> out;
  out.reserve(count);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) out.push_back(std::exp(a + (b - a) * i / (count - 1)));
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace hypcollar::testing
