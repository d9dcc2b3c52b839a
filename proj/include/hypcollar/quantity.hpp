#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "hypcollar/errors.hpp"

namespace hypcollar {

/// Nonnegative scalar in hyperbolic units. Construction rejects NaN and
/// negative values; +infinity is representable, and each operation states
/// whether it accepts it.
template <class Tag>
class Quantity {
 public:
  constexpr Quantity() = default;
  constexpr explicit Quantity(double value) : value_(value) {
    if (std::isnan(value) || value < 0.0) {
      throw DomainError(std::string(Tag::name) + " must be nonnegative, got " +
                        std::to_string(value));
    }
  }

  static constexpr Quantity infinity() {
    return Quantity(std::numeric_limits<double>::infinity());
  }

  [[nodiscard]] constexpr double value() const { return value_; }
  [[nodiscard]] constexpr bool is_infinite() const { return std::isinf(value_); }

  friend constexpr auto operator<=>(Quantity, Quantity) = default;

  friend constexpr Quantity operator+(Quantity a, Quantity b) {
    return Quantity(a.value_ + b.value_);
  }
  friend constexpr Quantity operator*(Quantity a, double s) { return Quantity(a.value_ * s); }
  friend constexpr Quantity operator*(double s, Quantity a) { return Quantity(a.value_ * s); }
  friend constexpr Quantity operator/(Quantity a, double s) { return Quantity(a.value_ / s); }

 private:
  double value_ = 0.0;
};

struct LengthTag {
  static constexpr const char* name = "length";
};
struct AreaTag {
  static constexpr const char* name = "area";
};
struct VolumeTag {
  static constexpr const char* name = "volume";
};

using Length = Quantity<LengthTag>;
using Width = Length;
using Radius = Length;
/// (n-1)-dimensional volume of a hypersurface, induced metric.
using Area = Quantity<AreaTag>;
using Volume = Quantity<VolumeTag>;

/// Dimension n of hyperbolic space H^n.
class Dimension {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 20;

  constexpr explicit Dimension(int n) : n_(n) {
    if (n < kMin || n > kMax) {
      throw UnsupportedDimension("dimension must lie in [" + std::to_string(kMin) + ", " +
                                 std::to_string(kMax) + "], got " + std::to_string(n));
    }
  }

  [[nodiscard]] constexpr int value() const { return n_; }
  friend constexpr auto operator<=>(Dimension, Dimension) = default;

 private:
  int n_;
};

}  // namespace hypcollar
