#include "hypcollar/collar_tube.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"

namespace hypcollar {
namespace {

using testing::log_grid;
using testing::tube_width_dim3_closed_form;

TEST(StableWidth, Values) {
  EXPECT_NEAR(stable_width(Length(2.0)).value(), 0.77193683290530473, 1e-15);
  EXPECT_NEAR(stable_width(Length(1.0)).value(), 1.4068291137472953, 1e-15);
  EXPECT_GT(stable_width(Length(1.0)), stable_width(Length(2.0)));
  const double l = 2.0 * std::asinh(1.0);
  EXPECT_NEAR(stable_width(Length(l)).value(), l / 2.0, 1e-15);
  EXPECT_THROW(stable_width(Length(0.0)), DomainError);
}

TEST(TubeWidth, ClosedFormDimension3) {
  const double area = 2 * std::numbers::pi * (1.0 / std::tanh(0.5) - 1.0);
  EXPECT_NEAR(tube_width(Dimension(3), Area(area)).value(), 0.25, 1e-10);
  EXPECT_NEAR(tube_width(Dimension(3), Area(2 * std::numbers::pi)).value(), 0.27465307216702742, 1e-12);
  for (double a : log_grid(1e-3, 1e8, 60)) {
    const double want = tube_width_dim3_closed_form(a);
    EXPECT_NEAR(tube_width(Dimension(3), Area(a)).value(), want, 1e-10 * want) << a;
  }
}

TEST(TubeWidth, DefiningIdentity) {
  for (int n = 3; n <= 8; ++n) {
    const Dimension dim(n);
    const Dimension face(n - 1);
    for (double a : log_grid(1e-3, 1e8, 40)) {
      const double c = tube_width(dim, Area(a)).value();
      const double back = ball_volume(face, collar_function(Length(2.0 * c))).value();
      EXPECT_LE(std::abs(back - a), 1e-9 * a) << "n=" << n << " A=" << a;
    }
  }
}

TEST(TubeWidth, DecreasingAndVanishing) {
  for (int n = 3; n <= 8; ++n) {
    const auto grid = log_grid(1e-3, 1e8, 80);
    double prev = std::numeric_limits<double>::infinity();
    for (double a : grid) {
      const double c = tube_width(Dimension(n), Area(a)).value();
      EXPECT_LT(c, prev);
      prev = c;
    }
  }
  EXPECT_LT(tube_width(Dimension(3), Area(1e12)).value(), 1e-5);
  EXPECT_GT(tube_width(Dimension(3), Area(1e12)).value(), 0.0);
}

TEST(TubeWidth, BracketExpandsBeyondDefaults) {
  // Root below the default lower bracket (A > ~3e12 in dimension 3).
  const double huge = 1e15;
  EXPECT_NEAR(tube_width(Dimension(3), Area(huge)).value(), tube_width_dim3_closed_form(huge),
              1e-10 * tube_width_dim3_closed_form(huge));
  // Tiny area puts the root above 60.
  const double tiny = 1e-200;
  EXPECT_NEAR(tube_width(Dimension(3), Area(tiny)).value(), tube_width_dim3_closed_form(tiny), 1e-9);
}

TEST(TubeWidth, Errors) {
  EXPECT_THROW(tube_width(Dimension(2), Area(1.0)), UnsupportedDimension);
  EXPECT_THROW(tube_width(Dimension(3), Area(0.0)), DomainError);
  EXPECT_THROW(tube_width(Dimension(3), Area::infinity()), DomainError);
}

TEST(DiscRadius, DefiningIdentity) {
  const double c = tube_width(Dimension(3), Area(2 * std::numbers::pi)).value();
  const Radius rad = disc_radius_from_orthogonal(Length(2 * c));
  EXPECT_NEAR(ball_volume(Dimension(2), rad).value(), 2 * std::numbers::pi, 1e-10);
  EXPECT_NEAR(disc_radius_from_orthogonal(Length(std::asinh(1.0))).value(), std::asinh(1.0), 1e-15);
  EXPECT_EQ(disc_radius_from_orthogonal(Length::infinity()).value(), 0.0);
  EXPECT_THROW(disc_radius_from_orthogonal(Length(0.0)), DomainError);
}

TEST(TubeVolume, FermiFormulaDimension3) {
  const double area = 2 * std::numbers::pi * (1.0 / std::tanh(0.5) - 1.0);
  const double want = area * (0.125 + std::sinh(0.5) / 4.0);  // 1.8669030057956182
  EXPECT_NEAR(tube_volume(Dimension(3), Area(area)).value(), want, 1e-10);
  EXPECT_NEAR(want, 1.8669030057956182, 1e-14);
  const double w = tube_width(Dimension(3), Area(area)).value();
  EXPECT_NEAR(tube_volume(Dimension(3), Area(area)).value(),
              area * testing::cosh_power_quadrature(2, w), 1e-10);
}

TEST(TubeVolume, TwoSidedIsExactlyDouble) {
  for (int n = 2; n <= 8; ++n) {
    for (double a : log_grid(1e-2, 1e6, 15)) {
      EXPECT_EQ(tube_volume(Dimension(n), Area(a), Sides::two).value(),
                2.0 * tube_volume(Dimension(n), Area(a), Sides::one).value());
    }
  }
}

TEST(TubeVolume, RateOfGrowth) {
  EXPECT_NEAR(tube_volume(Dimension(3), Area(1e8)).value(), std::numbers::pi, 1e-3);
  EXPECT_GT(tube_volume(Dimension(4), Area(1e8)).value(), 100.0);
  EXPECT_LT(tube_volume(Dimension(2), Area(1e8)).value(), 1e-3);

  const auto grid = log_grid(1e-3, 1e8, 100);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    EXPECT_LT(tube_volume(Dimension(3), Area(grid[i - 1])), tube_volume(Dimension(3), Area(grid[i])));
  }
  const auto lengths = log_grid(1e-3, 50.0, 100);
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    EXPECT_GT(tube_volume(Dimension(2), Area(lengths[i - 1])),
              tube_volume(Dimension(2), Area(lengths[i])));
  }
}

TEST(TubeVolume, DimensionTwoIsCollarBand) {
  // l * sinh(r(l/2)) = l / sinh(l/2).
  for (double l : {0.1, 1.0, 3.0, 10.0}) {
    EXPECT_NEAR(tube_volume(Dimension(2), Area(l)).value(), l / std::sinh(l / 2.0), 1e-13 * l);
  }
}

TEST(TubeVolume, DimensionFourGrowsBeyondMinimum) {
  const auto grid = log_grid(1e-3, 1e8, 100);
  std::size_t argmin = 0;
  std::vector<double> vols;
  for (double a : grid) vols.push_back(tube_volume(Dimension(4), Area(a)).value());
  for (std::size_t i = 1; i < vols.size(); ++i)
    if (vols[i] < vols[argmin]) argmin = i;
  for (std::size_t i = argmin + 1; i < vols.size(); ++i) EXPECT_GT(vols[i], vols[i - 1]);
}

TEST(VolumeBound, Constants) {
  EXPECT_NEAR(kSurfaceVolumeConstant3, 4.3990275593827853, 1e-15);
  EXPECT_NEAR(volume_lower_bound({0, 1, 3}).value(), 4.39903, 1e-5);
  EXPECT_NEAR(volume_lower_bound({1, 0, 3}).value(), std::sqrt(3.0) / 4.0, 1e-16);
  EXPECT_EQ(volume_lower_bound({0, 0, 3}).value(), 0.0);
  EXPECT_NEAR(volume_lower_bound({2, 1, 3}, SurfaceConstant::display_rounded).value(), 5.2660254037844390,
              1e-14);
  EXPECT_NEAR(volume_lower_bound({2, 1, 3}).value(), 5.2650529631672239, 1e-14);
}

TEST(VolumeBound, Additive) {
  for (long c1 = 0; c1 < 5; ++c1)
    for (long s1 = 0; s1 < 5; ++s1)
      for (long c2 = 0; c2 < 5; ++c2)
        for (long s2 = 0; s2 < 5; ++s2) {
          const double lhs = volume_lower_bound({c1 + c2, s1 + s2, 3}).value();
          const double rhs = volume_lower_bound({c1, s1, 3}).value() + volume_lower_bound({c2, s2, 3}).value();
          EXPECT_NEAR(lhs, rhs, 1e-13 * std::max(1.0, lhs));
        }
}

TEST(VolumeBound, OnlyDimensionThree) {
  EXPECT_THROW(volume_lower_bound({0, 1, 4}), UnsupportedDimension);
  EXPECT_THROW(volume_lower_bound({-1, 1, 3}), DomainError);
}

TEST(CuspSeparation, Threshold) {
  EXPECT_EQ(cusp_surface_threshold(), std::log(2.0));
  EXPECT_TRUE(cusp_surface_separation_check(Length(0.70)));
  EXPECT_FALSE(cusp_surface_separation_check(Length(0.69)));
  EXPECT_FALSE(cusp_surface_separation_check(Length(std::log(2.0))));
}

}  // namespace
}  // namespace hypcollar
