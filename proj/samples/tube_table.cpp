// Prints tube widths and one-sided tube volumes for a few areas in
// dimensions 3 and 4. In dimension 3 the volume column approaches pi; in
// dimension 4 it grows without bound.

#include <cstdio>

#include "hypcollar/collar_tube.hpp"

int main() {
  using namespace hypcollar;
  std::printf("%4s %12s %14s %14s\n", "n", "area", "width", "volume");
  for (const int n : {3, 4}) {
    for (const double area : {1e-2, 1.0, 1e2, 1e4, 1e6, 1e8}) {
      const Width w = tube_width(Dimension(n), Area(area));
      const Volume v = tube_volume(Dimension(n), Area(area));
      std::printf("%4d %12.4g %14.8g %14.8g\n", n, area, w.value(), v.value());
    }
  }
  return 0;
}
