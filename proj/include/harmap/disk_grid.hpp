#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "harmap/detail/numeric.hpp"

namespace harmap {

/// Polar sampling grid for sup/inf searches over disks.
struct DiskGrid {
  int n_radial = 64;
  int n_angular = 256;
  int refine_depth = 2;  // local refinement rounds, each halves the cell

  void validate() const {
    if (n_radial < 8 || n_angular < 16 || refine_depth < 0)
      throw std::invalid_argument(
          "DiskGrid: need n_radial >= 8, n_angular >= 16, refine_depth >= 0");
  }

  static DiskGrid fast() { return {32, 128, 2}; }
  static DiskGrid standard() { return {64, 256, 2}; }
  static DiskGrid precise() { return {128, 1024, 2}; }
};

/// Whether the bounding circle |z| = r itself carries sample points.
enum class RadialSpan { open, closed };

/// Visits z = 0 once, then the polar grid points of D_r (radii r*i/n_radial).
template <class F>
void for_each_grid_point(const DiskGrid& grid, double r, RadialSpan span, F&& visit) {
  grid.validate();
  if (!(r > 0.0)) throw std::invalid_argument("for_each_grid_point: need r > 0");
  const int imax = span == RadialSpan::closed ? grid.n_radial : grid.n_radial - 1;
  visit(cplx{0.0, 0.0});
  for (int i = 1; i <= imax; ++i) {
    const double ri = r * double(i) / double(grid.n_radial);
    for (int j = 0; j < grid.n_angular; ++j) {
      const double th = 2.0 * std::numbers::pi * double(j) / double(grid.n_angular);
      visit(std::polar(ri, th));
    }
  }
}

struct GridExtremum {
  double value = 0.0;
  cplx where;
};

/// Max of f over the polar grid of D_r, then refine_depth rounds of local
/// 5x5 search around the best cell at successively halved spacing. The main
/// pass parallelizes over radial lines with a fixed reduction order.
template <class F>
GridExtremum grid_max(F&& f, double r, const DiskGrid& grid, RadialSpan span) {
  grid.validate();
  if (!(r > 0.0)) throw std::invalid_argument("grid_max: need r > 0");
  const int imax = span == RadialSpan::closed ? grid.n_radial : grid.n_radial - 1;

  struct Best {
    double value;
    double rad, th;
  };
  std::vector<Best> lines(std::size_t(imax) + 1);
  lines[0] = {f(cplx{0.0, 0.0}), 0.0, 0.0};
  detail::parallel_for(std::size_t(imax), [&](std::size_t k) {
    const int i = int(k) + 1;
    const double ri = r * double(i) / double(grid.n_radial);
    Best b{-std::numeric_limits<double>::infinity(), ri, 0.0};
    for (int j = 0; j < grid.n_angular; ++j) {
      const double th = 2.0 * std::numbers::pi * double(j) / double(grid.n_angular);
      const double v = f(std::polar(ri, th));
      if (v > b.value) b = {v, ri, th};
    }
    lines[std::size_t(i)] = b;
  });
  Best best = lines[0];
  for (const Best& b : lines)
    if (b.value > best.value) best = b;

  // Keep refinement off the excluded circle when the span is open.
  const double r_cap =
      span == RadialSpan::closed ? r : r * (double(grid.n_radial) - 0.5) / double(grid.n_radial);
  double dr = r / double(grid.n_radial);
  double dth = 2.0 * std::numbers::pi / double(grid.n_angular);
  for (int round = 0; round < grid.refine_depth; ++round) {
    dr *= 0.5;
    dth *= 0.5;
    Best next = best;
    for (int a = -2; a <= 2; ++a) {
      const double rr = std::clamp(best.rad + a * dr, 0.0, r_cap);
      for (int b2 = -2; b2 <= 2; ++b2) {
        const double tt = best.th + b2 * dth;
        const double v = f(std::polar(rr, tt));
        if (v > next.value) next = {v, rr, tt};
      }
    }
    best = next;
  }
  return {best.value, std::polar(best.rad, best.th)};
}

inline std::vector<cplx> circle_points(double r, int n) {
  if (n < 1) throw std::invalid_argument("circle_points: need n >= 1");
  std::vector<cplx> pts(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    pts[std::size_t(j)] = std::polar(r, 2.0 * std::numbers::pi * double(j) / double(n));
  return pts;
}

}  // namespace harmap
