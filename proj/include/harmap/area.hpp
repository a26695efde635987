#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "harmap/detail/numeric.hpp"
#include "harmap/disk_grid.hpp"
#include "harmap/harmonic_map.hpp"

namespace harmap {

/// Area functional S_f(r): the Jacobian integral over D_r with the area
/// measure normalized by pi. For the stored truncations this has the exact
/// closed form sum_n n (|a_n|^2 - |b_n|^2) r^{2n}.
inline double area_series(const HarmonicMap& map, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("area_series: need r in [0, 1]");
  const auto a = map.h().coeffs();
  const auto b = map.g().coeffs();
  std::vector<double> terms;
  terms.reserve(a.size());
  const double r2 = r * r;
  double p = 1.0;
  for (std::size_t n = 1; n < a.size(); ++n) {
    p *= r2;
    terms.push_back(double(n) * (std::norm(a[n]) - std::norm(b[n])) * p);
  }
  return detail::pairwise_sum(terms);
}

/// Same functional by quadrature: Gauss-Legendre radially, uniform trapezoid
/// in angle, rule doubled until two levels agree to 1e-9 relative. Exists as
/// an independent route for cross-checking area_series.
inline double area_quadrature(const HarmonicMap& map, double r, const DiskGrid& grid = {}) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("area_quadrature: need r in [0, 1]");
  grid.validate();
  if (r == 0.0) return 0.0;
  const auto level = [&](int nr, int na) {
    const auto q = detail::gauss_legendre(nr, 0.0, r);
    std::vector<double> radial(static_cast<std::size_t>(nr));
    detail::parallel_for(std::size_t(nr), [&](std::size_t i) {
      const double rho = q.nodes[i];
      std::vector<double> ang(static_cast<std::size_t>(na));
      for (int j = 0; j < na; ++j) {
        const cplx z = std::polar(rho, 2.0 * std::numbers::pi * double(j) / double(na));
        const double ah = std::abs(map.dh().eval(z));
        const double ag = std::abs(map.dg().eval(z));
        ang[std::size_t(j)] = (ah - ag) * (ah + ag);
      }
      radial[i] = q.weights[i] * rho * detail::pairwise_sum(ang);
    });
    return 2.0 / double(na) * detail::pairwise_sum(radial);
  };
  int nr = grid.n_radial, na = grid.n_angular;
  double prev = level(nr, na);
  for (int k = 0; k < 3; ++k) {
    nr *= 2;
    na *= 2;
    const double cur = level(nr, na);
    if (std::fabs(cur - prev) <= 1e-9 * std::max(1.0, std::fabs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

/// Class membership data. alpha = |f_z(0)|; C = S_f(1); K_estimate from the
/// dilatation sup on the closed grid of D_r (+inf once |g'/h'| reaches 1).
struct ClassReport {
  bool in_H = false;
  bool normalized = false;        // h(0) = g(0) = 0 and g'(0) = 0
  bool sense_preserving = false;  // on the open unit disk grid
  double alpha = 0.0;
  double C = 0.0;
  double K_estimate = std::numeric_limits<double>::infinity();
  double r_checked = 1.0;
};

inline ClassReport class_constants(const HarmonicMap& map, double r = 1.0,
                                   const DiskGrid& grid = {}) {
  if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("class_constants: need 0 < r <= 1");
  grid.validate();
  ClassReport rep;
  rep.r_checked = r;
  const double eps = 1e-14;  // slack for coefficients deserialized from text
  rep.normalized = std::abs(map.h()[0]) <= eps && std::abs(map.g()[0]) <= eps &&
                   (map.degree() < 1 || std::abs(map.g()[1]) <= eps);
  rep.sense_preserving = sense_preserving_on(map, 1.0, grid).preserving;
  rep.in_H = rep.normalized && rep.sense_preserving;
  rep.alpha = map.degree() >= 1 ? std::abs(map.h()[1]) : 0.0;
  rep.C = area_series(map, 1.0);

  // Dilatation sup; degenerate points are skipped (marker value -1).
  const auto ratio = [&](cplx z) -> double {
    const double ah = std::abs(map.dh().eval(z));
    const double ag = std::abs(map.dg().eval(z));
    if (ah == 0.0 && ag == 0.0) return -1.0;
    if (ah == 0.0) return std::numeric_limits<double>::infinity();
    return ag / ah;
  };
  const double s = grid_max(ratio, r, grid, RadialSpan::closed).value;
  if (s < 0.0)
    rep.K_estimate = 1.0;  // h' = g' = 0 everywhere sampled
  else if (s >= 1.0)
    rep.K_estimate = std::numeric_limits<double>::infinity();
  else
    rep.K_estimate = (1.0 + s) / (1.0 - s);
  return rep;
}

/// S_f(r) sampled on radii k/samples must be nondecreasing (up to rounding
/// slack) when the map is sense-preserving.
inline bool area_monotonicity_check(const HarmonicMap& map, int samples) {
  if (samples < 1) throw std::invalid_argument("area_monotonicity_check: need samples >= 1");
  double prev = 0.0;
  for (int k = 1; k <= samples; ++k) {
    const double s = area_series(map, double(k) / double(samples));
    if (s < prev - 1e-12 * std::max(1.0, std::fabs(prev))) return false;
    prev = s;
  }
  return true;
}

}  // namespace harmap
