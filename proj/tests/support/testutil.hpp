#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <harmap/harmap.hpp>

namespace testutil {

using harmap::ComplexSeries;
using harmap::cplx;
using harmap::HarmonicMap;

// Independent power-sum evaluator used as the oracle for Horner evaluation.
inline cplx naive_eval(const ComplexSeries& s, cplx z) {
  cplx acc{};
  for (int n = 0; n <= s.degree(); ++n) acc += s[n] * std::pow(z, cplx(double(n), 0.0));
  return acc;
}

inline cplx naive_map_eval(const HarmonicMap& m, cplx z) {
  return naive_eval(m.h(), z) + std::conj(naive_eval(m.g(), z));
}

inline cplx rand_coeff(std::mt19937_64& rng, double mag) {
  std::uniform_real_distribution<double> u(-mag, mag);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

inline cplx rand_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, t);
}

// Random member of H: normalized, and the derivative tail mass is kept under
// |a_1| (sum_{n>=2} n(|a_n|+|b_n|) <= 0.8 |a_1|), which forces |g'| < |h'|
// everywhere on the closed disk with margin 0.2 |a_1|.
inline HarmonicMap random_in_H(std::mt19937_64& rng, int max_degree = 8) {
  std::uniform_int_distribution<int> dd(2, max_degree);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int deg = dd(rng);
  const double a1 = 0.3 + 0.7 * u01(rng);
  std::vector<cplx> a(std::size_t(deg) + 1), b(std::size_t(deg) + 1);
  a[1] = std::polar(a1, 2.0 * std::numbers::pi * u01(rng));
  double mass = 0.0;
  for (int n = 2; n <= deg; ++n) {
    a[std::size_t(n)] = rand_coeff(rng, 1.0);
    b[std::size_t(n)] = rand_coeff(rng, 1.0);
    mass += n * (std::abs(a[std::size_t(n)]) + std::abs(b[std::size_t(n)]));
  }
  if (mass > 0.0) {
    const double target = 0.8 * a1 * u01(rng);
    const double s = target / mass;
    for (int n = 2; n <= deg; ++n) {
      a[std::size_t(n)] *= s;
      b[std::size_t(n)] *= s;
    }
  }
  return HarmonicMap(ComplexSeries(std::move(a)), ComplexSeries(std::move(b)));
}

// Random self-map of the disk: coefficient moduli sum to at most `cap` < 1.
inline HarmonicMap random_self_map(std::mt19937_64& rng, int max_degree = 6, double cap = 0.9) {
  std::uniform_int_distribution<int> dd(1, max_degree);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int deg = dd(rng);
  std::vector<cplx> a(std::size_t(deg) + 1), b(std::size_t(deg) + 1);
  double mass = 0.0;
  for (int n = 0; n <= deg; ++n) {
    a[std::size_t(n)] = rand_coeff(rng, 1.0);
    b[std::size_t(n)] = rand_coeff(rng, 1.0);
    mass += std::abs(a[std::size_t(n)]) + std::abs(b[std::size_t(n)]);
  }
  const double s = cap * u01(rng) / std::max(mass, 1e-12);
  for (auto& c : a) c *= s;
  for (auto& c : b) c *= s;
  return HarmonicMap(ComplexSeries(std::move(a)), ComplexSeries(std::move(b)));
}

// Arbitrary map, no class guarantees.
inline HarmonicMap random_plain_map(std::mt19937_64& rng, int max_degree = 8) {
  std::uniform_int_distribution<int> dd(1, max_degree);
  const int dh = dd(rng), dg = dd(rng);
  std::vector<cplx> a(std::size_t(dh) + 1), b(std::size_t(dg) + 1);
  for (auto& c : a) c = rand_coeff(rng, 1.0);
  for (auto& c : b) c = rand_coeff(rng, 1.0);
  return HarmonicMap(ComplexSeries(std::move(a)), ComplexSeries(std::move(b)));
}

// Quasiregular map with dilatation exactly w(z) = c z: g' = c z h', so the
// measured K on the closed disk of radius r is exactly (1+|c|r)/(1-|c|r).
inline HarmonicMap with_linear_dilatation(const ComplexSeries& h, cplx c) {
  std::vector<cplx> b(std::size_t(h.degree()) + 2);
  for (int n = 1; n <= h.degree(); ++n)
    b[std::size_t(n) + 1] = c * double(n) * h[n] / double(n + 1);
  return HarmonicMap(h, ComplexSeries(std::move(b)));
}

// Quasiregular map with constant dilatation w = c (note g'(0) != 0).
inline HarmonicMap with_constant_dilatation(const ComplexSeries& h, cplx c) {
  std::vector<cplx> b(h.coeffs().begin(), h.coeffs().end());
  b[0] = 0.0;
  for (auto& x : b) x *= c;
  return HarmonicMap(h, ComplexSeries(std::move(b)));
}

// Normalized analytic series with derivative tail under |a_1|; convenient
// base for the dilatation constructions above.
inline ComplexSeries random_normalized_analytic(std::mt19937_64& rng, int max_degree = 6) {
  std::uniform_int_distribution<int> dd(1, max_degree);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int deg = dd(rng);
  std::vector<cplx> a(std::size_t(deg) + 1);
  a[1] = std::polar(0.3 + 0.7 * u01(rng), 2.0 * std::numbers::pi * u01(rng));
  double mass = 0.0;
  for (int n = 2; n <= deg; ++n) {
    a[std::size_t(n)] = rand_coeff(rng, 1.0);
    mass += n * std::abs(a[std::size_t(n)]);
  }
  if (mass > 0.0) {
    const double s = 0.6 * std::abs(a[1]) * u01(rng) / mass;
    for (int n = 2; n <= deg; ++n) a[std::size_t(n)] *= s;
  }
  return ComplexSeries(std::move(a));
}

// Convexity oracle: largest distance from any sample to the boundary of the
// convex hull of the samples. Near zero iff the curve is convex.
inline double hull_deviation(std::vector<cplx> pts) {
  std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto cross = [](cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
  };
  const std::size_t n = pts.size();
  if (n < 3) return 0.0;
  std::vector<cplx> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  const auto seg_dist = [](cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
  };
  double worst = 0.0;
  for (const cplx& p : pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i)
      best = std::min(best, seg_dist(p, hull[i], hull[(i + 1) % hull.size()]));
    worst = std::max(worst, best);
  }
  return worst;
}

// Midpoint rule on a cartesian lattice; crude but fully independent of the
// polar quadrature machinery.
inline double area_cartesian(const HarmonicMap& m, double r, int n) {
  const double h = 2.0 * r / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -r + (i + 0.5) * h;
    for (int j = 0; j < n; ++j) {
      const double y = -r + (j + 0.5) * h;
      if (x * x + y * y > r * r) continue;
      const cplx z{x, y};
      const double ah = std::abs(m.dh().eval(z));
      const double ag = std::abs(m.dg().eval(z));
      sum += (ah - ag) * (ah + ag);
    }
  }
  return sum * h * h / std::numbers::pi;
}

}  // namespace testutil
