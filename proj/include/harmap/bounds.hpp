#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "harmap/area.hpp"
#include "harmap/disk_grid.hpp"
#include "harmap/harmonic_map.hpp"

namespace harmap {

/// Constants shared by the coefficient estimates and the Landau radii.
/// r0 minimizes (1+r)/(r^2(1-r)) on (0,1); Q is the gradient-bound constant
/// sqrt((1+r0) C / (r0^2 (1-r0))).
struct BoundConstants {
  static double r0() { return 0.5 * (std::sqrt(5.0) - 1.0); }

  static double Q(double C) {
    if (!(C > 0.0)) throw std::domain_error("BoundConstants::Q: need C > 0");
    const double r = r0();
    return std::sqrt((1.0 + r) * C / (r * r * (1.0 - r)));
  }
};

struct MinimizeResult {
  double t = 0.0;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Global scan on 1024 interior samples of (0,1), then golden-section descent
/// in the bracketing cell down to width 1e-12 (at most 200 iterations).
inline MinimizeResult minimize_unit_interval(const std::function<double(double)>& objective) {
  constexpr int kSeeds = 1024;
  double bt = 0.0, bv = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= kSeeds; ++i) {
    const double t = double(i) / double(kSeeds + 1);
    const double v = objective(t);
    if (!std::isfinite(v))
      throw std::domain_error("minimize_unit_interval: objective not finite on (0, 1)");
    if (v < bv) {
      bv = v;
      bt = t;
    }
  }
  double lo = std::max(bt - 1.0 / (kSeeds + 1), 1e-12);
  double hi = std::min(bt + 1.0 / (kSeeds + 1), 1.0 - 1e-12);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  int it = 0;
  while (hi - lo > 1e-12 && it < 200) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = objective(x2);
    }
    ++it;
  }
  MinimizeResult res;
  res.converged = hi - lo <= 1e-12;
  res.iterations = it;
  res.t = bt;
  res.value = bv;
  if (f1 < res.value) {
    res.value = f1;
    res.t = x1;
  }
  if (f2 < res.value) {
    res.value = f2;
    res.t = x2;
  }
  return res;
}

/// Coefficient bound for maps with S_f(1) <= C: sqrt(2C) for n = 1, and the
/// Cauchy-estimate envelope (4Q/(pi r0^{n-1})) (1 + 1/(n-1))^{n-1} for n >= 2.
inline double bound_HC(double C, int n) {
  if (!(C > 0.0)) throw std::domain_error("bound_HC: need C > 0");
  if (n < 1) throw std::domain_error("bound_HC: need n >= 1");
  if (n == 1) return std::sqrt(2.0 * C);
  const double r0 = BoundConstants::r0();
  const double q = BoundConstants::Q(C);
  return 4.0 * q / (std::numbers::pi * std::pow(r0, n - 1)) *
         std::pow(1.0 + 1.0 / double(n - 1), n - 1);
}

/// Sharper bound when the map is also K-quasiregular: sqrt(CK) for n = 1,
/// (4 sqrt(CK) / pi) (1 + 1/(n-1))^{n-1} for n >= 2.
inline double bound_quasiregular(double C, double K, int n) {
  if (!(C > 0.0)) throw std::domain_error("bound_quasiregular: need C > 0");
  if (!(K >= 1.0)) throw std::domain_error("bound_quasiregular: need K >= 1");
  if (n < 1) throw std::domain_error("bound_quasiregular: need n >= 1");
  if (n == 1) return std::sqrt(C * K);
  return 4.0 * std::sqrt(C * K) / std::numbers::pi * std::pow(1.0 + 1.0 / double(n - 1), n - 1);
}

/// Bound for maps with |f_z(0)| = alpha > 0, via the minimized objective
/// (Q^2 - alpha^2 (1-t)^2) / (t^{n-1} (1-t)) over t in (0,1). Requires
/// 0 < alpha < Q(C) and n >= 2.
inline double bound_H_alpha(double C, double alpha, int n) {
  const double q = BoundConstants::Q(C);
  if (!(alpha > 0.0 && alpha < q))
    throw std::domain_error("bound_H_alpha: need 0 < alpha < Q(C)");
  if (n < 2) throw std::domain_error("bound_H_alpha: need n >= 2");
  const auto objective = [&](double t) {
    const double u = 1.0 - t;
    return (q * q - alpha * alpha * u * u) / (std::pow(t, n - 1) * u);
  };
  const MinimizeResult m = minimize_unit_interval(objective);
  const double r0 = BoundConstants::r0();
  return m.value / (double(n) * std::pow(r0, n - 1) * q);
}

struct CoeffLemmaResult {
  bool ok = false;
  int worst_n = 0;        // coefficient index with the smallest margin
  double worst_margin = 0.0;
  double sup_modulus = 0.0;  // grid sup of |f|, must not exceed M
};

/// For |f| <= M on the disk: |a_0| <= M and |a_n| + |b_n| <= 4M/pi for n >= 1.
/// The hypothesis is enforced against the grid sup of |f|.
inline CoeffLemmaResult bounded_coeff_lemma_check(const HarmonicMap& map, double M,
                                                  const DiskGrid& grid = {}) {
  if (!(M > 0.0)) throw std::domain_error("bounded_coeff_lemma_check: need M > 0");
  CoeffLemmaResult res;
  res.sup_modulus =
      grid_max([&](cplx z) { return std::abs(evaluate(map, z)); }, 1.0, grid, RadialSpan::closed)
          .value;
  if (res.sup_modulus > M * (1.0 + 1e-12) + 1e-12)
    throw std::domain_error("bounded_coeff_lemma_check: sup |f| exceeds M on the grid");
  const double envelope = 4.0 * M / std::numbers::pi;
  res.worst_n = 0;
  res.worst_margin = M - std::abs(map.h()[0] + std::conj(map.g()[0]));
  for (int n = 1; n <= map.degree(); ++n) {
    const double margin = envelope - (std::abs(map.h()[n]) + std::abs(map.g()[n]));
    if (margin < res.worst_margin) {
      res.worst_margin = margin;
      res.worst_n = n;
    }
  }
  res.ok = res.worst_margin >= -1e-12 * std::max(1.0, envelope);
  return res;
}

/// For an analytic self-map psi of the disk: |c_0|^2 + |c_n| <= 1 for n >= 1.
/// sup_tol is slack on the grid-sup precondition; truncations of exact
/// self-maps can overshoot |psi| = 1 slightly near the boundary.
inline bool schwarz_coeff_check(const ComplexSeries& psi, const DiskGrid& grid = {},
                                double sup_tol = 1e-4) {
  const double sup =
      grid_max([&](cplx z) { return std::abs(psi.eval(z)); }, 1.0, grid, RadialSpan::closed).value;
  if (sup > 1.0 + sup_tol)
    throw std::domain_error("schwarz_coeff_check: |psi| exceeds 1 on the grid");
  const double c0sq = std::norm(psi[0]);
  for (int n = 1; n <= psi.degree(); ++n) {
    if (c0sq + std::abs(psi[n]) > 1.0 + 1e-12) return false;
  }
  return true;
}

struct BoundMarginRow {
  int n = 0;
  double coeff_sum = 0.0;  // |a_n| + |b_n|
  std::optional<double> hc, quasiregular, h_alpha;
  double margin = std::numeric_limits<double>::infinity();  // min applicable bound - coeff_sum
};

struct MapBoundsReport {
  ClassReport constants;
  std::vector<BoundMarginRow> rows;
  std::vector<std::string> skipped;  // bound families not applied, with reasons
  bool hypothesis_ok = false;        // at least one family applied
  bool ok = false;                   // no applied bound violated
  double worst_margin = std::numeric_limits<double>::infinity();
  int worst_n = 0;
};

/// Applies every coefficient bound whose hypotheses the map satisfies and
/// reports per-index margins. Families with failed hypotheses are skipped
/// with a reason rather than reported as violations.
inline MapBoundsReport verify_map_bounds(const HarmonicMap& map, double r = 1.0,
                                         const DiskGrid& grid = {}) {
  MapBoundsReport rep;
  rep.constants = class_constants(map, r, grid);
  const ClassReport& cls = rep.constants;

  const bool zero_at_origin = std::abs(map.h()[0]) <= 1e-14 && std::abs(map.g()[0]) <= 1e-14;
  const bool hc_ok = cls.in_H && cls.C > 0.0;
  if (!hc_ok)
    rep.skipped.push_back(cls.C > 0.0 ? "area-class bound: map is not in H"
                                      : "area-class bound: S_f(1) <= 0");
  const bool qr_ok =
      zero_at_origin && cls.sense_preserving && std::isfinite(cls.K_estimate) && cls.C > 0.0;
  if (!qr_ok)
    rep.skipped.push_back(std::isfinite(cls.K_estimate)
                              ? "quasiregular bound: normalization or sense check failed"
                              : "quasiregular bound: dilatation reaches 1, K is unbounded");
  bool ha_ok = false;
  if (hc_ok && cls.alpha > 0.0) {
    ha_ok = cls.alpha < BoundConstants::Q(cls.C);
    if (!ha_ok) rep.skipped.push_back("alpha bound: alpha >= Q(C)");
  } else {
    rep.skipped.push_back("alpha bound: requires membership in H and alpha > 0");
  }
  rep.hypothesis_ok = hc_ok || qr_ok || ha_ok;
  if (!rep.hypothesis_ok) return rep;

  for (int n = 1; n <= map.degree(); ++n) {
    BoundMarginRow row;
    row.n = n;
    row.coeff_sum = std::abs(map.h()[n]) + std::abs(map.g()[n]);
    if (hc_ok) row.hc = bound_HC(cls.C, n);
    if (qr_ok) row.quasiregular = bound_quasiregular(cls.C, cls.K_estimate, n);
    if (ha_ok && n >= 2) row.h_alpha = bound_H_alpha(cls.C, cls.alpha, n);
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& b : {row.hc, row.quasiregular, row.h_alpha})
      if (b && *b < lowest) lowest = *b;
    row.margin = lowest - row.coeff_sum;
    if (row.margin < rep.worst_margin) {
      rep.worst_margin = row.margin;
      rep.worst_n = n;
    }
    rep.rows.push_back(row);
  }
  rep.ok = rep.rows.empty() || rep.worst_margin >= -1e-9;
  return rep;
}

}  // namespace harmap
