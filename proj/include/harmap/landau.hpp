#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "harmap/bounds.hpp"
#include "harmap/detail/numeric.hpp"
#include "harmap/harmonic_map.hpp"

namespace harmap {

/// Landau-type radii for the class with S_f(1) <= C and |f_z(0)| = alpha:
/// the map is univalent on D_{r0 rho} and covers a disk of radius R0.
struct LandauReport {
  double rho = 0.0;
  double R0 = 0.0;
  double r0rho = 0.0;  // radius of the certified univalence disk
  double C = 0.0;
  double alpha = 0.0;
  double Q = 0.0;
  double r0 = 0.0;
};

/// rho = 1 - 1/sqrt(1 + alpha/(eQ)), computed cancellation-free as
/// x/(s(s+1)) with s = sqrt(1+x); then R0 = r0 rho (alpha - eQ rho/(1-rho)).
/// Self-checks the defining identity alpha = eQ rho (2-rho)/(1-rho)^2.
inline LandauReport landau_radii(double C, double alpha) {
  const double q = BoundConstants::Q(C);
  if (!(alpha > 0.0 && alpha < q))
    throw std::domain_error("landau_radii: need 0 < alpha < Q(C)");
  LandauReport rep;
  rep.C = C;
  rep.alpha = alpha;
  rep.Q = q;
  rep.r0 = BoundConstants::r0();
  const double eq = std::numbers::e * q;
  const double x = alpha / eq;
  const double s = std::sqrt(1.0 + x);
  rep.rho = x / (s * (s + 1.0));
  rep.R0 = rep.r0 * rep.rho * (alpha - eq * rep.rho / (1.0 - rep.rho));
  rep.r0rho = rep.r0 * rep.rho;
  const double back = eq * rep.rho * (2.0 - rep.rho) / ((1.0 - rep.rho) * (1.0 - rep.rho));
  if (std::fabs(back - alpha) > 1e-12 * alpha)
    throw std::logic_error("landau_radii: radius identity self-check failed");
  return rep;
}

struct UnivalenceResult {
  bool ok = false;
  bool degenerate = false;  // some sample has J_f <= 0
  cplx witness_a, witness_b;
};

/// Pairwise injectivity surrogate on an explicit point set: fails on any
/// sample with J_f <= 0, or on a pair of values closer than 1e-10 times the
/// diameter of the sampled image. A desk-scale screen, not a proof.
inline UnivalenceResult univalence_check_points(const HarmonicMap& map,
                                                std::span<const cplx> points) {
  if (points.size() < 2)
    throw std::invalid_argument("univalence_check_points: need at least 2 points");
  UnivalenceResult res;
  std::vector<cplx> vals(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const LocalData d = local_data(map, points[i]);
    if (!(d.jacobian > 0.0)) {
      res.degenerate = true;
      res.witness_a = res.witness_b = points[i];
      return res;
    }
    vals[i] = d.value;
  }
  double lo_re = vals[0].real(), hi_re = lo_re, lo_im = vals[0].imag(), hi_im = lo_im;
  for (const cplx& v : vals) {
    lo_re = std::min(lo_re, v.real());
    hi_re = std::max(hi_re, v.real());
    lo_im = std::min(lo_im, v.imag());
    hi_im = std::max(hi_im, v.imag());
  }
  const double diam = std::hypot(hi_re - lo_re, hi_im - lo_im);
  const double tol = 1e-10 * std::max(diam, 1e-300);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (std::size_t j = i + 1; j < vals.size(); ++j) {
      if (std::abs(vals[i] - vals[j]) <= tol) {
        res.witness_a = points[i];
        res.witness_b = points[j];
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

/// Same check on low-discrepancy samples of the open disk D_radius.
inline UnivalenceResult univalence_check(const HarmonicMap& map, double radius, int samples,
                                         std::uint64_t seed = 42) {
  if (!(radius > 0.0 && radius < 1.0)) throw std::domain_error("univalence_check: need 0 < radius < 1");
  if (samples < 2) throw std::invalid_argument("univalence_check: need samples >= 2");
  detail::KroneckerSeq seq(2, seed);
  std::vector<cplx> pts(static_cast<std::size_t>(samples));
  double u[2];
  for (auto& p : pts) {
    seq.next(u);
    p = detail::KroneckerSeq::disk_point(u[0], u[1], radius);
  }
  return univalence_check_points(map, pts);
}

struct CoveringResult {
  bool ok = false;
  bool inconclusive = false;  // image curve passes through (or at) the origin
  double min_modulus = 0.0;
  long winding = 0;
};

/// Certifies that f(D_{disk_radius}) covers the disk of target_radius about
/// the origin: the image of the circle must wind once around 0 and keep
/// modulus at least target_radius.
inline CoveringResult covering_check(const HarmonicMap& map, double disk_radius,
                                     double target_radius, int n_boundary = 4096) {
  if (!(disk_radius > 0.0 && disk_radius < 1.0))
    throw std::domain_error("covering_check: need 0 < disk_radius < 1");
  if (!(target_radius > 0.0)) throw std::domain_error("covering_check: need target_radius > 0");
  if (n_boundary < 8) throw std::invalid_argument("covering_check: need n_boundary >= 8");
  CoveringResult res;
  std::vector<cplx> curve(static_cast<std::size_t>(n_boundary));
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n_boundary; ++j) {
    const cplx z =
        std::polar(disk_radius, 2.0 * std::numbers::pi * double(j) / double(n_boundary));
    curve[std::size_t(j)] = evaluate(map, z);
    m = std::min(m, std::abs(curve[std::size_t(j)]));
  }
  res.min_modulus = m;
  if (m < 1e-12) {
    res.inconclusive = true;
    return res;
  }
  res.winding = std::lround(detail::winding_turns(curve));
  res.ok = res.winding == 1 && m >= target_radius - 1e-12 * std::max(1.0, target_radius);
  return res;
}

}  // namespace harmap
