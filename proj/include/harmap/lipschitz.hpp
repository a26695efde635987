#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmap/area.hpp"
#include "harmap/detail/numeric.hpp"
#include "harmap/disk_grid.hpp"
#include "harmap/harmonic_map.hpp"
#include "harmap/majorant.hpp"

namespace harmap {

namespace detail {

// One deterministic pool serves all Lipschitz ratio estimators, so the
// variants differ only in which ratios they take over which sub-pool and the
// documented orderings between them hold sample-by-sample.
struct PairPool {
  std::vector<std::pair<cplx, cplx>> interior;  // both points in D_r
  std::vector<std::pair<cplx, cplx>> mixed;     // interior point and boundary point of D_r
};

inline PairPool make_pair_pool(double r, int n_pairs, std::uint64_t seed) {
  PairPool pool;
  pool.interior.reserve(static_cast<std::size_t>(n_pairs));
  pool.mixed.reserve(static_cast<std::size_t>(n_pairs));
  KroneckerSeq seq(4, seed);
  double u[4];
  const double rin = r * (1.0 - 1e-9);
  for (int i = 0; i < n_pairs; ++i) {
    seq.next(u);
    pool.interior.emplace_back(KroneckerSeq::disk_point(u[0], u[1], rin),
                               KroneckerSeq::disk_point(u[2], u[3], rin));
    seq.next(u);
    pool.mixed.emplace_back(KroneckerSeq::disk_point(u[0], u[1], rin),
                            std::polar(r, 2.0 * std::numbers::pi * u[2]));
  }
  return pool;
}

}  // namespace detail

enum class LipschitzVariant {
  full_disk,            // |f(z) - f(w)| / omega(|z - w|) over all pairs
  modulus,              // ||f(z)| - |f(w)|| / omega(|z - w|) over all pairs
  modulus_to_boundary,  // same ratio, but w restricted to the circle |w| = r
};

struct LipschitzEstimate {
  double constant = 0.0;
  LipschitzVariant variant = LipschitzVariant::full_disk;
  double r = 0.0;
  int n_pairs = 0;
};

/// Empirical Lipschitz-type constant of f against the majorant on D_r.
inline LipschitzEstimate lipschitz_estimate(const HarmonicMap& map, const Majorant& om, double r,
                                            LipschitzVariant variant, int n_pairs = 4096,
                                            std::uint64_t seed = 42) {
  om.validate();
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("lipschitz_estimate: need 0 < r < 1");
  if (n_pairs < 1) throw std::invalid_argument("lipschitz_estimate: need n_pairs >= 1");
  const detail::PairPool pool = detail::make_pair_pool(r, n_pairs, seed);
  double best = 0.0;
  const auto take = [&](const std::pair<cplx, cplx>& pr, bool modulus) {
    const double sep = std::abs(pr.first - pr.second);
    if (sep < 1e-12) return;
    const cplx fz = evaluate(map, pr.first);
    const cplx fw = evaluate(map, pr.second);
    const double diff = modulus ? std::fabs(std::abs(fz) - std::abs(fw)) : std::abs(fz - fw);
    best = std::max(best, diff / om(sep));
  };
  const bool mod = variant != LipschitzVariant::full_disk;
  if (variant != LipschitzVariant::modulus_to_boundary)
    for (const auto& pr : pool.interior) take(pr, mod);
  for (const auto& pr : pool.mixed) take(pr, mod);
  return {best, variant, r, n_pairs};
}

/// Proof-chain data for the equivalence of the three Lipschitz-type
/// conditions on D_r: from the modulus-to-boundary constant M3, the gradient
/// must satisfy Lambda_f <= 6 M3 K(r) omega(d(z))/d(z) with K(r) =
/// (1+r)/(1-r), and integrating that bound along segments gives back a full
/// Lipschitz constant. Requires f(0) = 0, f_zbar(0) = 0, sense-preserving.
struct EquivalenceReport {
  bool hypothesis_ok = false;
  std::string failure_reason;
  double M3 = 0.0;       // modulus-to-boundary estimate
  double proof_K = 0.0;  // (1+r)/(1-r)
  bool chain_ok = false;
  double chain_max_ratio = 0.0;  // sup Lambda_f d / (6 M3 K omega(d)), d = r - |z|
  cplx chain_argmax;
  double implied_constant = 0.0;  // segment-integral full-Lipschitz constant
  bool ok = false;
};

inline EquivalenceReport equivalence_witness(const HarmonicMap& map, const Majorant& om, double r,
                                             const DiskGrid& grid = {}, int n_pairs = 2048,
                                             std::uint64_t seed = 42) {
  om.validate();
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("equivalence_witness: need 0 < r < 1");
  EquivalenceReport rep;
  if (std::abs(map.h()[0]) > 1e-14 || std::abs(map.g()[0]) > 1e-14 ||
      (map.degree() >= 1 && std::abs(map.g()[1]) > 1e-14)) {
    rep.failure_reason = "map is not normalized (f(0) = 0 and f_zbar(0) = 0 required)";
    return rep;
  }
  const SenseCheck sense = sense_preserving_on(map, r, grid);
  if (!sense.preserving) {
    rep.failure_reason = "map is not sense-preserving on the disk";
    return rep;
  }
  rep.hypothesis_ok = true;
  rep.M3 = lipschitz_estimate(map, om, r, LipschitzVariant::modulus_to_boundary, n_pairs, seed)
               .constant;
  rep.proof_K = (1.0 + r) / (1.0 - r);

  const double denom_scale = 6.0 * rep.M3 * rep.proof_K;
  rep.chain_max_ratio = 0.0;
  bool degenerate_rhs = false;
  for_each_grid_point(grid, r, RadialSpan::open, [&](cplx z) {
    const double d = r - std::abs(z);
    if (!(d > 0.0)) return;
    const double lb = std::abs(map.dh().eval(z)) + std::abs(map.dg().eval(z));
    if (denom_scale <= 0.0) {
      if (lb > 1e-13) degenerate_rhs = true;
      return;
    }
    const double ratio = lb * d / (denom_scale * om(d));
    if (ratio > rep.chain_max_ratio) {
      rep.chain_max_ratio = ratio;
      rep.chain_argmax = z;
    }
  });
  rep.chain_ok = !degenerate_rhs && rep.chain_max_ratio <= 1.0 + 1e-9;

  // Integrate the gradient bound along straight segments to recover a full
  // Lipschitz constant; reported next to the proof constant, not compared.
  detail::KroneckerSeq seq(4, seed ^ 0x5BF0A8B1ull);
  double u[4];
  const double rin = r * (1.0 - 1e-6);
  double implied = 0.0;
  for (int i = 0; i < 256; ++i) {
    seq.next(u);
    const cplx z1 = detail::KroneckerSeq::disk_point(u[0], u[1], rin);
    const cplx z2 = detail::KroneckerSeq::disk_point(u[2], u[3], rin);
    const double sep = std::abs(z2 - z1);
    if (sep < 1e-9) continue;
    const double integral = detail::integrate_adaptive(
        [&](double t) {
          const cplx z = z1 + t * (z2 - z1);
          const double d = r - std::abs(z);
          return om(d) / d;
        },
        0.0, 1.0, 1e-9);
    implied = std::max(implied, denom_scale * integral * sep / om(sep));
  }
  rep.implied_constant = implied;
  rep.ok = rep.hypothesis_ok && rep.chain_ok;
  return rep;
}

/// Schwarz-Pick-type bound for K-quasiregular self-maps of the disk:
/// Lambda_f(z) (1 - |z|^2) <= K (1 - |f(z)|^2). Preconditions (|f| < 1 and
/// dilatation <= (K-1)/(K+1)) are checked on the same open grid.
struct SchwarzPickResult {
  bool precondition_ok = false;
  std::string reason;
  bool ok = false;
  double max_ratio = 0.0;
  cplx argmax;
};

inline SchwarzPickResult schwarz_pick_check(const HarmonicMap& map, double K,
                                            const DiskGrid& grid = {}) {
  if (!(K >= 1.0)) throw std::domain_error("schwarz_pick_check: need K >= 1");
  SchwarzPickResult res;
  res.precondition_ok = true;
  const double dil_cap = (K - 1.0) / (K + 1.0);
  for_each_grid_point(grid, 1.0, RadialSpan::open, [&](cplx z) {
    if (!res.precondition_ok) return;
    const LocalData d = local_data(map, z);
    const double af = std::abs(d.value);
    if (!(af < 1.0)) {
      res.precondition_ok = false;
      res.reason = "map is not a self-map of the disk (|f| reaches 1 on the grid)";
      return;
    }
    if (!d.degenerate && d.dilatation_mod > dil_cap * (1.0 + 1e-9) + 1e-15) {
      res.precondition_ok = false;
      res.reason = "dilatation exceeds (K-1)/(K+1), map is not K-quasiregular";
      return;
    }
    const double ratio = d.lambda_big * (1.0 - std::norm(z)) / (K * (1.0 - af * af));
    if (ratio > res.max_ratio) {
      res.max_ratio = ratio;
      res.argmax = z;
    }
  });
  if (!res.precondition_ok) return res;
  res.ok = res.max_ratio <= 1.0 + 1e-9;
  return res;
}

/// Convexity of the image curves f(|z| = r) for each radius in the ladder.
/// A curve passes when its consecutive edge cross products share one sign
/// (flat edges tolerated up to 1% of the samples) and it is simple, winding
/// exactly once around its centroid.
struct ConvexityResult {
  bool ok = false;
  bool inconclusive = false;  // too many flat cross products or a degenerate curve
  double first_failing_radius = 0.0;
  std::vector<double> radii;
  std::vector<bool> convex;
};

inline ConvexityResult fully_convex_check(const HarmonicMap& map, std::span<const double> radii,
                                          int n_boundary = 4096) {
  if (radii.empty()) throw std::invalid_argument("fully_convex_check: empty radius ladder");
  if (n_boundary < 64) throw std::invalid_argument("fully_convex_check: need n_boundary >= 64");
  ConvexityResult res;
  res.ok = true;
  for (const double r : radii) {
    if (!(r > 0.0 && r < 1.0))
      throw std::domain_error("fully_convex_check: radii must lie in (0, 1)");
    res.radii.push_back(r);
    std::vector<cplx> pts(static_cast<std::size_t>(n_boundary));
    for (int j = 0; j < n_boundary; ++j)
      pts[std::size_t(j)] =
          evaluate(map, std::polar(r, 2.0 * std::numbers::pi * double(j) / double(n_boundary)));
    cplx centroid{};
    for (const cplx& p : pts) centroid += p;
    centroid /= double(n_boundary);
    double scale = 0.0;
    for (const cplx& p : pts) scale = std::max(scale, std::abs(p - centroid));
    bool convex = true;
    if (scale <= 1e-300) {
      res.inconclusive = true;
      convex = false;
    } else {
      const double flat_tol = 1e-12 * scale * scale;
      int flats = 0, pos = 0, neg = 0;
      for (int j = 0; j < n_boundary; ++j) {
        const cplx e1 = pts[std::size_t((j + 1) % n_boundary)] - pts[std::size_t(j)];
        const cplx e2 = pts[std::size_t((j + 2) % n_boundary)] - pts[std::size_t((j + 1) % n_boundary)];
        const double cross = e1.real() * e2.imag() - e1.imag() * e2.real();
        if (std::fabs(cross) <= flat_tol)
          ++flats;
        else if (cross > 0.0)
          ++pos;
        else
          ++neg;
      }
      if (flats > n_boundary / 100) res.inconclusive = true;
      convex = pos == 0 || neg == 0;
      if (convex) {
        // Simplicity: wind once about the centroid.
        bool centered = true;
        std::vector<cplx> rel(pts.size());
        for (std::size_t j = 0; j < pts.size(); ++j) {
          rel[j] = pts[j] - centroid;
          if (std::abs(rel[j]) < 1e-12 * scale) centered = false;
        }
        if (!centered) {
          res.inconclusive = true;
          convex = false;
        } else {
          convex = std::lround(detail::winding_turns(rel)) == 1;
        }
      }
    }
    res.convex.push_back(convex);
    if (!convex && res.ok) {
      res.ok = false;
      res.first_failing_radius = r;
    }
  }
  return res;
}

/// Two-sided comparison between f-displacements and h-displacements on D_r
/// for convex sense-preserving maps: |f(z1)-f(z2)|/(1+r) <= |h(z1)-h(z2)| <=
/// |f(z1)-f(z2)|/(1-r). Hypotheses (membership in H, convexity up the radius
/// ladder to r) are verified before sampling.
struct SandwichResult {
  bool hypothesis_ok = false;
  std::string failure_reason;
  bool ok = false;
  double worst_lower_margin = std::numeric_limits<double>::infinity();
  double worst_upper_margin = std::numeric_limits<double>::infinity();
  int h_collisions = 0;  // sampled pairs with h(z1) = h(z2); must stay 0
};

inline SandwichResult sandwich_check(const HarmonicMap& map, double r, int n_pairs = 10000,
                                     std::uint64_t seed = 42) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("sandwich_check: need 0 < r < 1");
  if (n_pairs < 1) throw std::invalid_argument("sandwich_check: need n_pairs >= 1");
  SandwichResult res;
  const ClassReport cls = class_constants(map, 1.0, DiskGrid::fast());
  if (!cls.in_H) {
    res.failure_reason = "map is not in H (normalization or sense preservation failed)";
    return res;
  }
  std::vector<double> ladder;
  for (int k = 1; k <= 8; ++k) ladder.push_back(r * double(k) / 8.0);
  const ConvexityResult conv = fully_convex_check(map, ladder, 1024);
  if (!conv.ok) {
    res.failure_reason = "image is not convex up to the requested radius";
    return res;
  }
  res.hypothesis_ok = true;

  detail::KroneckerSeq seq(4, seed);
  double u[4];
  const double rin = r * (1.0 - 1e-9);
  std::vector<double> hdiffs;
  hdiffs.reserve(static_cast<std::size_t>(n_pairs));
  std::vector<std::pair<double, double>> pairs;  // (|f diff|, |h diff|)
  pairs.reserve(static_cast<std::size_t>(n_pairs));
  for (int i = 0; i < n_pairs; ++i) {
    seq.next(u);
    const cplx z1 = detail::KroneckerSeq::disk_point(u[0], u[1], rin);
    const cplx z2 = detail::KroneckerSeq::disk_point(u[2], u[3], rin);
    if (std::abs(z1 - z2) < 1e-12) continue;
    const double fd = std::abs(evaluate(map, z1) - evaluate(map, z2));
    const double hd = std::abs(map.h().eval(z1) - map.h().eval(z2));
    pairs.emplace_back(fd, hd);
    hdiffs.push_back(hd);
  }
  double hmax = 1e-300;
  for (const double h : hdiffs) hmax = std::max(hmax, h);
  for (const auto& [fd, hd] : pairs) {
    if (hd <= 1e-12 * hmax) {
      ++res.h_collisions;
      continue;
    }
    res.worst_lower_margin = std::min(res.worst_lower_margin, hd - fd / (1.0 + r));
    res.worst_upper_margin = std::min(res.worst_upper_margin, fd / (1.0 - r) - hd);
  }
  res.ok = res.h_collisions == 0 && res.worst_lower_margin >= -1e-12 * std::max(1.0, hmax) &&
           res.worst_upper_margin >= -1e-12 * std::max(1.0, hmax);
  return res;
}

/// Wirtinger pair of the local inverse: (f^{-1})_zeta = conj(h') / J_f and
/// (f^{-1})_zetabar = -conj(g') / J_f at the image point. Verified by
/// assembling both 2x2 real Jacobians and checking Df * D(f^{-1}) = I.
struct InverseIdentityResult {
  bool ok = false;
  double max_residual = 0.0;
  int skipped = 0;  // grid points with J_f <= 1e-14
};

inline InverseIdentityResult inverse_derivative_identity_check(const HarmonicMap& map,
                                                               const DiskGrid& grid = {}) {
  InverseIdentityResult res;
  const auto mat = [](cplx a, cplx b, double m[2][2]) {
    // Real Jacobian of v -> a v + b conj(v).
    m[0][0] = a.real() + b.real();
    m[0][1] = -a.imag() + b.imag();
    m[1][0] = a.imag() + b.imag();
    m[1][1] = a.real() - b.real();
  };
  for_each_grid_point(grid, 1.0, RadialSpan::open, [&](cplx z) {
    const cplx hp = map.dh().eval(z);
    const cplx gp = map.dg().eval(z);
    const double ah = std::abs(hp), ag = std::abs(gp);
    const double jac = (ah - ag) * (ah + ag);
    if (jac <= 1e-14) {
      ++res.skipped;
      return;
    }
    const cplx inv_z = std::conj(hp) / jac;
    const cplx inv_zbar = -std::conj(gp) / jac;
    double fwd[2][2], bwd[2][2];
    mat(hp, std::conj(gp), fwd);
    mat(inv_z, inv_zbar, bwd);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        double s = fwd[i][0] * bwd[0][j] + fwd[i][1] * bwd[1][j];
        if (i == j) s -= 1.0;
        res.max_residual = std::max(res.max_residual, std::fabs(s));
      }
    }
  });
  res.ok = res.max_residual <= 1e-10;
  return res;
}

}  // namespace harmap
