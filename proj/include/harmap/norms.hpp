#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "harmap/detail/numeric.hpp"
#include "harmap/disk_grid.hpp"
#include "harmap/harmonic_map.hpp"
#include "harmap/majorant.hpp"

namespace harmap {

/// Hyperbolic distance on the unit disk. Evaluated through two closed forms
/// (arctanh of the Moebius quotient, and the half-log form) which must agree;
/// the agreement tolerance carries a conditioning guard because both forms
/// lose digits identically as the quotient approaches 1.
inline double hyperbolic_distance(cplx z, cplx w) {
  if (!(std::abs(z) < 1.0 && std::abs(w) < 1.0))
    throw std::domain_error("hyperbolic_distance: points must lie in the open unit disk");
  const double num = std::abs(z - w);
  const double den = std::abs(1.0 - std::conj(z) * w);
  const double x = num / den;
  if (!(x < 1.0))
    throw std::domain_error("hyperbolic_distance: quotient rounded to 1, points too extreme");
  const double via_atanh = 0.5 * std::log((1.0 + x) / (1.0 - x));
  const double via_halflog = 0.5 * std::log((den + num) / (den - num));
  const double guard = 16.0 * std::numeric_limits<double>::epsilon() / (1.0 - x);
  if (std::fabs(via_atanh - via_halflog) > 1e-13 * std::max(1.0, via_atanh) + guard)
    throw std::logic_error("hyperbolic_distance: closed forms disagree");
  return via_atanh;
}

/// Bloch-type norm |f(0)| + sup (1 - |z|^2) Lambda_f(z).
inline double bloch_norm(const HarmonicMap& map, const DiskGrid& grid = {}) {
  const auto val = [&](cplx z) {
    const double lb = std::abs(map.dh().eval(z)) + std::abs(map.dg().eval(z));
    return (1.0 - std::norm(z)) * lb;
  };
  const double sup = grid_max(val, 1.0, grid, RadialSpan::closed).value;
  return std::abs(evaluate(map, cplx{0.0, 0.0})) + sup;
}

/// Sup of |f(z) - f(w)| / sigma(z, w) over sampled pairs, where sigma is the
/// hyperbolic distance. Half the budget goes to independent pairs, half to
/// nearly coincident pairs (which probe the derivative limit and dominate for
/// smooth maps); a greedy local refinement then polishes the best pair. For
/// Bloch-type maps this sup equals the seminorm part of bloch_norm.
inline double colonna_ratio_sup(const HarmonicMap& map, int n_pairs = 4096,
                                std::uint64_t seed = 42) {
  if (n_pairs < 2) throw std::invalid_argument("colonna_ratio_sup: need n_pairs >= 2");
  constexpr double kRim = 0.99;  // pair samples stay off the boundary
  const auto clamp_disk = [&](cplx z) {
    const double a = std::abs(z);
    return a > kRim ? z * (kRim / a) : z;
  };
  const auto ratio = [&](cplx z, cplx w) -> double {
    if (std::abs(z - w) < 1e-14) return -1.0;
    const double sig = hyperbolic_distance(z, w);
    if (sig < 1e-14) return -1.0;
    return std::abs(evaluate(map, z) - evaluate(map, w)) / sig;
  };

  detail::KroneckerSeq seq(4, seed);
  double u[4];
  double best = 0.0;
  cplx bz, bw;
  const int half = n_pairs / 2;
  for (int i = 0; i < n_pairs; ++i) {
    seq.next(u);
    const cplx z = detail::KroneckerSeq::disk_point(u[0], u[1], kRim);
    cplx w;
    if (i < half) {
      w = detail::KroneckerSeq::disk_point(u[2], u[3], kRim);
    } else {
      const double sep = 1e-3 * std::pow(10.0, -3.0 * u[3]);
      w = clamp_disk(z + std::polar(sep, 2.0 * std::numbers::pi * u[2]));
    }
    const double v = ratio(z, w);
    if (v > best) {
      best = v;
      bz = z;
      bw = w;
    }
  }
  if (best <= 0.0) return 0.0;  // constant map
  double step = 0.05;
  for (int round = 0; round < 48; ++round) {
    for (int k = 0; k < 24; ++k) {
      seq.next(u);
      const cplx z = clamp_disk(bz + step * detail::KroneckerSeq::disk_point(u[0], u[1], 1.0));
      const cplx w = clamp_disk(bw + step * detail::KroneckerSeq::disk_point(u[2], u[3], 1.0));
      const double v = ratio(z, w);
      if (v > best) {
        best = v;
        bz = z;
        bw = w;
      }
    }
    step *= 0.75;
  }
  return best;
}

inline double poisson_kernel(double theta, cplx z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw std::domain_error("poisson_kernel: z must lie in the open unit disk");
  // Polar form: exact at z = 0 and well conditioned near theta = arg z.
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta - std::arg(z)) + r * r);
}

/// Uniform boundary samples psi(e^{i theta_j}), theta_j = 2 pi j / n.
class BoundaryFunction {
 public:
  explicit BoundaryFunction(std::vector<cplx> values, std::optional<double> radius = {})
      : values_(std::move(values)), radius_(radius) {
    const std::size_t n = values_.size();
    if (n < 64 || (n & (n - 1)) != 0)
      throw std::invalid_argument("BoundaryFunction: sample count must be a power of two >= 64");
    for (const cplx& v : values_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument("BoundaryFunction: non-finite sample");
    if (radius_ && !(*radius_ > 0.0 && *radius_ < 1.0))
      throw std::invalid_argument("BoundaryFunction: radius must lie in (0, 1)");
  }

  std::span<const cplx> values() const { return values_; }
  int size() const { return int(values_.size()); }
  double theta(int j) const { return 2.0 * std::numbers::pi * double(j) / double(values_.size()); }
  std::optional<double> radius() const { return radius_; }

 private:
  std::vector<cplx> values_;
  std::optional<double> radius_;
};

/// Trace of f on the circle |z| = r, recorded with the radius it came from.
inline BoundaryFunction boundary_trace(const HarmonicMap& map, double r, int n_samples = 256) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("boundary_trace: need 0 < r < 1");
  std::vector<cplx> vals(std::size_t(n_samples > 0 ? n_samples : 0));
  for (int j = 0; j < n_samples; ++j)
    vals[std::size_t(j)] =
        evaluate(map, std::polar(r, 2.0 * std::numbers::pi * double(j) / double(n_samples)));
  return BoundaryFunction(std::move(vals), r);
}

/// Poisson integral of the samples at z, by the uniform trapezoid rule (which
/// is spectrally accurate here). Valid while 1 - |z| is large against 1/n.
inline cplx poisson_extension(const BoundaryFunction& bf, cplx z) {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error("poisson_extension: z must lie in the open unit disk");
  const int n = bf.size();
  std::vector<cplx> terms(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    terms[std::size_t(j)] = poisson_kernel(bf.theta(j), z) * bf.values()[std::size_t(j)];
  return detail::pairwise_sum(terms) / double(n);
}

/// Garsia-style BMO norm of the boundary samples: the sup over z of the
/// Poisson average of |psi - psi(z)|^2, square-rooted. The z-search stays on
/// radii <= min(0.95, 1 - 8/n); closer to the boundary the n-point quadrature
/// cannot resolve the kernel, and for the smooth traces handled here the
/// Garsia quantity decays there anyway.
inline double bmo_norm(const BoundaryFunction& bf, const DiskGrid& grid = {}) {
  const int n = bf.size();
  const double rcap = std::min(0.95, 1.0 - 8.0 / double(n));
  // Center by the plain average first. The Garsia quantity is invariant under
  // constant shifts, but the n-point kernel quadrature is not; centering
  // removes the |values|^2-scaled aliasing term (and is exact for
  // power-of-two n, so constant input gives exactly zero).
  std::vector<cplx> centered(bf.values().begin(), bf.values().end());
  const cplx avg = detail::pairwise_sum(centered) / double(n);
  for (cplx& v : centered) v -= avg;
  const auto garsia = [&](cplx z) -> double {
    std::vector<double> kern(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) kern[std::size_t(j)] = poisson_kernel(bf.theta(j), z);
    std::vector<cplx> mterms(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) mterms[std::size_t(j)] = kern[std::size_t(j)] * centered[std::size_t(j)];
    const cplx mean = detail::pairwise_sum(mterms) / double(n);
    std::vector<double> vterms(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      vterms[std::size_t(j)] = kern[std::size_t(j)] * std::norm(centered[std::size_t(j)] - mean);
    return detail::pairwise_sum(vterms) / double(n);
  };
  const double sup = grid_max(garsia, rcap, grid, RadialSpan::closed).value;
  return std::sqrt(std::max(0.0, sup));
}

/// BMO bound for traces of maps with gradient majorized by M omega(1/(1-|z|)):
/// 2 sqrt(omega(1)) M r sqrt(int_0^1 omega(1/(1-rt)) dt).
inline double bmo_bound_majorant(double M, double r, const Majorant& om) {
  om.validate();
  if (!(M > 0.0)) throw std::domain_error("bmo_bound_majorant: need M > 0");
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("bmo_bound_majorant: need 0 < r < 1");
  const double integral = detail::integrate_adaptive(
      [&](double t) { return om(1.0 / (1.0 - r * t)); }, 0.0, 1.0, 1e-12 * std::max(1.0, om(1.0)));
  return 2.0 * std::sqrt(om(1.0)) * M * r * std::sqrt(integral);
}

/// Checks Lambda_f(z) <= M omega(1/(1-|z|)) on the closed grid of the disk.
inline bool gradient_majorant_check(const HarmonicMap& map, double M, const Majorant& om,
                                    const DiskGrid& grid = {}) {
  om.validate();
  if (!(M > 0.0)) throw std::domain_error("gradient_majorant_check: need M > 0");
  bool ok = true;
  for_each_grid_point(grid, 1.0, RadialSpan::closed, [&](cplx z) {
    if (!ok) return;
    const double d = 1.0 - std::abs(z);
    if (d <= 0.0) return;  // bound is trivially +inf on the rim
    const double lb = std::abs(map.dh().eval(z)) + std::abs(map.dg().eval(z));
    if (lb > M * om(1.0 / d) * (1.0 + 1e-12)) ok = false;
  });
  return ok;
}

/// Smallest grid-measured constant M for gradient_majorant_check.
inline double gradient_majorant_constant(const HarmonicMap& map, const Majorant& om,
                                         const DiskGrid& grid = {}) {
  om.validate();
  const auto ratio = [&](cplx z) -> double {
    const double d = 1.0 - std::abs(z);
    if (d <= 0.0) return 0.0;
    const double lb = std::abs(map.dh().eval(z)) + std::abs(map.dg().eval(z));
    return lb / om(1.0 / d);
  };
  return grid_max(ratio, 1.0, grid, RadialSpan::closed).value;
}

}  // namespace harmap
