#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "harmap/detail/numeric.hpp"

namespace harmap {

/// Modulus-of-continuity majorant omega(t) = scale * t^beta, beta in (0, 1].
/// Nonnegative, vanishing at 0, increasing, and t -> omega(t)/t nonincreasing.
struct Majorant {
  double beta = 1.0;
  double scale = 1.0;

  void validate() const {
    if (!(beta > 0.0 && beta <= 1.0) || !(scale > 0.0) || !std::isfinite(scale))
      throw std::invalid_argument("Majorant: need beta in (0, 1] and scale > 0");
  }

  double operator()(double t) const {
    if (t < 0.0) throw std::domain_error("Majorant: negative argument");
    return scale * std::pow(t, beta);
  }
};

struct MajorantRegularity {
  bool cond1 = false;           // sup_d (1/omega(d)) int_0^d omega(t)/t dt finite
  bool cond2 = false;           // sup_d (d/omega(d)) int_d^inf omega(t)/t^2 dt finite
  bool divergent_tail = false;  // the second integral diverges (beta = 1)
  double M1 = std::numeric_limits<double>::infinity();
  double M2 = std::numeric_limits<double>::infinity();
  double M_witness = std::numeric_limits<double>::infinity();  // max(M1, M2)
};

/// Numerically estimates the regularity constants over a log-spaced ladder of
/// upper limits d <= delta0. Integrals are adaptive Simpson with analytic
/// head/tail pieces where the power-law integrand leaves the quadrature range
/// (below 1e-6 d, above 1e6 d).
inline MajorantRegularity majorant_regularity_check(const Majorant& om, double delta0 = 1.0,
                                                    int n_samples = 16) {
  om.validate();
  if (!(delta0 > 0.0)) throw std::domain_error("majorant_regularity_check: need delta0 > 0");
  if (n_samples < 1) throw std::invalid_argument("majorant_regularity_check: need n_samples >= 1");
  MajorantRegularity reg;
  reg.M1 = 0.0;
  reg.M2 = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    const double d =
        n_samples == 1 ? delta0 : delta0 * std::pow(10.0, -3.0 * double(k) / double(n_samples - 1));
    const double cut = 1e-6 * d;
    const double head = om(cut) / om.beta;  // exact integral of omega(t)/t on (0, cut]
    const double body = detail::integrate_adaptive([&](double t) { return om(t) / t; }, cut, d,
                                                   1e-10 * std::max(1.0, om(d)));
    reg.M1 = std::max(reg.M1, (head + body) / om(d));

    if (om.beta >= 1.0) {
      reg.divergent_tail = true;
      reg.M2 = std::numeric_limits<double>::infinity();
      continue;
    }
    const double top = 1e6 * d;
    const double tail = om(top) / (top * (1.0 - om.beta));  // integral of omega/t^2 on [top, inf)
    const double mid = detail::integrate_adaptive([&](double t) { return om(t) / (t * t); }, d, top,
                                                  1e-10 * std::max(1.0, om(d) / d));
    reg.M2 = std::max(reg.M2, d * (mid + tail) / om(d));
  }
  reg.cond1 = std::isfinite(reg.M1);
  reg.cond2 = !reg.divergent_tail && std::isfinite(reg.M2);
  reg.M_witness = std::max(reg.M1, reg.M2);
  return reg;
}

}  // namespace harmap
