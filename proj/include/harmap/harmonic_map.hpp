#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "harmap/complex_series.hpp"
#include "harmap/disk_grid.hpp"

namespace harmap {

inline constexpr int kDefaultDegreeCap = 64;

/// Planar harmonic map f = h + conj(g) on the unit disk, with h and g
/// truncated power series stored to a common degree.
class HarmonicMap {
 public:
  HarmonicMap(ComplexSeries h, ComplexSeries g, std::string label = {},
              int degree_cap = kDefaultDegreeCap)
      : label_(std::move(label)) {
    const int deg = std::max(h.degree(), g.degree());
    if (deg > degree_cap)
      throw std::invalid_argument("HarmonicMap: series degree exceeds the cap of " +
                                  std::to_string(degree_cap));
    h_ = h.padded(deg);
    g_ = g.padded(deg);
    dh_ = h_.derivative();
    dg_ = g_.derivative();
  }

  const ComplexSeries& h() const { return h_; }
  const ComplexSeries& g() const { return g_; }
  const ComplexSeries& dh() const { return dh_; }
  const ComplexSeries& dg() const { return dg_; }
  int degree() const { return h_.degree(); }
  const std::string& label() const { return label_; }

 private:
  ComplexSeries h_, g_, dh_, dg_;
  std::string label_;
};

inline void require_in_closed_disk(cplx z) {
  if (!(std::abs(z) <= 1.0 + 1e-12))
    throw std::domain_error("harmap: point lies outside the closed unit disk");
}

inline cplx evaluate(const HarmonicMap& map, cplx z) {
  require_in_closed_disk(z);
  return map.h().eval(z) + std::conj(map.g().eval(z));
}

/// First-order data of f at a point. For the Wirtinger pair, fz = h'(z) and
/// fzbar = conj(g'(z)); the Jacobian is computed in the factored form
/// (|fz|-|fzbar|)(|fz|+|fzbar|) so that |J| = lambda_big * lambda_small holds
/// exactly in floating point.
struct LocalData {
  cplx value;
  cplx fz;
  cplx fzbar;
  double lambda_big = 0.0;    // |fz| + |fzbar|
  double lambda_small = 0.0;  // | |fz| - |fzbar| |
  double jacobian = 0.0;
  double dilatation_mod = 0.0;  // |g'(z)/h'(z)|, +inf when h'=0 and g' != 0
  bool degenerate = false;      // h'(z) = g'(z) = 0
};

inline LocalData local_data(const HarmonicMap& map, cplx z) {
  require_in_closed_disk(z);
  LocalData d;
  const cplx hp = map.dh().eval(z);
  const cplx gp = map.dg().eval(z);
  d.value = map.h().eval(z) + std::conj(map.g().eval(z));
  d.fz = hp;
  d.fzbar = std::conj(gp);
  const double ah = std::abs(hp);
  const double ag = std::abs(gp);
  d.lambda_big = ah + ag;
  d.lambda_small = std::fabs(ah - ag);
  d.jacobian = (ah - ag) * (ah + ag);
  if (ah == 0.0 && ag == 0.0) {
    d.degenerate = true;
  } else if (ah == 0.0) {
    d.dilatation_mod = std::numeric_limits<double>::infinity();
  } else {
    d.dilatation_mod = ag / ah;
  }
  return d;
}

struct SenseCheck {
  bool preserving = false;
  cplx witness;  // point with |g'| >= |h'| when preserving is false
  double abs_hp = 0.0, abs_gp = 0.0;
};

/// Samples the open disk D_r (radii strictly below r). Sense preservation
/// means |g'| < |h'| at every sample; degenerate points fail it too.
inline SenseCheck sense_preserving_on(const HarmonicMap& map, double r, const DiskGrid& grid = {}) {
  if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("sense_preserving_on: need 0 < r <= 1");
  SenseCheck out;
  out.preserving = true;
  for_each_grid_point(grid, r, RadialSpan::open, [&](cplx z) {
    if (!out.preserving) return;
    const cplx hp = map.dh().eval(z);
    const cplx gp = map.dg().eval(z);
    const double ah = std::abs(hp), ag = std::abs(gp);
    if (!(ag < ah)) {
      out.preserving = false;
      out.witness = z;
      out.abs_hp = ah;
      out.abs_gp = ag;
    }
  });
  return out;
}

}  // namespace harmap
