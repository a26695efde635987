#include <catch2/catch_amalgamated.hpp>

#include <harmap/harmap.hpp>

#include "support/testutil.hpp"

using namespace harmap;
using Catch::Approx;

namespace {

const HarmonicMap& identity_map() {
  static const HarmonicMap m(ComplexSeries{{0, 0}, {1, 0}}, ComplexSeries{{0, 0}});
  return m;
}

const HarmonicMap& half_fold() {
  static const HarmonicMap m(ComplexSeries{{0, 0}, {1, 0}},
                             ComplexSeries{{0, 0}, {0, 0}, {0.5, 0}});
  return m;
}

}  // namespace

TEST_CASE("hyperbolic distance spot values and symmetry") {
  CHECK(hyperbolic_distance({0.5, 0.0}, {0.0, 0.0}) ==
        Approx(0.54930614433405484570).epsilon(1e-14));
  CHECK(hyperbolic_distance({0.0, 0.0}, {0.0, 0.0}) == 0.0);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const cplx z = testutil::rand_point(rng, 0.9);
    const cplx w = testutil::rand_point(rng, 0.9);
    const double s = hyperbolic_distance(z, w);
    CHECK(hyperbolic_distance(w, z) == Approx(s).margin(1e-15));
    CHECK(s >= 0.0);
  }
  CHECK_THROWS_AS(hyperbolic_distance({1.0, 0.0}, {0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(hyperbolic_distance({0.0, 0.0}, {0.3, 1.0}), std::domain_error);
}

TEST_CASE("hyperbolic distance is a Moebius-invariant metric") {
  std::mt19937_64 rng(12);
  const cplx a{0.3, 0.1};
  const auto phi = [&](cplx z) { return (z - a) / (1.0 - std::conj(a) * z); };
  for (int trial = 0; trial < 500; ++trial) {
    const cplx z = testutil::rand_point(rng, 0.85);
    const cplx w = testutil::rand_point(rng, 0.85);
    const cplx v = testutil::rand_point(rng, 0.85);
    const double s = hyperbolic_distance(z, w);
    CHECK(hyperbolic_distance(phi(z), phi(w)) == Approx(s).margin(1e-12 * std::max(1.0, s)));
    const cplx rot = std::polar(1.0, 2.1);
    CHECK(hyperbolic_distance(rot * z, rot * w) == Approx(s).margin(1e-12 * std::max(1.0, s)));
    CHECK(s <= hyperbolic_distance(z, v) + hyperbolic_distance(v, w) + 1e-12);
  }
}

TEST_CASE("hyperbolic distance agrees with the direct atanh form") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10000; ++trial) {
    const cplx z = testutil::rand_point(rng, 0.9);
    const cplx w = testutil::rand_point(rng, 0.9);
    const double x = std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
    const double oracle = std::atanh(x);
    CHECK(hyperbolic_distance(z, w) == Approx(oracle).margin(1e-13 * std::max(1.0, oracle)));
  }
}

TEST_CASE("Bloch-type norm") {
  CHECK(bloch_norm(identity_map()) == Approx(1.0).margin(1e-14));
  CHECK(bloch_norm(HarmonicMap(ComplexSeries{{0.3, 0.4}}, ComplexSeries{{0, 0}})) ==
        Approx(0.5).margin(1e-14));
  // sup (1-|z|^2)(1+|z|) = 32/27 at |z| = 1/3.
  CHECK(bloch_norm(half_fold()) == Approx(32.0 / 27.0).epsilon(1e-3));
  CHECK(bloch_norm(half_fold(), DiskGrid::precise()) == Approx(32.0 / 27.0).epsilon(1e-5));
  // A constant shift enters only through |f(0)|.
  const HarmonicMap shifted(ComplexSeries{{2, 0}, {1, 0}}, ComplexSeries{{0, 0}});
  CHECK(bloch_norm(shifted) == Approx(2.0 + bloch_norm(identity_map())).margin(1e-12));
}

TEST_CASE("distance-quotient sup matches the Bloch seminorm") {
  CHECK(colonna_ratio_sup(identity_map()) == Approx(1.0).epsilon(0.02));
  CHECK(colonna_ratio_sup(HarmonicMap(ComplexSeries{{5, 1}}, ComplexSeries{{0, 0}})) == 0.0);
  const double semi = bloch_norm(half_fold(), DiskGrid::precise());  // |f(0)| = 0
  CHECK(colonna_ratio_sup(half_fold()) == Approx(semi).epsilon(0.02));
  CHECK_THROWS_AS(colonna_ratio_sup(identity_map(), 1), std::invalid_argument);

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 3; ++trial) {
    const HarmonicMap m = testutil::random_plain_map(rng, 3);
    const double s = bloch_norm(m, DiskGrid::precise()) - std::abs(evaluate(m, {0, 0}));
    if (s < 1e-9) continue;
    const double col = colonna_ratio_sup(m, 8192);
    CHECK(col == Approx(s).epsilon(0.03));
    CHECK(col <= s * (1.0 + 1e-6));  // sampled sup cannot beat the seminorm
  }
}

TEST_CASE("Poisson kernel") {
  for (const double th : {0.0, 1.0, 2.5, 6.0}) CHECK(poisson_kernel(th, {0, 0}) == 1.0);
  CHECK(poisson_kernel(0.0, {0.5, 0.0}) == Approx(3.0).epsilon(1e-14));
  CHECK(poisson_kernel(std::numbers::pi, {0.5, 0.0}) == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(poisson_kernel(0.0, {1.0, 0.0}), std::domain_error);
  // Uniform average over the circle is 1 (spectrally exact for |z| well inside).
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx z = testutil::rand_point(rng, 0.7);
    double sum = 0.0;
    const int n = 256;
    for (int j = 0; j < n; ++j) sum += poisson_kernel(2.0 * std::numbers::pi * j / n, z);
    CHECK(sum / n == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("boundary sample container validation") {
  std::vector<cplx> ok(128, cplx{1.0, 0.0});
  CHECK(BoundaryFunction(ok).size() == 128);
  CHECK(BoundaryFunction(ok).theta(32) == Approx(std::numbers::pi / 2.0));
  CHECK_FALSE(BoundaryFunction(ok).radius().has_value());
  CHECK(BoundaryFunction(ok, 0.5).radius().value() == 0.5);

  CHECK_THROWS_AS(BoundaryFunction(std::vector<cplx>(63)), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction(std::vector<cplx>(100)), std::invalid_argument);
  std::vector<cplx> bad(64);
  bad[10] = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
  CHECK_THROWS_AS(BoundaryFunction(bad), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction(ok, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction(ok, 0.0), std::invalid_argument);
}

TEST_CASE("Poisson extension reconstructs harmonic interiors") {
  // The trace of f on |z| = r extends to z -> f(rz).
  const BoundaryFunction tr_id = boundary_trace(identity_map(), 0.5, 256);
  const BoundaryFunction tr_hf = boundary_trace(half_fold(), 0.5, 256);
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 25; ++trial) {
    const cplx z = testutil::rand_point(rng, 0.8);
    CHECK(std::abs(poisson_extension(tr_id, z) - 0.5 * z) < 1e-10);
    const cplx want = evaluate(half_fold(), 0.5 * z);
    CHECK(std::abs(poisson_extension(tr_hf, z) - want) < 1e-10);
  }
  // At the center the extension is the plain average of the samples.
  cplx avg{0, 0};
  for (const cplx& v : tr_hf.values()) avg += v;
  avg /= double(tr_hf.size());
  CHECK(std::abs(poisson_extension(tr_hf, {0, 0}) - avg) < 1e-12);

  CHECK_THROWS_AS(boundary_trace(identity_map(), 1.5), std::domain_error);
  CHECK_THROWS_AS(boundary_trace(identity_map(), 0.5, 100), std::invalid_argument);
  CHECK_THROWS_AS(poisson_extension(tr_id, {1.0, 0.0}), std::domain_error);
}

TEST_CASE("mean-oscillation norm of boundary traces") {
  const DiskGrid small{16, 48, 2};
  // Constant trace has zero oscillation.
  CHECK(bmo_norm(BoundaryFunction(std::vector<cplx>(128, cplx{2.0, -1.0})), small) == 0.0);
  // Identity trace at radius r: Poisson variance is r^2 (1 - |z|^2), sup r^2.
  for (const double r : {0.25, 0.5, 0.75}) {
    CHECK(bmo_norm(boundary_trace(identity_map(), r, 256), small) == Approx(r).epsilon(1e-9));
  }
  // A constant shift of the samples is invisible to the norm.
  const BoundaryFunction base = boundary_trace(half_fold(), 0.5, 128);
  std::vector<cplx> shifted;
  for (const cplx& v : base.values()) shifted.push_back(v + cplx{3.0, 4.0});
  CHECK(bmo_norm(BoundaryFunction(shifted), small) ==
        Approx(bmo_norm(base, small)).margin(1e-10));
}

TEST_CASE("mean-oscillation bound from a gradient majorant") {
  CHECK(bmo_bound_majorant(1.0, 0.5, Majorant{1.0, 1.0}) ==
        Approx(1.1774100225154746910).epsilon(1e-12));
  // beta = 1/2 has the closed form 2 M r sqrt((2/r)(1 - sqrt(1-r))).
  for (const double r : {0.1, 0.5, 0.9}) {
    const double want = 2.0 * r * std::sqrt((2.0 / r) * (1.0 - std::sqrt(1.0 - r)));
    CHECK(bmo_bound_majorant(1.0, r, Majorant{0.5, 1.0}) == Approx(want).epsilon(1e-10));
  }
  // scale enters once through omega(1) and once through the integral.
  CHECK(bmo_bound_majorant(1.0, 0.5, Majorant{0.7, 2.0}) ==
        Approx(2.0 * bmo_bound_majorant(1.0, 0.5, Majorant{0.7, 1.0})).epsilon(1e-12));
  // Small r: the integral flattens to omega(1), so bound ~ 2 M omega(1) r.
  CHECK(bmo_bound_majorant(1.0, 1e-6, Majorant{1.0, 1.0}) / 1e-6 == Approx(2.0).epsilon(1e-4));
  CHECK_THROWS_AS(bmo_bound_majorant(0.0, 0.5, Majorant{}), std::domain_error);
  CHECK_THROWS_AS(bmo_bound_majorant(1.0, 1.0, Majorant{}), std::domain_error);
}

TEST_CASE("gradient majorant checks") {
  const Majorant lin{1.0, 1.0};
  CHECK(gradient_majorant_check(identity_map(), 1.0, lin));
  CHECK_FALSE(gradient_majorant_check(identity_map(), 0.5, lin));
  CHECK(gradient_majorant_constant(identity_map(), lin) == Approx(1.0).margin(1e-12));
  // Half-fold: Lambda = 1 + |z|, ratio (1+|z|)(1-|z|) peaks at the origin.
  CHECK(gradient_majorant_check(half_fold(), 1.0, lin));
  CHECK_FALSE(gradient_majorant_check(half_fold(), 0.9, lin));
  CHECK(gradient_majorant_constant(half_fold(), lin) == Approx(1.0).margin(1e-12));
  CHECK(gradient_majorant_constant(identity_map(), Majorant{0.5, 1.0}) ==
        Approx(1.0).margin(1e-12));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const HarmonicMap m = testutil::random_in_H(rng);
    for (const double beta : {0.5, 1.0}) {
      const Majorant om{beta, 1.0};
      const double c = gradient_majorant_constant(m, om, DiskGrid::fast());
      CHECK(gradient_majorant_check(m, c * (1.0 + 1e-9), om, DiskGrid::fast()));
    }
  }
}

TEST_CASE("trace norm stays under the majorant bound") {
  const DiskGrid small{16, 48, 2};
  const Majorant lin{1.0, 1.0};
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 4; ++trial) {
    const HarmonicMap m = testutil::random_in_H(rng);
    const double c = gradient_majorant_constant(m, lin, DiskGrid::fast());
    const double bound = bmo_bound_majorant(c, 0.5, lin);
    CHECK(bmo_norm(boundary_trace(m, 0.5, 256), small) <= bound);
  }
}

TEST_CASE("majorant family and regularity constants") {
  CHECK(Majorant{0.5, 2.0}(4.0) == Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS((Majorant{0.5, 1.0}(-1.0)), std::domain_error);
  CHECK_THROWS_AS((Majorant{0.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Majorant{1.5, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Majorant{0.5, 0.0}.validate()), std::invalid_argument);

  for (const double beta : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const MajorantRegularity reg = majorant_regularity_check(Majorant{beta, 1.0});
    CHECK(reg.cond1);
    CHECK(reg.cond2);
    CHECK_FALSE(reg.divergent_tail);
    CHECK(reg.M1 == Approx(1.0 / beta).epsilon(1e-6));
    CHECK(reg.M2 == Approx(1.0 / (1.0 - beta)).epsilon(1e-6));
    CHECK(reg.M_witness == std::max(reg.M1, reg.M2));
    // Regularity constants are scale-free.
    const MajorantRegularity big = majorant_regularity_check(Majorant{beta, 5.0});
    CHECK(big.M1 == Approx(reg.M1).epsilon(1e-9));
    CHECK(big.M2 == Approx(reg.M2).epsilon(1e-9));
  }

  const MajorantRegularity lin = majorant_regularity_check(Majorant{1.0, 1.0});
  CHECK(lin.cond1);
  CHECK_FALSE(lin.cond2);
  CHECK(lin.divergent_tail);
  CHECK(lin.M1 == Approx(1.0).epsilon(1e-6));
  CHECK(std::isinf(lin.M2));

  CHECK_THROWS_AS(majorant_regularity_check(Majorant{}, 0.0), std::domain_error);
  CHECK_THROWS_AS(majorant_regularity_check(Majorant{}, 1.0, 0), std::invalid_argument);
}
