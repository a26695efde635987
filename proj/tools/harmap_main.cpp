// Command-line front end: loads mapping files, runs the analysis passes, and
// prints a deterministic report. Exit codes: 0 all checks pass, 1 a check
// failed, 2 input/file error, 3 parameter or hypothesis rejected.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <harmap/harmap.hpp>

namespace {

using namespace harmap;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accumulates the report; everything lands on stdout in one deterministic
// pass (timing goes to stderr so reruns stay byte-identical).
struct Report {
  bool csv = false;
  std::vector<std::string> body;
  int checks = 0;
  int passed = 0;

  void kv(const std::string& key, const std::string& value) {
    body.push_back(csv ? "value," + key + "," + value : key + " = " + value);
  }
  void kv(const std::string& key, double value) { kv(key, fmt(value)); }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "yes" : "no")); }
  void row(const std::string& text_line, const std::string& csv_line) {
    body.push_back(csv ? csv_line : text_line);
  }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++checks;
    if (ok) ++passed;
    const std::string verdict = ok ? "PASS" : "FAIL";
    if (csv)
      body.push_back("check," + name + "," + verdict + (detail.empty() ? "" : "," + detail));
    else
      body.push_back("check " + name + ": " + verdict +
                     (detail.empty() ? "" : " (" + detail + ")"));
  }

  int print_and_code() const {
    for (const auto& line : body) std::printf("%s\n", line.c_str());
    if (checks > 0) {
      if (csv)
        std::printf("result,%s,%d,%d\n", passed == checks ? "PASS" : "FAIL", passed, checks);
      else
        std::printf("result: %s (%d/%d checks)\n", passed == checks ? "PASS" : "FAIL", passed,
                    checks);
    } else {
      std::printf(csv ? "result,OK\n" : "result: OK\n");
    }
    return passed == checks ? 0 : 1;
  }
};

struct Common {
  std::string grid_name = "default";
  std::uint64_t seed = 42;
  bool csv = false;
  int threads = 0;
  std::string file;

  DiskGrid grid() const {
    if (grid_name == "fast") return DiskGrid::fast();
    if (grid_name == "default") return DiskGrid::standard();
    if (grid_name == "precise") return DiskGrid::precise();
    throw HypothesisError("unknown grid preset: " + grid_name);
  }
};

void add_common(CLI::App* sub, Common& c, bool with_file) {
  sub->add_option("--grid", c.grid_name, "sampling preset: fast, default, precise")
      ->default_val("default");
  sub->add_option("--seed", c.seed, "seed for all sampled checks")->default_val(42);
  sub->add_flag("--csv", c.csv, "machine-readable output");
  sub->add_option("--threads", c.threads, "worker threads (0 = HARMAP_THREADS env or 1)")
      ->default_val(0);
  if (with_file) sub->add_option("file", c.file, "mapping file (JSON)")->required();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MappingParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MappingSpec load_with_header(const Common& c, Report& rep) {
  const std::string text = slurp(c.file);
  MappingSpec spec = parse_mapping_text(text);
  rep.kv("input", c.file);
  rep.kv("digest", fmt_hex(detail::fnv1a64(text)));
  rep.kv("label", spec.map.label().empty() ? std::string("(none)") : spec.map.label());
  rep.kv("degree", double(spec.map.degree()));
  rep.kv("seed", double(c.seed));
  rep.kv("grid", c.grid_name);
  return spec;
}

void report_class(Report& rep, const ClassReport& cls) {
  rep.kv("in_H", cls.in_H);
  rep.kv("normalized", cls.normalized);
  rep.kv("sense_preserving", cls.sense_preserving);
  rep.kv("alpha", cls.alpha);
  rep.kv("C", cls.C);
  rep.kv("K_estimate", cls.K_estimate);
}

int cmd_analyze(const Common& c) {
  Report rep;
  rep.csv = c.csv;
  MappingSpec spec = load_with_header(c, rep);
  const DiskGrid grid = c.grid();
  const ClassReport cls = class_constants(spec.map, 1.0, grid);
  report_class(rep, cls);
  for (const double r : {0.25, 0.5, 0.75, 1.0}) rep.kv("S(" + fmt(r) + ")", area_series(spec.map, r));

  const double r_q = 0.5;
  const double s_series = area_series(spec.map, r_q);
  const double s_quad = area_quadrature(spec.map, r_q, grid);
  rep.check("area routes agree",
            std::fabs(s_series - s_quad) <= 1e-8 * std::max(1.0, std::fabs(s_series)),
            "series " + fmt(s_series) + ", quadrature " + fmt(s_quad));
  if (cls.sense_preserving)
    rep.check("area nondecreasing in r", area_monotonicity_check(spec.map, 64));
  if (spec.expected_C)
    rep.check("expected C", std::fabs(cls.C - *spec.expected_C) <=
                                1e-6 * std::max(1.0, std::fabs(*spec.expected_C)),
              "got " + fmt(cls.C) + ", expected " + fmt(*spec.expected_C));
  if (spec.expected_alpha)
    rep.check("expected alpha", std::fabs(cls.alpha - *spec.expected_alpha) <=
                                    1e-6 * std::max(1.0, std::fabs(*spec.expected_alpha)),
              "got " + fmt(cls.alpha) + ", expected " + fmt(*spec.expected_alpha));
  if (spec.expected_K) {
    bool ok;
    if (std::isinf(*spec.expected_K))
      ok = std::isinf(cls.K_estimate);
    else
      ok = std::fabs(cls.K_estimate - *spec.expected_K) <= 1e-3 * std::max(1.0, *spec.expected_K);
    rep.check("expected K", ok, "got " + fmt(cls.K_estimate) + ", expected " + fmt(*spec.expected_K));
  }
  return rep.print_and_code();
}

struct LandauParams {
  double C = 0.0;
  double alpha = 0.0;
  int samples = 2000;
};

int cmd_landau(const Common& c, const LandauParams& p) {
  Report rep;
  rep.csv = c.csv;
  double C = p.C, alpha = p.alpha;
  std::optional<MappingSpec> spec;
  if (!c.file.empty()) {
    spec = load_with_header(c, rep);
    const ClassReport cls = class_constants(spec->map, 1.0, c.grid());
    report_class(rep, cls);
    if (!cls.in_H) throw HypothesisError("map is not in H, Landau radii do not apply");
    C = cls.C;
    alpha = cls.alpha;
  } else {
    rep.kv("seed", double(c.seed));
  }
  if (!(C > 0.0)) throw HypothesisError("need C > 0");
  const double q = BoundConstants::Q(C);
  if (!(alpha > 0.0 && alpha < q))
    throw HypothesisError("need 0 < alpha < Q(C) = " + fmt(q));
  const LandauReport lr = landau_radii(C, alpha);
  rep.kv("C", lr.C);
  rep.kv("alpha", lr.alpha);
  rep.kv("r0", lr.r0);
  rep.kv("Q", lr.Q);
  rep.kv("rho", lr.rho);
  rep.kv("R0", lr.R0);
  rep.kv("univalence_radius", lr.r0rho);
  rep.check("covering radius positive", lr.R0 > 0.0);
  if (spec) {
    const UnivalenceResult uni = univalence_check(spec->map, lr.r0rho, p.samples, c.seed);
    rep.check("univalent on certified disk", uni.ok,
              uni.degenerate ? "degenerate sample at " + fmt(uni.witness_a.real()) + "+" +
                                   fmt(uni.witness_a.imag()) + "i"
                             : "");
    const CoveringResult cov = covering_check(spec->map, lr.r0rho, lr.R0);
    rep.check("covers disk of radius R0", cov.ok && !cov.inconclusive,
              "min modulus " + fmt(cov.min_modulus) + ", winding " + std::to_string(cov.winding));
  }
  return rep.print_and_code();
}

struct BoundsParams {
  double C = 0.0;
  double K = 0.0;      // 0 = not given
  double alpha = 0.0;  // 0 = not given
  int n_max = 8;
};

int cmd_bounds(const Common& c, const BoundsParams& p) {
  Report rep;
  rep.csv = c.csv;
  if (c.file.empty()) {
    if (!(p.C > 0.0)) throw HypothesisError("need --C > 0");
    if (p.n_max < 1) throw HypothesisError("need --n-max >= 1");
    rep.kv("C", p.C);
    if (p.K > 0.0) rep.kv("K", p.K);
    if (p.alpha > 0.0) rep.kv("alpha", p.alpha);
    rep.row("  n     bound_area      bound_qr   bound_alpha", "n,bound_area,bound_qr,bound_alpha");
    for (int n = 1; n <= p.n_max; ++n) {
      const std::string hc = fmt(bound_HC(p.C, n));
      const std::string qr = p.K > 0.0 ? fmt(bound_quasiregular(p.C, p.K, n)) : "-";
      const std::string ha =
          p.alpha > 0.0 && n >= 2 ? fmt(bound_H_alpha(p.C, p.alpha, n)) : "-";
      char line[160];
      std::snprintf(line, sizeof line, "%3d %14s %13s %13s", n, hc.c_str(), qr.c_str(), ha.c_str());
      rep.row(line, std::to_string(n) + "," + hc + "," + qr + "," + ha);
    }
    return rep.print_and_code();
  }
  MappingSpec spec = load_with_header(c, rep);
  const MapBoundsReport mb = verify_map_bounds(spec.map, 1.0, c.grid());
  report_class(rep, mb.constants);
  for (const auto& reason : mb.skipped) rep.kv("skipped", reason);
  if (!mb.hypothesis_ok) throw HypothesisError("no coefficient bound applies to this map");
  rep.row("  n      |a_n|+|b_n|     bound_area      bound_qr   bound_alpha        margin",
          "n,coeff_sum,bound_area,bound_qr,bound_alpha,margin");
  for (const auto& row : mb.rows) {
    const std::string hc = row.hc ? fmt(*row.hc) : "-";
    const std::string qr = row.quasiregular ? fmt(*row.quasiregular) : "-";
    const std::string ha = row.h_alpha ? fmt(*row.h_alpha) : "-";
    char line[200];
    std::snprintf(line, sizeof line, "%3d %16s %14s %13s %13s %13s", row.n,
                  fmt(row.coeff_sum).c_str(), hc.c_str(), qr.c_str(), ha.c_str(),
                  fmt(row.margin).c_str());
    rep.row(line, std::to_string(row.n) + "," + fmt(row.coeff_sum) + "," + hc + "," + qr + "," +
                      ha + "," + fmt(row.margin));
  }
  rep.kv("worst_margin", mb.worst_margin);
  rep.kv("worst_n", double(mb.worst_n));
  rep.check("all applicable bounds hold", mb.ok);
  return rep.print_and_code();
}

struct NormsParams {
  int pairs = 4096;
};

int cmd_norms(const Common& c, const NormsParams& p) {
  Report rep;
  rep.csv = c.csv;
  MappingSpec spec = load_with_header(c, rep);
  const DiskGrid grid = c.grid();
  const double bloch = bloch_norm(spec.map, grid);
  const double origin = std::abs(evaluate(spec.map, cplx{0.0, 0.0}));
  const double colonna = colonna_ratio_sup(spec.map, p.pairs, c.seed);
  rep.kv("bloch_norm", bloch);
  rep.kv("bloch_seminorm", bloch - origin);
  rep.kv("colonna_ratio_sup", colonna);
  const double semi = bloch - origin;
  const double scale = std::max({1e-12, semi, colonna});
  rep.check("distance-ratio sup matches gradient seminorm",
            std::fabs(semi - colonna) <= 0.02 * scale,
            "seminorm " + fmt(semi) + ", ratio sup " + fmt(colonna));
  return rep.print_and_code();
}

struct BmoParams {
  double r = 0.5;
  double beta = 1.0;
  double scale = 1.0;
  int n_boundary = 256;
};

int cmd_bmo(const Common& c, const BmoParams& p) {
  Report rep;
  rep.csv = c.csv;
  MappingSpec spec = load_with_header(c, rep);
  const DiskGrid grid = c.grid();
  const Majorant om{p.beta, p.scale};
  om.validate();
  if (!(p.r > 0.0 && p.r < 1.0)) throw HypothesisError("need 0 < --r < 1");
  rep.kv("r", p.r);
  rep.kv("omega_beta", om.beta);
  rep.kv("omega_scale", om.scale);
  const double M = gradient_majorant_constant(spec.map, om, grid);
  rep.kv("gradient_constant", M);
  const BoundaryFunction trace = boundary_trace(spec.map, p.r, p.n_boundary);
  const double norm = bmo_norm(trace, grid);
  rep.kv("bmo_norm", norm);
  if (!(M > 0.0)) {
    rep.check("trace norm within majorant bound", norm <= 1e-12, "constant map");
    return rep.print_and_code();
  }
  const double bound = bmo_bound_majorant(M, p.r, om);
  rep.kv("bmo_bound", bound);
  rep.check("trace norm within majorant bound", norm <= bound * (1.0 + 1e-9) + 1e-12,
            "norm " + fmt(norm) + ", bound " + fmt(bound));
  return rep.print_and_code();
}

struct ConvexParams {
  double r = 0.5;
  int pairs = 10000;
  int n_boundary = 2048;
};

int cmd_convex(const Common& c, const ConvexParams& p) {
  Report rep;
  rep.csv = c.csv;
  MappingSpec spec = load_with_header(c, rep);
  if (!(p.r > 0.0 && p.r < 1.0)) throw HypothesisError("need 0 < --r < 1");
  std::vector<double> ladder;
  for (int k = 1; k <= 8; ++k) ladder.push_back(p.r * double(k) / 8.0);
  const ConvexityResult conv = fully_convex_check(spec.map, ladder, p.n_boundary);
  for (std::size_t i = 0; i < conv.radii.size(); ++i)
    rep.kv("convex(r=" + fmt(conv.radii[i]) + ")", bool(conv.convex[i]));
  rep.kv("fully_convex", conv.ok);
  if (conv.inconclusive) rep.kv("inconclusive", true);
  if (!conv.ok) {
    rep.kv("first_failing_radius", conv.first_failing_radius);
    rep.kv("sandwich", std::string("skipped (image not convex up to r)"));
    return rep.print_and_code();
  }
  const SandwichResult sw = sandwich_check(spec.map, p.r, p.pairs, c.seed);
  if (!sw.hypothesis_ok) {
    rep.kv("sandwich", "skipped (" + sw.failure_reason + ")");
    return rep.print_and_code();
  }
  rep.kv("sandwich_lower_margin", sw.worst_lower_margin);
  rep.kv("sandwich_upper_margin", sw.worst_upper_margin);
  rep.kv("h_collisions", double(sw.h_collisions));
  rep.check("analytic part sandwiched by displacement", sw.ok);
  return rep.print_and_code();
}

struct LipschitzParams {
  double r = 0.5;
  double beta = 1.0;
  double scale = 1.0;
  int pairs = 4096;
};

int cmd_lipschitz(const Common& c, const LipschitzParams& p) {
  Report rep;
  rep.csv = c.csv;
  MappingSpec spec = load_with_header(c, rep);
  const Majorant om{p.beta, p.scale};
  om.validate();
  if (!(p.r > 0.0 && p.r < 1.0)) throw HypothesisError("need 0 < --r < 1");
  rep.kv("r", p.r);
  rep.kv("omega_beta", om.beta);
  rep.kv("omega_scale", om.scale);
  const double full =
      lipschitz_estimate(spec.map, om, p.r, LipschitzVariant::full_disk, p.pairs, c.seed).constant;
  const double mod =
      lipschitz_estimate(spec.map, om, p.r, LipschitzVariant::modulus, p.pairs, c.seed).constant;
  const double m2b = lipschitz_estimate(spec.map, om, p.r, LipschitzVariant::modulus_to_boundary,
                                        p.pairs, c.seed)
                         .constant;
  rep.kv("lipschitz_full", full);
  rep.kv("lipschitz_modulus", mod);
  rep.kv("lipschitz_modulus_boundary", m2b);
  rep.check("variant estimates nest", m2b <= mod && mod <= full);
  const EquivalenceReport eq =
      equivalence_witness(spec.map, om, p.r, c.grid(), p.pairs / 2, c.seed);
  if (!eq.hypothesis_ok) throw HypothesisError(eq.failure_reason);
  rep.kv("M3", eq.M3);
  rep.kv("proof_K", eq.proof_K);
  rep.kv("chain_max_ratio", eq.chain_max_ratio);
  rep.kv("implied_full_constant", eq.implied_constant);
  rep.check("gradient bounded by boundary-modulus chain", eq.chain_ok);
  return rep.print_and_code();
}

int cmd_verify_all(const Common& c) {
  Report rep;
  rep.csv = c.csv;
  MappingSpec spec = load_with_header(c, rep);
  const DiskGrid grid = c.grid();
  const HarmonicMap& map = spec.map;
  const ClassReport cls = class_constants(map, 1.0, grid);
  report_class(rep, cls);

  const double s_series = area_series(map, 0.5);
  const double s_quad = area_quadrature(map, 0.5, grid);
  rep.check("area routes agree",
            std::fabs(s_series - s_quad) <= 1e-8 * std::max(1.0, std::fabs(s_series)));
  if (cls.sense_preserving) {
    rep.check("area nondecreasing in r", area_monotonicity_check(map, 64));
    const InverseIdentityResult inv = inverse_derivative_identity_check(map, grid);
    rep.check("inverse derivative identity", inv.ok, "max residual " + fmt(inv.max_residual));
  } else {
    rep.kv("skipped", "monotonicity and inverse identity need a sense-preserving map");
  }

  const MapBoundsReport mb = verify_map_bounds(map, 1.0, grid);
  for (const auto& reason : mb.skipped) rep.kv("skipped", reason);
  if (mb.hypothesis_ok)
    rep.check("coefficient bounds hold", mb.ok, "worst margin " + fmt(mb.worst_margin));

  if (cls.in_H && cls.C > 0.0 && cls.alpha > 0.0 && cls.alpha < BoundConstants::Q(cls.C)) {
    const LandauReport lr = landau_radii(cls.C, cls.alpha);
    rep.kv("rho", lr.rho);
    rep.kv("R0", lr.R0);
    rep.kv("univalence_radius", lr.r0rho);
    rep.check("univalent on certified disk",
              univalence_check(map, lr.r0rho, 2000, c.seed).ok);
    const CoveringResult cov = covering_check(map, lr.r0rho, lr.R0);
    rep.check("covers disk of radius R0", cov.ok && !cov.inconclusive);
  } else {
    rep.kv("skipped", "Landau radii need membership in H with 0 < alpha < Q(C)");
  }

  const double bloch = bloch_norm(map, grid);
  const double origin = std::abs(evaluate(map, cplx{0.0, 0.0}));
  const double colonna = colonna_ratio_sup(map, 4096, c.seed);
  rep.kv("bloch_norm", bloch);
  const double semi = bloch - origin;
  rep.check("distance-ratio sup matches gradient seminorm",
            std::fabs(semi - colonna) <= 0.02 * std::max({1e-12, semi, colonna}));

  const Majorant om{1.0, 1.0};
  const double M = gradient_majorant_constant(map, om, grid);
  if (M > 0.0) {
    const double norm = bmo_norm(boundary_trace(map, 0.5, 256), grid);
    const double bound = bmo_bound_majorant(M, 0.5, om);
    rep.kv("bmo_norm", norm);
    rep.kv("bmo_bound", bound);
    rep.check("trace norm within majorant bound", norm <= bound * (1.0 + 1e-9) + 1e-12);
  }

  if (cls.in_H) {
    const EquivalenceReport eq = equivalence_witness(map, om, 0.5, grid, 1024, c.seed);
    if (eq.hypothesis_ok)
      rep.check("gradient bounded by boundary-modulus chain", eq.chain_ok);
    std::vector<double> ladder;
    for (int k = 1; k <= 8; ++k) ladder.push_back(0.5 * double(k) / 8.0);
    const ConvexityResult conv = fully_convex_check(map, ladder, 1024);
    rep.kv("fully_convex_to_half", conv.ok);
    if (conv.ok) {
      const SandwichResult sw = sandwich_check(map, 0.5, 4096, c.seed);
      if (sw.hypothesis_ok)
        rep.check("analytic part sandwiched by displacement", sw.ok);
    }
  }
  return rep.print_and_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis toolkit for planar harmonic mappings f = h + conj(g)"};
  app.require_subcommand(1);

  Common c_analyze, c_landau, c_bounds, c_norms, c_bmo, c_convex, c_lip, c_all;
  LandauParams lp;
  BoundsParams bp;
  NormsParams np;
  BmoParams mp;
  ConvexParams cp;
  LipschitzParams pp;

  auto* analyze = app.add_subcommand("analyze", "class constants and area function of a map");
  add_common(analyze, c_analyze, true);

  auto* landau = app.add_subcommand("landau", "univalence and covering radii");
  add_common(landau, c_landau, false);
  landau->add_option("file", c_landau.file, "mapping file (optional; else use --C/--alpha)");
  landau->add_option("--C", lp.C, "area-class constant");
  landau->add_option("--alpha", lp.alpha, "|f_z(0)|");
  landau->add_option("--samples", lp.samples, "univalence sample count")->default_val(2000);

  auto* bounds = app.add_subcommand("bounds", "coefficient bound table or per-map verification");
  add_common(bounds, c_bounds, false);
  bounds->add_option("file", c_bounds.file, "mapping file (optional; else use --C/--K/--alpha)");
  bounds->add_option("--C", bp.C, "area-class constant");
  bounds->add_option("--K", bp.K, "quasiregularity constant");
  bounds->add_option("--alpha", bp.alpha, "|f_z(0)|");
  bounds->add_option("--n-max", bp.n_max, "largest coefficient index")->default_val(8);

  auto* norms = app.add_subcommand("norms", "Bloch-type norm and the distance-ratio sup");
  add_common(norms, c_norms, true);
  norms->add_option("--pairs", np.pairs, "sample pairs")->default_val(4096);

  auto* bmo = app.add_subcommand("bmo", "boundary trace BMO norm against the majorant bound");
  add_common(bmo, c_bmo, true);
  bmo->add_option("--r", mp.r, "trace radius")->default_val(0.5);
  bmo->add_option("--beta", mp.beta, "majorant exponent in (0,1]")->default_val(1.0);
  bmo->add_option("--scale", mp.scale, "majorant scale")->default_val(1.0);
  bmo->add_option("--n-boundary", mp.n_boundary, "trace samples (power of two >= 64)")
      ->default_val(256);

  auto* convex = app.add_subcommand("convex", "image convexity and the displacement sandwich");
  add_common(convex, c_convex, true);
  convex->add_option("--r", cp.r, "top radius of the ladder")->default_val(0.5);
  convex->add_option("--pairs", cp.pairs, "sandwich sample pairs")->default_val(10000);
  convex->add_option("--n-boundary", cp.n_boundary, "curve samples per radius")->default_val(2048);

  auto* lip = app.add_subcommand("lipschitz", "Lipschitz-type constants and the proof chain");
  add_common(lip, c_lip, true);
  lip->add_option("--r", pp.r, "disk radius")->default_val(0.5);
  lip->add_option("--beta", pp.beta, "majorant exponent in (0,1]")->default_val(1.0);
  lip->add_option("--scale", pp.scale, "majorant scale")->default_val(1.0);
  lip->add_option("--pairs", pp.pairs, "sample pairs")->default_val(4096);

  auto* all = app.add_subcommand("verify-all", "every applicable check in one pass");
  add_common(all, c_all, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    Common* active = nullptr;
    if (analyze->parsed()) active = &c_analyze;
    else if (landau->parsed()) active = &c_landau;
    else if (bounds->parsed()) active = &c_bounds;
    else if (norms->parsed()) active = &c_norms;
    else if (bmo->parsed()) active = &c_bmo;
    else if (convex->parsed()) active = &c_convex;
    else if (lip->parsed()) active = &c_lip;
    else active = &c_all;

    int threads = active->threads;
    if (threads <= 0) {
      if (const char* env = std::getenv("HARMAP_THREADS")) threads = std::atoi(env);
    }
    runtime::set_threads(threads > 0 ? threads : 1);

    if (analyze->parsed()) rc = cmd_analyze(c_analyze);
    else if (landau->parsed()) rc = cmd_landau(c_landau, lp);
    else if (bounds->parsed()) rc = cmd_bounds(c_bounds, bp);
    else if (norms->parsed()) rc = cmd_norms(c_norms, np);
    else if (bmo->parsed()) rc = cmd_bmo(c_bmo, mp);
    else if (convex->parsed()) rc = cmd_convex(c_convex, cp);
    else if (lip->parsed()) rc = cmd_lipschitz(c_lip, pp);
    else rc = cmd_verify_all(c_all);
  } catch (const MappingParseError& e) {
    if (e.line > 0)
      std::fprintf(stderr, "error: %s (line %d, column %d)\n", e.what(), e.line, e.col);
    else
      std::fprintf(stderr, "error: %s\n", e.what());
    rc = 2;
  } catch (const HypothesisError& e) {
    std::fprintf(stderr, "hypothesis rejected: %s\n", e.what());
    rc = 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    rc = 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    rc = 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    rc = 2;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::fprintf(stderr, "# elapsed %lld ms\n", static_cast<long long>(elapsed.count()));
  return rc;
}
