// Scenario dispatch: builds the objects a named check needs, runs it at the
// requested resolution and again at half resolution for the refinement
// estimate, and assembles ReportDocuments. Also hosts the selftest suite,
// the fixed list of equality anchors exercised by `isodisk selftest`.
#ifndef ISODISK_RUNNER_HPP
#define ISODISK_RUNNER_HPP

#include <chrono>
#include <random>

#include "isodisk/alexandrov.hpp"
#include "isodisk/fiala.hpp"
#include "isodisk/green.hpp"
#include "isodisk/level_sets.hpp"
#include "isodisk/report.hpp"
#include "isodisk/scenario.hpp"

namespace isodisk {

struct Overrides {
  std::optional<int> nr, ntheta, nlevels;
  std::optional<double> tolerance;
  std::optional<unsigned long> seed;
};

namespace detail {

inline double default_tolerance(const std::string& check) {
  if (check == "green_bound") return 1e-6;
  if (check == "fiala") return 1e-6;  // applies to the normalized FD ratio
  if (check == "diff_ineq" || check == "p_monotone") return 1e-3;
  return 1e-8;
}

inline RadialProfile preset_profile(const std::string& name, double beta) {
  if (name == "flat") return radial_flat();
  if (name == "bubble") return radial_bubble(beta);
  if (name == "sphere") return radial_sphere();
  if (name == "hyperbolic") return radial_hyperbolic();
  throw InvalidInput("unknown preset '" + name + "'");
}

// presets whose metric area converges on the closed unit disk
inline void require_integrable_preset(const std::string& name) {
  if (name == "hyperbolic")
    throw UnsupportedScenarioError(
        "the hyperbolic factor has divergent area on the unit disk; "
        "use it with fiala/gauss_bonnet at r0 < 1");
}

inline int scaled(int v, double scale, int floor_v) {
  return std::max(floor_v, static_cast<int>(v * scale));
}

}  // namespace detail

/// Runs one check at the given resolution. `scale` shrinks every internal
/// quadrature knob together (the half-grid refinement pass uses 0.5).
inline CheckReport run_check(const Scenario& sc, const GridSpec& grid,
                             double scale = 1.0) {
  const double tol = sc.tolerance.value_or(detail::default_tolerance(sc.check));
  const DiskQuad quad{detail::scaled(grid.nr, scale, 16),
                      detail::scaled(grid.ntheta, scale, 16),
                      34,
                      detail::scaled(12, scale, 6)};

  if (sc.check == "nehari") {
    const FourierCoeffs u = sc.boundary_coeffs();
    const int m_max = detail::scaled(std::max(64, 4 * u.n_max()), scale,
                                     std::max(8, 2 * u.n_max()));
    return nehari_check(u, m_max, tol);
  }
  if (sc.check == "conformal_residual") {
    const FourierCoeffs u = sc.boundary_coeffs();
    const int m_max = std::max(64, 4 * u.n_max());
    const ConformalFactor cf = build_conformal_factor(u, m_max);
    const double resid = residual_check(cf, u, quad.nr, quad.ntheta);
    CheckReport r =
        CheckReport::make("conformal_residual", resid, 0.0, -resid, tol);
    r.meta("n_max", u.n_max());
    r.meta("m_max", m_max);
    r.meta("grid", std::to_string(quad.nr) + "x" + std::to_string(quad.ntheta));
    return r;
  }
  if (sc.check == "bol") {
    detail::require_integrable_preset(sc.preset_name);
    const RadialProfile prof = detail::preset_profile(sc.preset_name, sc.beta);
    auto g = PolarGrid::make(quad.nr, quad.ntheta);
    const ScalarField u_field = sample_radial(g, prof.u);
    return bol_check(u_field, prof.u(1.0), *sc.lambda, tol);
  }
  if (sc.check == "huber_point")
    return huber_point_check(sc.boundary_coeffs(), *sc.alpha, *sc.pole, quad, tol);
  if (sc.check == "huber_measure")
    return huber_measure_check(sc.boundary_coeffs(), sc.measure, quad, tol);
  if (sc.check == "huber_superlevel") {
    if (sc.preset_name != "bubble" && sc.preset_name != "sphere")
      throw UnsupportedScenarioError(
          "huber_superlevel needs the bubble preset (sphere = bubble beta 1)");
    const double beta = sc.preset_name == "sphere" ? 1.0 : sc.beta;
    return huber_superlevel_check(beta, sc.level.value_or(0.0), sc.measure,
                                  quad, tol);
  }
  if (sc.check == "alexandrov") {
    detail::require_integrable_preset(sc.preset_name);
    const RadialProfile prof = detail::preset_profile(sc.preset_name, sc.beta);
    auto g = PolarGrid::make(quad.nr, quad.ntheta);
    const CurvatureScenario cs = make_curvature_scenario(prof, *sc.K0, g);
    return alexandrov_check(cs, detail::scaled(grid.nlevels, scale, 16), tol);
  }
  if (sc.check == "green_bound")
    return green_level_bound_check(*sc.pole, sc.boundary_coeffs(),
                                   detail::scaled(grid.nlevels, scale, 8), 0.5,
                                   quad, tol);
  if (sc.check == "fiala") {
    const RadialProfile prof = detail::preset_profile(sc.preset_name, sc.beta);
    const ParallelTrace tr = parallel_flow(
        prof, *sc.r0, sc.p_max.value_or(0.5),
        sc.direction == "inward" ? FlowDirection::inward : FlowDirection::outward,
        1e-3 / scale);
    return fiala_ineq_check(tr, tol);
  }
  if (sc.check == "gauss_bonnet") {
    const RadialProfile prof = detail::preset_profile(sc.preset_name, sc.beta);
    return gauss_bonnet_check(prof, *sc.r0, tol, detail::scaled(64, scale, 16));
  }
  throw InvalidInput("run_check: unknown check '" + sc.check + "'");
}

inline CheckEntry run_check_with_refinement(const Scenario& sc,
                                            const GridSpec& grid) {
  CheckEntry entry;
  entry.report = run_check(sc, grid, 1.0);
  const CheckReport half = run_check(sc, grid, 0.5);
  entry.has_refinement = true;
  entry.refine_lhs = std::abs(entry.report.lhs - half.lhs);
  entry.refine_rhs = std::abs(entry.report.rhs - half.rhs);
  return entry;
}

inline ReportDocument run_scenario(const Scenario& sc) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.scenario_echo = scenario_to_json(sc);
  doc.checks.push_back(run_check_with_refinement(sc, sc.grid));
  doc.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return doc;
}

inline ReportDocument run_scenario_file(const std::string& path,
                                        const Overrides& ov) {
  json doc;
  {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open scenario file '" + path + "'");
    try {
      doc = json::parse(f);
    } catch (const json::parse_error& e) {
      throw SchemaError(path, std::string("not valid JSON: ") + e.what());
    }
  }
  Scenario sc = parse_scenario(doc);
  if (ov.nr) sc.grid.nr = std::max(32, *ov.nr);
  if (ov.ntheta) sc.grid.ntheta = std::max(64, *ov.ntheta);
  if (ov.nlevels) sc.grid.nlevels = std::max(16, *ov.nlevels);
  if (ov.tolerance) sc.tolerance = *ov.tolerance;
  return run_scenario(sc);
}

namespace detail {

// uniform doubles from explicit engine words; identical across compilers
class Rng {
 public:
  explicit Rng(unsigned long seed) : eng_(seed) {}
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 eng_;
};

// band-limited Hermitian boundary data with max|u| <= amplitude
inline FourierCoeffs random_boundary(Rng& rng, int n_max, double amplitude) {
  FourierCoeffs u(n_max);
  double l1 = 0.0;
  std::vector<cplx> raw(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const cplx c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    raw[static_cast<std::size_t>(n - 1)] = c;
    l1 += 2.0 * std::abs(c);
  }
  const double target = amplitude * rng.uniform(0.3, 1.0);
  const double s = l1 > 0.0 ? target / l1 : 0.0;
  for (int n = 1; n <= n_max; ++n) {
    u.set_coeff(n, s * raw[static_cast<std::size_t>(n - 1)]);
    u.set_coeff(-n, std::conj(s * raw[static_cast<std::size_t>(n - 1)]));
  }
  return u;
}

inline std::string two_digit(int k) {
  return (k < 10 ? "0" : "") + std::to_string(k);
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::string>> preset_list() {
  return {
      {"flat", "u = 0 (Euclidean metric)"},
      {"bubble", "u = log(4 b^2/(1+b^2 r^2)^2), curvature +1; takes beta"},
      {"sphere", "bubble with beta = 1 (round hemisphere over the disk)"},
      {"hyperbolic", "u = log(4/(1-r^2)^2), curvature -1, r < 1"},
  };
}

/// The equality-anchor suite behind `isodisk selftest`: extremal cases with
/// known closed forms, randomized Nehari/Stokes property anchors, and one
/// representative per checker. Deterministic for a fixed seed.
inline ReportDocument run_selftest(unsigned long seed = 20240601ul) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.scenario_echo = json{{"selftest", true}, {"seed", seed}};
  detail::Rng rng(seed);

  const auto add = [&doc](const Scenario& sc, const GridSpec& g,
                          const std::string& label) {
    CheckEntry e = run_check_with_refinement(sc, g);
    e.report.name += "/" + label;
    doc.checks.push_back(e);
  };
  const auto add_report = [&doc](CheckReport r, const std::string& label) {
    CheckEntry e;
    e.report = std::move(r);
    e.report.name += "/" + label;
    doc.checks.push_back(e);
  };

  GridSpec grid;  // defaults

  // Nehari anchors: constant (equality), cos theta, randomized slabs
  {
    Scenario sc;
    sc.check = "nehari";
    sc.boundary_kind = Scenario::BoundaryKind::fourier;
    sc.fourier_entries = {{0, 0.3, 0.0}};
    add(sc, grid, "const");
    sc.fourier_entries = {{1, 0.5, 0.0}, {-1, 0.5, 0.0}};
    add(sc, grid, "cos");
  }
  for (int k = 0; k < 20; ++k) {
    const FourierCoeffs u = detail::random_boundary(rng, 8, 1.0);
    add_report(nehari_check(u), "rand_" + detail::two_digit(k));
    const ConformalFactor cf = build_conformal_factor(u, 128);
    const double as = area_series(cf.g);
    const double ast = area_stokes(boundary_series(cf.g));
    CheckReport r = CheckReport::make("stokes_parseval", as, ast,
                                      -std::abs(as - ast), 1e-9);
    r.meta("n_max", u.n_max());
    add_report(r, "rand_" + detail::two_digit(k));
  }

  // conformal factor residual
  {
    Scenario sc;
    sc.check = "conformal_residual";
    sc.boundary_kind = Scenario::BoundaryKind::fourier;
    sc.fourier_entries = {{1, 0.5, 0.0}, {-1, 0.5, 0.0}};
    sc.grid = {32, 64, 16};
    sc.tolerance = 1e-10;
    add(sc, sc.grid, "cos");
  }

  // Bol equality on the bubble family, plus the flat control
  for (double beta : {0.5, 1.0, 2.0}) {
    Scenario sc;
    sc.check = "bol";
    sc.boundary_kind = Scenario::BoundaryKind::preset;
    sc.preset_name = "bubble";
    sc.beta = beta;
    sc.lambda = 2.0;
    add(sc, grid, "bubble_" + fmt_double(beta));
  }
  {
    Scenario sc;
    sc.check = "bol";
    sc.boundary_kind = Scenario::BoundaryKind::preset;
    sc.preset_name = "flat";
    sc.lambda = 0.0;
    add(sc, grid, "flat");
  }

  // level-set backbone on the bubble: differential inequality and P(a)
  {
    auto g = PolarGrid::make(256, 64);
    const BubbleField bb = build_bubble_field(1.0, g);
    ScalarField weight(g);
    for (double& x : weight.values) x = std::exp(bb.h_const);
    const DistributionProfile prof = distribution(bb.v, weight, 1 << 19);
    const SampledH H = H_of_a(bb.u, bb.v, 2.0, prof);
    add_report(diff_ineq_check(prof, H), "bubble_1");
    PProfileResult P = P_profile(prof, H);
    add_report(P.monotonicity, "bubble_1");
  }

  // Green machinery
  for (const cplx y : {cplx(0, 0), cplx(0.3, 0.4), cplx(0.9, 0)})
    add_report(green_flux_check(y),
               "pole_" + fmt_double(y.real()) + "_" + fmt_double(y.imag()));
  {
    Scenario sc;
    sc.check = "green_bound";
    sc.boundary_kind = Scenario::BoundaryKind::fourier;
    sc.fourier_entries = {{0, 0.0, 0.0}};
    sc.pole = cplx(0.0, 0.0);
    add(sc, grid, "centered");
    sc.pole = cplx(0.5, 0.0);
    add(sc, grid, "offset");
  }

  // Huber chain
  {
    Scenario sc;
    sc.check = "huber_point";
    sc.boundary_kind = Scenario::BoundaryKind::fourier;
    sc.fourier_entries = {{0, 0.0, 0.0}};
    sc.alpha = kPi;
    sc.pole = cplx(0.0, 0.0);
    add(sc, grid, "centered");
    sc.alpha = 0.0;
    add(sc, grid, "alpha_zero");
    sc.alpha = kPi;
    sc.pole = cplx(0.4, 0.0);
    add(sc, grid, "offset");
  }
  {
    Scenario sc;
    sc.check = "huber_measure";
    sc.boundary_kind = Scenario::BoundaryKind::fourier;
    sc.fourier_entries = {{0, 0.0, 0.0}};
    sc.has_measure = true;
    sc.measure.positive = {{kPi / 2, cplx(0.3, 0)}, {kPi / 2, cplx(-0.3, 0)}};
    add(sc, grid, "pair");
    sc.measure.positive = {{kPi, cplx(0, 0)}};
    sc.measure.negative = {{kPi / 2, cplx(0.5, 0)}};
    add(sc, grid, "signed");
  }
  {
    Scenario sc;
    sc.check = "huber_superlevel";
    sc.boundary_kind = Scenario::BoundaryKind::preset;
    sc.preset_name = "bubble";
    sc.beta = 1.0;
    sc.level = 0.0;
    add(sc, grid, "full_disk");
    sc.level = 2.0 * std::log(4.0 / 3.0);
    add(sc, grid, "half_mass");
    sc.level = 2.0 * std::log(1.6);
    sc.has_measure = true;
    sc.measure.positive = {{kPi, cplx(0, 0)}};
    add(sc, grid, "centered_atom");
  }

  // Alexandrov
  {
    Scenario sc;
    sc.check = "alexandrov";
    sc.boundary_kind = Scenario::BoundaryKind::preset;
    sc.preset_name = "bubble";
    sc.beta = 1.0;
    sc.K0 = 1.0;
    add(sc, grid, "bubble_K0_1");
    sc.K0 = 0.5;
    add(sc, grid, "bubble_K0_05");
    sc.preset_name = "flat";
    sc.K0 = 0.0;
    add(sc, grid, "flat_K0_0");
  }

  // Gauss-Bonnet and the parallel-length backbone
  for (const char* name : {"flat", "sphere", "hyperbolic"}) {
    Scenario sc;
    sc.check = "gauss_bonnet";
    sc.boundary_kind = Scenario::BoundaryKind::preset;
    sc.preset_name = name;
    sc.r0 = 0.5;
    add(sc, grid, std::string(name) + "_r05");
  }
  {
    Scenario sc;
    sc.check = "fiala";
    sc.boundary_kind = Scenario::BoundaryKind::preset;
    sc.preset_name = "sphere";
    sc.r0 = 1.0;
    sc.p_max = 0.7;
    add(sc, grid, "sphere_out");
    sc.preset_name = "flat";
    sc.p_max = 0.5;
    add(sc, grid, "flat_out");
    sc.direction = "inward";
    add(sc, grid, "flat_in");
    sc.preset_name = "hyperbolic";
    sc.r0 = 0.5;
    sc.direction = "outward";
    add(sc, grid, "hyperbolic_out");
  }

  doc.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return doc;
}

}  // namespace isodisk

#endif
