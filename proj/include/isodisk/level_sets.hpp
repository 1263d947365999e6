// Superlevel-set distribution functions a(mu), the inverse mu(a), the
// cumulative H(a), the differential inequality relating them, the auxiliary
// P(a), and the Bol inequality check.
//
// Superlevel integration is plain node-indicator summation: a node counts
// iff v(node) > mu, with strict inequality. Accuracy is controlled by grid
// refinement; no sub-cell interface reconstruction is attempted.
#ifndef ISODISK_LEVEL_SETS_HPP
#define ISODISK_LEVEL_SETS_HPP

#include <algorithm>
#include <cstddef>
#include <limits>

#include "isodisk/check_report.hpp"
#include "isodisk/geometry.hpp"
#include "isodisk/polar_grid.hpp"
#include "isodisk/radial.hpp"

namespace isodisk {

/// Canonical radial test family u = log(4 beta^2 / (1 + beta^2 r^2)^2):
/// the curvature-1 conformal factor. h is the constant boundary value u(1)
/// and v = u - h vanishes on the boundary circle.
struct BubbleField {
  double beta = 1.0;
  double h_const = 0.0;  // u(1)
  ScalarField u;
  ScalarField v;
};

inline BubbleField build_bubble_field(double beta,
                                      std::shared_ptr<const PolarGrid> grid) {
  if (!(beta > 0.0)) throw InvalidInput("build_bubble_field: beta must be > 0");
  BubbleField out;
  out.beta = beta;
  out.h_const = bubble_u(beta, 1.0);
  out.u = sample_radial(grid, [beta](double r) { return bubble_u(beta, r); });
  out.v = ScalarField(grid);
  for (std::size_t k = 0; k < out.u.values.size(); ++k)
    out.v.values[k] = out.u.values[k] - out.h_const;
  return out;
}

/// Sampled distribution function: levels are strictly increasing, masses
/// a_k = (weighted area of {v > mu_k}) non-increasing. `total` is the full
/// weighted area, attained as mu drops below min v.
struct DistributionProfile {
  std::vector<double> levels;
  std::vector<double> masses;
  double total = 0.0;
  std::string weight_tag;
};

namespace detail {

// Index of the first level >= value; nodes count toward masses[k] for k < b.
inline std::size_t level_bucket(double value, double vmin, double dlevel,
                                std::size_t nlevels) {
  if (!(value > vmin)) return 0;
  double t = (value - vmin) / dlevel;
  auto b = static_cast<std::size_t>(std::ceil(t));
  if (b > nlevels) b = nlevels;
  // nudge against roundoff at exact multiples: mu_k == value must not count
  while (b > 0 && vmin + (static_cast<double>(b) - 1.0) * dlevel >= value) --b;
  while (b < nlevels && vmin + static_cast<double>(b) * dlevel < value) ++b;
  return b;
}

// Suffix-summed superlevel masses of `density * weight` over the level grid.
// Equivalent to the per-level node-indicator sum, organized by bucket.
inline std::vector<double> superlevel_masses(const ScalarField& v,
                                             const std::vector<double>& density,
                                             const std::vector<double>& levels) {
  const PolarGrid& g = *v.grid;
  const std::size_t nlevels = levels.size();
  const double vmin = levels.front();
  const double dlevel = nlevels > 1 ? (levels.back() - vmin) / static_cast<double>(nlevels - 1)
                                    : 1.0;
  std::vector<double> bucket(nlevels + 1, 0.0);
  for (int i = 0; i < g.nr; ++i)
    for (int j = 0; j < g.ntheta; ++j) {
      const std::size_t idx = g.index(i, j);
      bucket[level_bucket(v.values[idx], vmin, dlevel, nlevels)] +=
          density[idx] * g.weight(i, j);
    }
  std::vector<double> masses(nlevels, 0.0);
  double acc = 0.0;
  for (std::size_t k = nlevels; k-- > 0;) {
    acc += bucket[k + 1];
    masses[k] = acc;
  }
  return masses;
}

}  // namespace detail

/// a(mu_k) for nlevels equispaced levels spanning [min v, max v] over the
/// grid nodes. weight must be strictly positive.
inline DistributionProfile distribution(const ScalarField& v,
                                        const ScalarField& weight, int nlevels,
                                        std::string weight_tag = "") {
  if (nlevels < 8) throw InvalidInput("distribution: nlevels must be >= 8");
  if (v.grid != weight.grid)
    throw InvalidInput("distribution: v and weight must share a grid");
  if (!v.all_finite() || !weight.all_finite())
    throw InvalidInput("distribution: non-finite field values");
  double vmin = v.values.front(), vmax = v.values.front();
  for (double x : v.values) {
    vmin = std::min(vmin, x);
    vmax = std::max(vmax, x);
  }
  if (!(vmax - vmin > 1e-14 * (1.0 + std::abs(vmax))))
    throw DegenerateFieldError("distribution: field is constant");
  double wmin = weight.values.front();
  for (double x : weight.values) wmin = std::min(wmin, x);
  if (!(wmin > 0.0)) throw InvalidInput("distribution: weight must be > 0");

  DistributionProfile p;
  p.weight_tag = std::move(weight_tag);
  p.levels.resize(static_cast<std::size_t>(nlevels));
  for (int k = 0; k < nlevels; ++k)
    p.levels[static_cast<std::size_t>(k)] =
        vmin + (vmax - vmin) * static_cast<double>(k) / (nlevels - 1);
  const PolarGrid& g = *v.grid;
  double total = 0.0;
  for (int i = 0; i < g.nr; ++i)
    for (int j = 0; j < g.ntheta; ++j) total += weight.at(i, j) * g.weight(i, j);
  p.total = total;
  p.masses = detail::superlevel_masses(v, weight.values, p.levels);
  return p;
}

/// One representative index per distinct mass value: the knots of the
/// sampled staircase, each placed at the middle of its constant-mass run of
/// levels. FD estimates use these, not the raw level grid, so duplicate
/// masses never produce zero denominators, and the midpoint placement pairs
/// each mass with an unbiased level (the cut through a node ring happens
/// mid-plateau, not at its first level).
inline std::vector<std::size_t> knot_indices(const DistributionProfile& p) {
  std::vector<std::size_t> keep;
  std::size_t run_start = 0;
  for (std::size_t k = 1; k <= p.masses.size(); ++k) {
    if (k < p.masses.size()) {
      const double prev = p.masses[run_start];
      if (p.masses[k] > prev + 1e-12 * (1.0 + std::abs(prev)))
        throw InconsistencyError("profile masses are not non-increasing");
    }
    if (k == p.masses.size() || p.masses[k] < p.masses[run_start]) {
      keep.push_back(run_start + (k - 1 - run_start) / 2);
      run_start = k;
    }
  }
  return keep;
}

/// Piecewise-linear inverse mu(a) of a strictly decreasing profile.
class MuOfA {
 public:
  explicit MuOfA(const DistributionProfile& p) {
    const std::vector<std::size_t> keep = knot_indices(p);
    if (keep.size() < 2)
      throw InconsistencyError("mu_of_a: profile has no strictly decreasing part");
    // store by increasing mass
    for (auto it = keep.rbegin(); it != keep.rend(); ++it) {
      a_.push_back(p.masses[*it]);
      mu_.push_back(p.levels[*it]);
    }
  }

  double operator()(double a) const {
    if (a <= a_.front()) return mu_.front();
    if (a >= a_.back()) return mu_.back();
    const auto it = std::upper_bound(a_.begin(), a_.end(), a);
    const std::size_t hi = static_cast<std::size_t>(it - a_.begin());
    const std::size_t lo = hi - 1;
    const double t = (a - a_[lo]) / (a_[hi] - a_[lo]);
    return mu_[lo] + t * (mu_[hi] - mu_[lo]);
  }

  double min_mass() const { return a_.front(); }
  double max_mass() const { return a_.back(); }

 private:
  std::vector<double> a_, mu_;  // mass increasing, mu decreasing
};

/// H(a) = lambda * int_{v > mu(a)} e^u, sampled on the same level ladder as
/// the profile so each (a_k, H_k) pair shares its superlevel node set.
struct SampledH {
  double lambda = 0.0;
  std::vector<double> a;  // = profile masses
  std::vector<double> h;
};

inline SampledH H_of_a(const ScalarField& u_field, const ScalarField& v,
                       double lambda, const DistributionProfile& profile) {
  if (lambda < 0.0) throw InvalidInput("H_of_a: lambda must be >= 0");
  if (u_field.grid != v.grid)
    throw InvalidInput("H_of_a: fields must share a grid");
  std::vector<double> density(u_field.values.size());
  for (std::size_t k = 0; k < density.size(); ++k)
    density[k] = std::exp(u_field.values[k]);
  SampledH out;
  out.lambda = lambda;
  out.a = profile.masses;
  out.h = detail::superlevel_masses(v, density, profile.levels);
  for (double& x : out.h) x *= lambda;
  return out;
}

namespace detail {

// Knots restricted to a_k within [trim, 1-trim] of the total mass, for FD
// stencils away from the degenerate ends.
inline std::vector<std::size_t> interior_knots(const DistributionProfile& p,
                                               double trim) {
  const std::vector<std::size_t> keep = knot_indices(p);
  std::vector<std::size_t> out;
  const double lo = trim * p.total, hi = (1.0 - trim) * p.total;
  for (std::size_t m = 1; m + 1 < keep.size(); ++m) {
    const double a = p.masses[keep[m]];
    if (a >= lo && a <= hi) out.push_back(m);
  }
  return out;
}

}  // namespace detail

/// -d(mu)/da <= H(a) / (c a) at interior samples, centered differences on the
/// profile knots; c = 4 pi by default, 2 alpha in the curvature-threshold
/// variant. lhs is the worst violation, rhs = 0, slack = -lhs.
inline CheckReport diff_ineq_check(const DistributionProfile& profile,
                                   const SampledH& H, double tolerance = 1e-3,
                                   double denom_constant = 4.0 * kPi,
                                   double trim = 0.1) {
  if (H.a.size() != profile.masses.size())
    throw InvalidInput("diff_ineq_check: H was not sampled on this profile");
  const std::vector<std::size_t> keep = knot_indices(profile);
  const std::vector<std::size_t> interior = detail::interior_knots(profile, trim);
  if (interior.size() < 3)
    throw InvalidInput("diff_ineq_check: too few interior samples");
  double worst = -std::numeric_limits<double>::infinity();
  double worst_a = 0.0;
  std::string samples;
  const std::size_t stride = std::max<std::size_t>(1, interior.size() / 16);
  for (std::size_t t = 0; t < interior.size(); ++t) {
    const std::size_t m = interior[t];
    const std::size_t k0 = keep[m - 1], k1 = keep[m], k2 = keep[m + 1];
    const double dmu_da = (profile.levels[k2] - profile.levels[k0]) /
                          (profile.masses[k2] - profile.masses[k0]);
    const double a = profile.masses[k1];
    const double viol = -dmu_da - H.h[k1] / (denom_constant * a);
    if (viol > worst) {
      worst = viol;
      worst_a = a;
    }
    if (t % stride == 0) {
      if (!samples.empty()) samples += ";";
      samples += "a=" + fmt_double(a) + ",slack=" + fmt_double(-viol);
    }
  }
  CheckReport r = CheckReport::make("diff_ineq", worst, 0.0, -worst, tolerance);
  r.meta("samples", static_cast<int>(interior.size()));
  r.meta("worst_at_a", worst_a);
  r.meta("denom_constant", denom_constant);
  r.meta("per_sample_slack", samples);
  return r;
}

/// P(a) = a H'(a) - H(a) + H(a)^2 / (8 pi), sampled at interior knots with
/// centered-difference H'. The attached report checks monotone growth of P
/// in a within 1e-3 * max(1, max|P|).
struct PProfileResult {
  std::vector<double> a;
  std::vector<double> value;
  CheckReport monotonicity;
};

inline PProfileResult P_profile(const DistributionProfile& profile,
                                const SampledH& H, double tol_scale = 1e-3,
                                double trim = 0.1) {
  if (H.a.size() != profile.masses.size())
    throw InvalidInput("P_profile: H was not sampled on this profile");
  const std::vector<std::size_t> keep = knot_indices(profile);
  const std::vector<std::size_t> interior = detail::interior_knots(profile, trim);
  if (interior.size() < 3) throw InvalidInput("P_profile: too few interior samples");
  PProfileResult out;
  for (std::size_t m : interior) {
    const std::size_t k0 = keep[m - 1], k1 = keep[m], k2 = keep[m + 1];
    const double hp = (H.h[k2] - H.h[k0]) / (profile.masses[k2] - profile.masses[k0]);
    const double a = profile.masses[k1];
    const double h = H.h[k1];
    out.a.push_back(a);
    out.value.push_back(a * hp - h + h * h / (8.0 * kPi));
  }
  // P is sampled in decreasing a; monotone in a means non-increasing here.
  double maxabs = 0.0;
  for (double x : out.value) maxabs = std::max(maxabs, std::abs(x));
  const double tol = tol_scale * std::max(1.0, maxabs);
  double worst_rise = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t + 1 < out.value.size(); ++t)
    worst_rise = std::max(worst_rise, out.value[t + 1] - out.value[t]);
  out.monotonicity =
      CheckReport::make("p_monotone", worst_rise, 0.0, -worst_rise, tol);
  out.monotonicity.meta("max_abs_P", maxabs);
  out.monotonicity.meta("samples", static_cast<int>(out.value.size()));
  return out;
}

namespace detail {

inline CheckReport bol_report(double length, double metric_mass, double lambda,
                              double tolerance) {
  const double lhs = length * length;
  const double rhs = (4.0 * kPi - 0.5 * lambda * metric_mass) * metric_mass;
  CheckReport r = CheckReport::make("bol", lhs, rhs, lhs - rhs, tolerance);
  r.meta("boundary_length", length);
  r.meta("metric_area", metric_mass);
  r.meta("lambda", lambda);
  return r;
}

}  // namespace detail

/// Bol: (oint e^{u/2})^2 >= (4 pi - (lambda/2) M) M with M = int e^u.
/// slack = lhs - rhs. Overload for constant boundary trace of u.
inline CheckReport bol_check(const ScalarField& u_field, double u_boundary,
                             double lambda, double tolerance = 1e-8) {
  if (lambda < 0.0) throw InvalidInput("bol_check: lambda must be >= 0");
  const double length = kTwoPi * std::exp(0.5 * u_boundary);
  return detail::bol_report(length, metric_area(u_field), lambda, tolerance);
}

inline CheckReport bol_check(const ScalarField& u_field,
                             const FourierCoeffs& u_boundary, double lambda,
                             double tolerance = 1e-8) {
  if (lambda < 0.0) throw InvalidInput("bol_check: lambda must be >= 0");
  return detail::bol_report(boundary_length(u_boundary), metric_area(u_field),
                            lambda, tolerance);
}

}  // namespace isodisk

#endif
