// Green's function of the unit disk, potentials of finite signed atomic
// measures, and the Huber inequality chain.
//
// Conventions (fixed here once, used everywhere):
//   G(x,y) = (1/2pi) log(|1 - x conj(y)| / |x - y|), points as complex
//   numbers. G >= 0, vanishes for |x| = 1, is symmetric, and the outward
//   normal derivative integrates to -1 over the circle; the flux check
//   reports the magnitude, matching the unit-flux normalization.
//
//   An atom of weight alpha at y contributes 2 alpha G(x,y) to the
//   potential, so e^{potential} ~ |x-y|^{-alpha/pi} near the atom. The
//   origin-singular option alpha0 enters as an atom of weight 2 pi alpha0
//   at 0, i.e. p0(x) = 2 alpha0 log(1/|x|); alpha0 therefore adds
//   2 pi alpha0 to the positive mass that the Huber constant sees.
//
// Singular integrals: a single atom is pulled to the origin by a disk
// automorphism (G is invariant), leaving one radial algebraic singularity
// integrated on dyadically graded panels. Measures with several atoms use
// a partition of unity: graded local polar patches around each atom plus
// the master grid on the smooth remainder.
#ifndef ISODISK_GREEN_HPP
#define ISODISK_GREEN_HPP

#include <algorithm>
#include <functional>
#include <limits>

#include "isodisk/check_report.hpp"
#include "isodisk/geometry.hpp"
#include "isodisk/polar_grid.hpp"
#include "isodisk/radial.hpp"

namespace isodisk {

inline double green_disk(cplx x, cplx y) {
  if (std::abs(y) >= 1.0) throw InvalidInput("green_disk: y must be interior");
  if (std::abs(x) > 1.0 + 1e-12)
    throw InvalidInput("green_disk: x must lie in the closed disk");
  const double dist = std::abs(x - y);
  if (dist == 0.0) throw SingularityError("green_disk: x == y");
  return std::log(std::abs(1.0 - x * std::conj(y)) / dist) / kTwoPi;
}

/// |oint d_nu G dsigma| over the unit circle by trapezoid quadrature,
/// checked against 1. The radial derivative comes from differentiating the
/// closed form: d_r log|f(z)| = Re(e^{i theta} f'(z)/f(z)).
inline CheckReport green_flux_check(cplx y, int ntheta = 4096,
                                    double tolerance = 1e-8) {
  if (std::abs(y) >= 1.0)
    throw InvalidInput("green_flux_check: y must be interior");
  const double dtheta = kTwoPi / ntheta;
  double acc = 0.0;
  for (int k = 0; k < ntheta; ++k) {
    const cplx z = std::polar(1.0, dtheta * k);
    const cplx term = -std::conj(y) / (1.0 - z * std::conj(y)) - 1.0 / (z - y);
    acc += (z * term).real();
  }
  const double flux = std::abs(acc * dtheta / kTwoPi);
  CheckReport r = CheckReport::make("green_flux", flux, 1.0,
                                    -std::abs(flux - 1.0), tolerance);
  r.meta("pole", "(" + fmt_double(y.real()) + "," + fmt_double(y.imag()) + ")");
  r.meta("ntheta", ntheta);
  return r;
}

namespace detail {

// Disk automorphism taking 0 to y; G(mobius(w), y) = G(w, 0) = log(1/|w|)/2pi.
inline cplx mobius(cplx y, cplx w) { return (w + y) / (1.0 + std::conj(y) * w); }
inline double mobius_jacobian(cplx y, cplx w) {
  const double num = 1.0 - std::norm(y);
  const double den = std::norm(1.0 + std::conj(y) * w);
  return (num / den) * (num / den);
}

// int_0^{r_hi} s^{1-beta} f(s) ds for smooth f, beta < 2. Dyadic panels
// graded toward 0 with fixed-order Gauss-Legendre, plus the analytic
// closing term f(0) eps^{2-beta} / (2-beta) on [0, eps].
inline double graded_radial_integral(double beta, double r_hi,
                                     const std::function<double(double)>& f,
                                     double f0, int levels = 34, int npts = 12) {
  if (!(beta < 2.0))
    throw InvalidInput("graded_radial_integral: exponent requires beta < 2");
  std::vector<double> x, w;
  gauss_legendre_01(npts, x, w);
  double acc = 0.0;
  double hi = r_hi;
  for (int j = 0; j < levels; ++j) {
    const double lo = hi * 0.5;
    for (int i = 0; i < npts; ++i) {
      const double s = lo + (hi - lo) * x[static_cast<std::size_t>(i)];
      acc += (hi - lo) * w[static_cast<std::size_t>(i)] *
             std::pow(s, 1.0 - beta) * f(s);
    }
    hi = lo;
  }
  acc += f0 * std::pow(hi, 2.0 - beta) / (2.0 - beta);
  return acc;
}

}  // namespace detail

/// Quadrature resolution shared by the Huber/Green area integrals.
struct DiskQuad {
  int nr = 128;
  int ntheta = 256;
  int graded_levels = 34;
  int panel_points = 12;
};

/// int_D e^h dx on the master polar grid (smooth integrand).
inline double integral_exp_h(const HarmonicField& h, const DiskQuad& q) {
  auto grid = PolarGrid::make(q.nr, q.ntheta);
  double acc = 0.0;
  for (int i = 0; i < grid->nr; ++i)
    for (int j = 0; j < grid->ntheta; ++j)
      acc += std::exp(h(grid->r[static_cast<std::size_t>(i)],
                        grid->theta[static_cast<std::size_t>(j)])) *
             grid->weight(i, j);
  return acc;
}

/// int_D e^{h + 2 alpha G(x,y)} dx for a single atom of signed weight alpha
/// (alpha < 2 pi). The substitution x = mobius(y, w) moves the singularity
/// to w = 0 where it is exactly |w|^{-alpha/pi}.
inline double integral_exp_h_atom(const HarmonicField& h, double alpha, cplx y,
                                  const DiskQuad& q) {
  if (std::abs(y) >= 1.0)
    throw InvalidInput("integral_exp_h_atom: atom must be interior");
  if (!(alpha < kTwoPi))
    throw InvalidInput("integral_exp_h_atom: alpha must be < 2*pi");
  const double beta = alpha / kPi;
  const double dtheta = kTwoPi / q.ntheta;
  const auto ring = [&](double s) {
    double acc = 0.0;
    for (int k = 0; k < q.ntheta; ++k) {
      const cplx w = std::polar(s, dtheta * k);
      acc += std::exp(h(detail::mobius(y, w))) * detail::mobius_jacobian(y, w);
    }
    return acc * dtheta;
  };
  const double f0 = kTwoPi * std::exp(h(y)) * std::pow(1.0 - std::norm(y), 2.0);
  return detail::graded_radial_integral(beta, 1.0, ring, f0, q.graded_levels,
                                        q.panel_points);
}

/// Signed finite atomic measure with an optional origin-singular weight.
struct PointMassMeasure {
  struct Atom {
    double alpha = 0.0;  // > 0
    cplx y;              // strictly interior
  };
  std::vector<Atom> positive;  // mu_2
  std::vector<Atom> negative;  // mu_1
  double alpha0 = 0.0;         // coefficient of p0 = 2 alpha0 log(1/|x|)

  bool empty() const {
    return positive.empty() && negative.empty() && alpha0 == 0.0;
  }

  // total positive mass alpha = mu_2(D), including the 2 pi alpha0 share
  double positive_mass() const {
    double acc = kTwoPi * alpha0;
    for (const Atom& a : positive) acc += a.alpha;
    return acc;
  }

  void validate() const {
    if (alpha0 < 0.0) throw InvalidInput("measure: alpha0 must be >= 0");
    for (const Atom& a : positive) {
      if (!(a.alpha > 0.0)) throw InvalidInput("measure: atom weights must be > 0");
      if (std::abs(a.y) >= 1.0)
        throw InvalidInput("measure: atom locations must be strictly interior");
    }
    for (const Atom& a : negative) {
      if (!(a.alpha > 0.0)) throw InvalidInput("measure: atom weights must be > 0");
      if (std::abs(a.y) >= 1.0)
        throw InvalidInput("measure: atom locations must be strictly interior");
    }
  }
};

namespace detail {

struct SignedAtom {
  double weight;  // signed, nonzero
  cplx y;
};

// Flatten to one signed list, folding alpha0 into a weight-2pi*alpha0 atom
// at the origin and merging coincident locations.
inline std::vector<SignedAtom> merged_atoms(const PointMassMeasure& m) {
  m.validate();
  std::vector<SignedAtom> raw;
  if (m.alpha0 > 0.0) raw.push_back({kTwoPi * m.alpha0, cplx(0.0, 0.0)});
  for (const auto& a : m.positive) raw.push_back({a.alpha, a.y});
  for (const auto& a : m.negative) raw.push_back({-a.alpha, a.y});
  std::vector<SignedAtom> out;
  for (const SignedAtom& a : raw) {
    bool merged = false;
    for (SignedAtom& b : out) {
      if (std::abs(a.y - b.y) <= 1e-14) {
        b.weight += a.weight;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(a);
  }
  std::erase_if(out, [](const SignedAtom& a) { return a.weight == 0.0; });
  return out;
}

// C^2 cutoff: 1 on [0, 1/2], 0 on [1, inf).
inline double bump(double s) {
  if (s <= 0.5) return 1.0;
  if (s >= 1.0) return 0.0;
  const double t = (s - 0.5) * 2.0;
  return 1.0 - t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

// log of the potential factor with atom `skip` replaced by the regular part
// of its Green kernel. skip < 0 keeps every atom whole.
inline double potential_exponent(const std::vector<SignedAtom>& atoms, cplx x,
                                 int skip) {
  double acc = 0.0;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    const double bj = atoms[j].weight / kPi;
    const double reg = std::log(std::abs(1.0 - x * std::conj(atoms[j].y)));
    if (static_cast<int>(j) == skip) {
      acc += bj * reg;
    } else {
      acc += bj * (reg - std::log(std::abs(x - atoms[j].y)));
    }
  }
  return acc;
}

inline std::vector<double> patch_radii(const std::vector<SignedAtom>& atoms) {
  std::vector<double> radii(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    double d = 1.0 - std::abs(atoms[k].y);
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (j != k) d = std::min(d, 0.5 * std::abs(atoms[k].y - atoms[j].y));
    radii[k] = std::min(0.45 * d, 0.3);
  }
  return radii;
}

}  // namespace detail

inline double potential(const PointMassMeasure& m, cplx x) {
  const auto atoms = detail::merged_atoms(m);
  for (const auto& a : atoms)
    if (std::abs(x - a.y) == 0.0)
      throw SingularityError("potential: evaluation at an atom");
  double acc = 0.0;
  for (const auto& a : atoms) acc += 2.0 * a.weight * green_disk(x, a.y);
  return acc;
}

/// int_D e^{h + p} dx for the potential p of a finite signed measure.
/// One atom routes through the disk-automorphism pullback; several atoms use
/// graded partition-of-unity patches plus the master grid.
inline double integral_exp_h_measure(const HarmonicField& h,
                                     const PointMassMeasure& m,
                                     const DiskQuad& q) {
  const auto atoms = detail::merged_atoms(m);
  if (atoms.empty()) return integral_exp_h(h, q);
  if (atoms.size() == 1)
    return integral_exp_h_atom(h, atoms[0].weight, atoms[0].y, q);

  const std::vector<double> radii = detail::patch_radii(atoms);
  double acc = 0.0;
  // graded polar patch around each atom, weighted by its bump
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const cplx yk = atoms[k].y;
    const double R = radii[k];
    const double beta_k = atoms[k].weight / kPi;
    const double dphi = kTwoPi / q.ntheta;
    const auto ring = [&](double s) {
      const double cut = detail::bump(s / R);
      if (cut == 0.0) return 0.0;
      double sum = 0.0;
      for (int j = 0; j < q.ntheta; ++j) {
        const cplx x = yk + std::polar(s, dphi * j);
        sum += std::exp(h(x) + detail::potential_exponent(atoms, x,
                                                          static_cast<int>(k)));
      }
      return sum * dphi * cut;
    };
    const double f0 =
        kTwoPi *
        std::exp(h(yk) + detail::potential_exponent(atoms, yk,
                                                    static_cast<int>(k)));
    acc += detail::graded_radial_integral(beta_k, R, ring, f0, q.graded_levels,
                                          q.panel_points);
  }
  // master grid on the remainder, which the bumps flatten to zero near atoms
  auto grid = PolarGrid::make(q.nr, q.ntheta);
  for (int i = 0; i < grid->nr; ++i)
    for (int j = 0; j < grid->ntheta; ++j) {
      const cplx x = std::polar(grid->r[static_cast<std::size_t>(i)],
                                grid->theta[static_cast<std::size_t>(j)]);
      double cutoff = 1.0;
      for (std::size_t k = 0; k < atoms.size(); ++k)
        cutoff -= detail::bump(std::abs(x - atoms[k].y) / radii[k]);
      if (cutoff <= 0.0) continue;
      acc += cutoff * grid->weight(i, j) *
             std::exp(h(x) + detail::potential_exponent(atoms, x, -1));
    }
  return acc;
}

/// Superlevel bound for the Green potential, Huber's key lemma:
/// with a(t) the e^h-weighted area of {G(.,y) > t} and A = a(0),
///   t <= (1/4pi) log(A / a(t)).
/// Superlevels of G are automorphism images of centered disks, so a(t) is a
/// smooth integral over the pullback disk of radius e^{-2 pi t}; equality
/// holds exactly for the centered pole with constant h.
inline CheckReport green_level_bound_check(cplx y, const FourierCoeffs& h_data,
                                           int nlevels = 24, double t_max = 0.5,
                                           const DiskQuad& q = DiskQuad{},
                                           double tolerance = 1e-6) {
  if (std::abs(y) >= 1.0)
    throw InvalidInput("green_level_bound_check: y must be interior");
  if (nlevels < 2) throw InvalidInput("green_level_bound_check: nlevels >= 2");
  const HarmonicField h = poisson_extend(h_data);
  const int nr_sub = std::min(q.nr, 64);
  std::vector<double> gx, gw;
  gauss_legendre_01(nr_sub, gx, gw);
  const double dtheta = kTwoPi / q.ntheta;
  const auto mass_inside = [&](double rho) {
    double acc = 0.0;
    for (int i = 0; i < nr_sub; ++i) {
      const double s = rho * gx[static_cast<std::size_t>(i)];
      double ring = 0.0;
      for (int k = 0; k < q.ntheta; ++k) {
        const cplx w = std::polar(s, dtheta * k);
        ring += std::exp(h(detail::mobius(y, w))) * detail::mobius_jacobian(y, w);
      }
      acc += ring * dtheta * rho * gw[static_cast<std::size_t>(i)] * s;
    }
    return acc;
  };
  const double total = mass_inside(1.0);
  double min_slack = std::numeric_limits<double>::infinity();
  double at_t = 0.0, at_lhs = 0.0, at_rhs = 0.0;
  for (int k = 1; k <= nlevels; ++k) {
    const double t = t_max * k / nlevels;
    const double a = mass_inside(std::exp(-kTwoPi * t));
    const double bound = std::log(total / a) / (4.0 * kPi);
    const double slack = bound - t;
    if (slack < min_slack) {
      min_slack = slack;
      at_t = t;
      at_lhs = t;
      at_rhs = bound;
    }
  }
  CheckReport r =
      CheckReport::make("green_bound", at_lhs, at_rhs, min_slack, tolerance);
  r.meta("pole", "(" + fmt_double(y.real()) + "," + fmt_double(y.imag()) + ")");
  r.meta("weighted_area", total);
  r.meta("levels", nlevels);
  r.meta("t_max", t_max);
  r.meta("worst_t", at_t);
  return r;
}

namespace detail {

inline CheckReport huber_report(const char* name, double alpha, double chain_lhs,
                                double area, double length, double tolerance) {
  const double lhs = 2.0 * (kTwoPi - alpha) * chain_lhs;
  const double mid = 4.0 * kPi * area;
  const double rhs = length * length;
  const double slack1 = mid - lhs;
  const double slack2 = rhs - mid;
  CheckReport r = CheckReport::make(name, lhs, rhs, std::min(slack1, slack2),
                                    tolerance);
  r.meta("mid_4piA", mid);
  r.meta("slack1", slack1);
  r.meta("slack2", slack2);
  r.meta("alpha", alpha);
  r.meta("area_A", area);
  r.meta("boundary_length", length);
  return r;
}

}  // namespace detail

/// Huber chain for a single positive point mass:
///   2 (2pi - alpha) int e^{h + 2 alpha G(.,y)} <= 4 pi A <= (oint e^{h/2})^2.
/// slack = min of the two gaps. alpha = 0 collapses the left side onto
/// 4 pi A exactly (same quadrature value).
inline CheckReport huber_point_check(const FourierCoeffs& h_data, double alpha,
                                     cplx y, const DiskQuad& q = DiskQuad{},
                                     double tolerance = 1e-8) {
  if (alpha < 0.0) throw InvalidInput("huber_point_check: alpha must be >= 0");
  if (alpha >= kTwoPi)
    throw InvalidInput("huber_point_check: alpha >= 2*pi degenerates the bound");
  if (std::abs(y) >= 1.0)
    throw InvalidInput("huber_point_check: pole must be interior");
  const HarmonicField h = poisson_extend(h_data);
  const double area = integral_exp_h(h, q);
  const double chain_lhs =
      alpha == 0.0 ? area : integral_exp_h_atom(h, alpha, y, q);
  const double length = boundary_length(h_data);
  CheckReport r = detail::huber_report("huber_point", alpha, chain_lhs, area,
                                       length, tolerance);
  r.meta("pole", "(" + fmt_double(y.real()) + "," + fmt_double(y.imag()) + ")");
  return r;
}

/// Huber chain for a finite signed measure; the constant uses only the
/// positive mass. A single positive atom reproduces huber_point_check.
inline CheckReport huber_measure_check(const FourierCoeffs& h_data,
                                       const PointMassMeasure& m,
                                       const DiskQuad& q = DiskQuad{},
                                       double tolerance = 1e-8) {
  m.validate();
  const double alpha = m.positive_mass();
  if (alpha >= kTwoPi)
    throw InvalidInput("huber_measure_check: positive mass must be < 2*pi");
  const HarmonicField h = poisson_extend(h_data);
  const double area = integral_exp_h(h, q);
  const double chain_lhs =
      m.empty() ? area : integral_exp_h_measure(h, m, q);
  const double length = boundary_length(h_data);
  CheckReport r = detail::huber_report("huber_measure", alpha, chain_lhs, area,
                                       length, tolerance);
  r.meta("atoms",
         static_cast<int>(m.positive.size() + m.negative.size()));
  r.meta("alpha0", m.alpha0);
  return r;
}

/// Huber bound on a superlevel sub-disk of the bubble family, with the
/// global constant 2 (2pi - mu_2(D)). Only rotationally symmetric scenarios
/// are supported: every atom must sit at the origin so that the superlevel
/// region {v > mu} is a single concentric disk.
inline CheckReport huber_superlevel_check(double beta, double mu_level,
                                          const PointMassMeasure& m,
                                          const DiskQuad& q = DiskQuad{},
                                          double tolerance = 1e-8) {
  if (!(beta > 0.0)) throw InvalidInput("huber_superlevel_check: beta > 0");
  m.validate();
  for (const auto& a : m.positive)
    if (std::abs(a.y) > 1e-14)
      throw UnsupportedScenarioError(
          "huber_superlevel_check: off-center atoms make the superlevel "
          "multi-component; only radial scenarios are supported");
  for (const auto& a : m.negative)
    if (std::abs(a.y) > 1e-14)
      throw UnsupportedScenarioError(
          "huber_superlevel_check: off-center atoms make the superlevel "
          "multi-component; only radial scenarios are supported");
  const double pos_mass = m.positive_mass();
  if (pos_mass >= kTwoPi)
    throw InvalidInput("huber_superlevel_check: positive mass must be < 2*pi");
  double net_weight = kTwoPi * m.alpha0;
  for (const auto& a : m.positive) net_weight += a.alpha;
  for (const auto& a : m.negative) net_weight -= a.alpha;
  const double beta_net = net_weight / kPi;

  const double b2 = beta * beta;
  const double v0 = 2.0 * std::log1p(b2);  // v at the origin
  if (!(mu_level >= 0.0 && mu_level < v0))
    throw InvalidInput("huber_superlevel_check: level must lie in [0, v(0))");
  const double r0_sq = ((1.0 + b2) * std::exp(-0.5 * mu_level) - 1.0) / b2;
  const double r0 = std::sqrt(r0_sq);
  const double h_const = bubble_u(beta, 1.0);

  // e^{h + p} = e^{h_const} s^{-beta_net} exactly for centered atoms
  const double density = std::exp(h_const);
  const auto ring = [&](double) { return kTwoPi * density; };
  const double inner = detail::graded_radial_integral(
      beta_net, r0, ring, kTwoPi * density, q.graded_levels, q.panel_points);
  const double lhs = 2.0 * (kTwoPi - pos_mass) * inner;
  const double p_r0 = -beta_net * std::log(r0);
  const double circ = kTwoPi * r0 * std::exp(0.5 * (h_const + p_r0));
  const double rhs = circ * circ;
  CheckReport r = CheckReport::make("huber_superlevel", lhs, rhs, rhs - lhs,
                                    tolerance);
  r.meta("beta", beta);
  r.meta("mu_level", mu_level);
  r.meta("sub_radius", r0);
  r.meta("h_const", h_const);
  r.meta("positive_mass", pos_mass);
  r.meta("net_exponent", beta_net);
  r.meta("sub_area_integral", inner);
  return r;
}

}  // namespace isodisk

#endif
