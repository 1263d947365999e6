// Geodesic parallel curves of rotationally symmetric metrics: concentric
// circles offset at unit geodesic speed, their length L(p), the enclosed
// curvature budget, Gauss-Bonnet, and the parallel-length differential
// inequalities in the smooth (pre-focal) regime.
//
// For a radial metric the offset equation is dr/dp = +-e^{-u(r)/2} and the
// parallel through r has length L = 2 pi r e^{u(r)/2}. Parallels stay
// circles, no focal points occur before collapse, and the inequalities hold
// with equality (Gauss-Bonnet differentiated).
#ifndef ISODISK_FIALA_HPP
#define ISODISK_FIALA_HPP

#include <algorithm>
#include <limits>

#include "isodisk/check_report.hpp"
#include "isodisk/polar_grid.hpp"
#include "isodisk/radial.hpp"

namespace isodisk {

using RadialMetric = RadialProfile;

enum class FlowDirection { outward, inward };
enum class TraceStatus { completed, collapsed, left_domain };

inline const char* to_string(TraceStatus s) {
  switch (s) {
    case TraceStatus::completed: return "completed";
    case TraceStatus::collapsed: return "collapsed";
    case TraceStatus::left_domain: return "left_domain";
  }
  return "?";
}

/// Samples along a geodesic offset flow, stored with p strictly increasing
/// (inward traces are generated at negative offsets and reversed). area and
/// total_curv are cumulative over the full enclosed region {r < r(p)}.
struct ParallelTrace {
  FlowDirection direction = FlowDirection::outward;
  TraceStatus status = TraceStatus::completed;
  std::vector<double> p, r, length, area, total_curv;

  std::size_t size() const { return p.size(); }
};

namespace detail {

// composite Gauss-Legendre over [a, b] (a <= b), smooth integrands
inline double integrate_gl(const std::function<double(double)>& f, double a,
                           double b, int panels = 8, int npts = 8) {
  std::vector<double> x, w;
  gauss_legendre_01(npts, x, w);
  double acc = 0.0;
  for (int pnl = 0; pnl < panels; ++pnl) {
    const double lo = a + (b - a) * pnl / panels;
    const double hi = a + (b - a) * (pnl + 1) / panels;
    for (int i = 0; i < npts; ++i)
      acc += (hi - lo) * w[static_cast<std::size_t>(i)] *
             f(lo + (hi - lo) * x[static_cast<std::size_t>(i)]);
  }
  return acc;
}

inline double metric_area_to(const RadialMetric& m, double r, int panels = 64) {
  return kTwoPi * integrate_gl(
                      [&m](double s) { return std::exp(m.u(s)) * s; }, 0.0, r,
                      panels, 8);
}

inline double curvature_mass_to(const RadialMetric& m, double r,
                                int panels = 64) {
  return kTwoPi *
         integrate_gl(
             [&m](double s) {
               return gauss_curvature(m, s) * std::exp(m.u(s)) * s;
             },
             0.0, r, panels, 8);
}

}  // namespace detail

/// Classical fixed-step RK4 on the offset equation. The trace truncates
/// with a status flag when the parallel collapses toward r = 0 or leaves
/// the metric's domain.
inline ParallelTrace parallel_flow(const RadialMetric& m, double r0,
                                   double p_max, FlowDirection dir,
                                   double step = 1e-3) {
  if (!(r0 > 0.0 && r0 < m.r_max))
    throw InvalidInput("parallel_flow: r0 must lie in (0, r_max)");
  if (!(p_max > 0.0) || !(step > 0.0))
    throw InvalidInput("parallel_flow: p_max and step must be > 0");
  const double sign = dir == FlowDirection::outward ? 1.0 : -1.0;
  const auto speed = [&m, sign](double r) { return sign * std::exp(-0.5 * m.u(r)); };
  const double r_floor = 1e-6;

  ParallelTrace tr;
  tr.direction = dir;
  const double area0 = detail::metric_area_to(m, r0);
  const double curv0 = detail::curvature_mass_to(m, r0);

  double r = r0, area = area0, curv = curv0;
  const auto record = [&](double p) {
    tr.p.push_back(sign >= 0.0 ? p : -p);
    tr.r.push_back(r);
    tr.length.push_back(kTwoPi * r * std::exp(0.5 * m.u(r)));
    tr.area.push_back(area);
    tr.total_curv.push_back(curv);
  };
  record(0.0);

  const int nsteps = static_cast<int>(std::ceil(p_max / step - 1e-12));
  tr.status = TraceStatus::completed;
  for (int k = 0; k < nsteps; ++k) {
    const double k1 = speed(r);
    const double k2 = speed(r + 0.5 * step * k1);
    const double k3 = speed(r + 0.5 * step * k2);
    const double k4 = speed(r + step * k3);
    const double r_next = r + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!(r_next > r_floor)) {
      tr.status = TraceStatus::collapsed;
      break;
    }
    if (!(r_next < m.r_max)) {
      tr.status = TraceStatus::left_domain;
      break;
    }
    const double lo = std::min(r, r_next), hi = std::max(r, r_next);
    const double darea = detail::integrate_gl(
        [&m](double s) { return std::exp(m.u(s)) * s; }, lo, hi, 1, 8);
    const double dcurv = detail::integrate_gl(
        [&m](double s) { return gauss_curvature(m, s) * std::exp(m.u(s)) * s; },
        lo, hi, 1, 8);
    area += kTwoPi * (r_next > r ? darea : -darea);
    curv += kTwoPi * (r_next > r ? dcurv : -dcurv);
    r = r_next;
    record((k + 1) * step);
  }
  if (dir == FlowDirection::inward) {
    std::reverse(tr.p.begin(), tr.p.end());
    std::reverse(tr.r.begin(), tr.r.end());
    std::reverse(tr.length.begin(), tr.length.end());
    std::reverse(tr.area.begin(), tr.area.end());
    std::reverse(tr.total_curv.begin(), tr.total_curv.end());
  }
  return tr;
}

/// 2 pi = k_g L(C) + int_F K for the circle of radius r0. The geodesic
/// curvature of a metric circle is k_g = e^{-u/2} (1/r + u'/2), constant
/// along the circle. slack = -|lhs - rhs|.
inline CheckReport gauss_bonnet_check(const RadialMetric& m, double r0,
                                      double tolerance = 1e-8,
                                      int panels = 64) {
  if (!(r0 > 0.0 && r0 < m.r_max))
    throw InvalidInput("gauss_bonnet_check: r0 must lie in (0, r_max)");
  const double kg = std::exp(-0.5 * m.u(r0)) * (1.0 / r0 + 0.5 * m.du(r0));
  const double length = kTwoPi * r0 * std::exp(0.5 * m.u(r0));
  const double curv = detail::curvature_mass_to(m, r0, panels);
  const double lhs = kg * length + curv;
  const double rhs = kTwoPi;
  CheckReport r = CheckReport::make("gauss_bonnet", lhs, rhs,
                                    -std::abs(lhs - rhs), tolerance);
  r.meta("metric", m.name);
  r.meta("r0", r0);
  r.meta("geodesic_curvature", kg);
  r.meta("parallel_length", length);
  r.meta("curvature_mass", curv);
  return r;
}

/// dL/dp <= 2 pi - int_{F_p} K for p > 0 and >= for p < 0, with dL/dp by
/// centered differences along the trace. lhs is the worst directional
/// violation normalized by 1 + |dL/dp|; tolerance applies to that ratio.
/// For radial metrics both regimes are equalities, and the metadata carries
/// the largest normalized equality residual.
inline CheckReport fiala_ineq_check(const ParallelTrace& tr,
                                    double tolerance = 1e-6) {
  if (tr.size() < 3)
    throw InvalidInput("fiala_ineq_check: trace needs at least 3 samples");
  double worst = -std::numeric_limits<double>::infinity();
  double worst_eq = 0.0;
  for (std::size_t k = 1; k + 1 < tr.size(); ++k) {
    const double dl = (tr.length[k + 1] - tr.length[k - 1]) /
                      (tr.p[k + 1] - tr.p[k - 1]);
    const double bound = kTwoPi - tr.total_curv[k];
    const double norm = 1.0 + std::abs(dl);
    const double viol = tr.p[k] > 0.0 ? (dl - bound) / norm
                        : tr.p[k] < 0.0 ? (bound - dl) / norm
                                        : -std::abs(dl - bound) / norm;
    worst = std::max(worst, viol);
    worst_eq = std::max(worst_eq, std::abs(dl - bound) / norm);
  }
  CheckReport r = CheckReport::make("fiala", worst, 0.0, -worst, tolerance);
  r.meta("samples", static_cast<int>(tr.size()));
  r.meta("status", to_string(tr.status));
  r.meta("direction",
         tr.direction == FlowDirection::outward ? "outward" : "inward");
  r.meta("max_equality_residual", worst_eq);
  return r;
}

}  // namespace isodisk

#endif
