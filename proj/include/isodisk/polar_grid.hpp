// Quadrature carrier for all area integrals over the unit disk:
// Gauss-Legendre nodes in the radius, equispaced angles, weights carrying
// the polar area element r dr dtheta.
#ifndef ISODISK_POLAR_GRID_HPP
#define ISODISK_POLAR_GRID_HPP

#include <functional>
#include <memory>
#include <vector>

#include "isodisk/common.hpp"

namespace isodisk {

/// n-point Gauss-Legendre rule on [0,1]. Newton iteration on the Legendre
/// recurrence; nodes returned in increasing order.
inline void gauss_legendre_01(int n, std::vector<double>& x,
                              std::vector<double>& w) {
  if (n < 1) throw InvalidInput("gauss_legendre_01: n must be >= 1");
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess for the i-th root of P_n.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    // map [-1,1] -> [0,1]
    const double xi = 0.5 * (1.0 - z);
    const double wi = 1.0 / ((1.0 - z * z) * pp * pp);
    x[static_cast<std::size_t>(i)] = xi;
    w[static_cast<std::size_t>(i)] = wi;
    x[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + z);
    w[static_cast<std::size_t>(n - 1 - i)] = wi;
  }
}

/// Tensor quadrature on the unit disk. weight(i,j) integrates against
/// r dr dtheta, so the weights sum to pi.
struct PolarGrid {
  int nr = 0;
  int ntheta = 0;
  std::vector<double> r;      // Gauss-Legendre nodes in (0,1)
  std::vector<double> wr;     // radial weight including the r factor
  std::vector<double> theta;  // equispaced in [0, 2pi)
  double wtheta = 0.0;

  static std::shared_ptr<const PolarGrid> make(int nr, int ntheta) {
    if (nr < 1 || ntheta < 1)
      throw InvalidInput("PolarGrid: nr and ntheta must be >= 1");
    auto g = std::make_shared<PolarGrid>();
    g->nr = nr;
    g->ntheta = ntheta;
    std::vector<double> x, w;
    gauss_legendre_01(nr, x, w);
    g->r = x;
    g->wr.resize(static_cast<std::size_t>(nr));
    for (int i = 0; i < nr; ++i)
      g->wr[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] *
                                           x[static_cast<std::size_t>(i)];
    g->theta.resize(static_cast<std::size_t>(ntheta));
    for (int j = 0; j < ntheta; ++j)
      g->theta[static_cast<std::size_t>(j)] = kTwoPi * j / ntheta;
    g->wtheta = kTwoPi / ntheta;
    return g;
  }

  std::size_t size() const {
    return static_cast<std::size_t>(nr) * static_cast<std::size_t>(ntheta);
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(ntheta) +
           static_cast<std::size_t>(j);
  }
  double weight(int i, int j) const {
    (void)j;
    return wr[static_cast<std::size_t>(i)] * wtheta;
  }
  // total quadrature mass; equals pi up to roundoff
  double total_weight() const {
    double acc = 0.0;
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < ntheta; ++j) acc += weight(i, j);
    return acc;
  }
};

/// Real samples on a PolarGrid, row-major in (radius, angle).
struct ScalarField {
  std::shared_ptr<const PolarGrid> grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(std::shared_ptr<const PolarGrid> g)
      : grid(std::move(g)), values(grid->size(), 0.0) {}

  double at(int i, int j) const { return values[grid->index(i, j)]; }
  double& at(int i, int j) { return values[grid->index(i, j)]; }

  bool all_finite() const {
    for (double v : values)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline ScalarField sample_radial(std::shared_ptr<const PolarGrid> grid,
                                 const std::function<double(double)>& f) {
  ScalarField out(grid);
  for (int i = 0; i < grid->nr; ++i) {
    const double fi = f(grid->r[static_cast<std::size_t>(i)]);
    for (int j = 0; j < grid->ntheta; ++j) out.at(i, j) = fi;
  }
  return out;
}

inline ScalarField sample_polar(
    std::shared_ptr<const PolarGrid> grid,
    const std::function<double(double, double)>& f) {
  ScalarField out(grid);
  for (int i = 0; i < grid->nr; ++i)
    for (int j = 0; j < grid->ntheta; ++j)
      out.at(i, j) = f(grid->r[static_cast<std::size_t>(i)],
                       grid->theta[static_cast<std::size_t>(j)]);
  return out;
}

/// sum f * weight over all nodes, fixed row-major order.
inline double integrate(const ScalarField& f) {
  double acc = 0.0;
  const PolarGrid& g = *f.grid;
  for (int i = 0; i < g.nr; ++i)
    for (int j = 0; j < g.ntheta; ++j) acc += f.at(i, j) * g.weight(i, j);
  return acc;
}

/// sum exp(u) * weight over all nodes; the metric area of e^u |dz|^2.
inline double metric_area(const ScalarField& u) {
  double acc = 0.0;
  const PolarGrid& g = *u.grid;
  for (int i = 0; i < g.nr; ++i)
    for (int j = 0; j < g.ntheta; ++j) acc += std::exp(u.at(i, j)) * g.weight(i, j);
  return acc;
}

}  // namespace isodisk

#endif
