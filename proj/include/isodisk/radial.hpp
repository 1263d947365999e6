// Rotationally symmetric conformal factors used as analytic test families:
// value, first and second radial derivatives, and the Gauss curvature of
// e^u |dz|^2 via K = -(1/2) e^{-u} (u'' + u'/r).
#ifndef ISODISK_RADIAL_HPP
#define ISODISK_RADIAL_HPP

#include <functional>
#include <string>

#include "isodisk/common.hpp"

namespace isodisk {

struct RadialProfile {
  std::string name;
  std::function<double(double)> u;    // conformal exponent at radius r
  std::function<double(double)> du;   // u'(r)
  std::function<double(double)> d2u;  // u''(r)
  double r_max = 1.0;                 // largest radius the profile covers
};

// u = log(4 beta^2 / (1 + beta^2 r^2)^2), the curvature-1 factor
inline double bubble_u(double beta, double r) {
  return std::log(4.0 * beta * beta) - 2.0 * std::log1p(beta * beta * r * r);
}

inline RadialProfile radial_flat() {
  RadialProfile p;
  p.name = "flat";
  p.u = [](double) { return 0.0; };
  p.du = [](double) { return 0.0; };
  p.d2u = [](double) { return 0.0; };
  p.r_max = 1e6;
  return p;
}

inline RadialProfile radial_bubble(double beta) {
  if (!(beta > 0.0)) throw InvalidInput("radial_bubble: beta must be > 0");
  RadialProfile p;
  p.name = "bubble";
  const double b2 = beta * beta;
  p.u = [beta](double r) { return bubble_u(beta, r); };
  p.du = [b2](double r) { return -4.0 * b2 * r / (1.0 + b2 * r * r); };
  p.d2u = [b2](double r) {
    const double q = 1.0 + b2 * r * r;
    return -4.0 * b2 * (1.0 - b2 * r * r) / (q * q);
  };
  p.r_max = 1e6;
  return p;
}

// the beta = 1 bubble: stereographic factor of the round sphere
inline RadialProfile radial_sphere() {
  RadialProfile p = radial_bubble(1.0);
  p.name = "sphere";
  return p;
}

// u = log(4 / (1 - r^2)^2), curvature -1, defined for r < 1
inline RadialProfile radial_hyperbolic() {
  RadialProfile p;
  p.name = "hyperbolic";
  p.u = [](double r) { return std::log(4.0) - 2.0 * std::log1p(-r * r); };
  p.du = [](double r) { return 4.0 * r / (1.0 - r * r); };
  p.d2u = [](double r) {
    const double q = 1.0 - r * r;
    return 4.0 * (1.0 + r * r) / (q * q);
  };
  p.r_max = 0.999;
  return p;
}

// laplace u = u'' + u'/r for radial u; at r = 0 the limit is 2 u''(0)
inline double radial_laplacian(const RadialProfile& p, double r) {
  if (r == 0.0) return 2.0 * p.d2u(0.0);
  return p.d2u(r) + p.du(r) / r;
}

inline double gauss_curvature(const RadialProfile& p, double r) {
  return -0.5 * std::exp(-p.u(r)) * radial_laplacian(p, r);
}

}  // namespace isodisk

#endif
