// Area and boundary-length functionals on the disk, the Stokes contour
// formula, the Nehari isoperimetric check, and its equality-case detector.
#ifndef ISODISK_GEOMETRY_HPP
#define ISODISK_GEOMETRY_HPP

#include "isodisk/check_report.hpp"
#include "isodisk/harmonic.hpp"

namespace isodisk {

/// Image area of the disk under holomorphic g: pi sum_{n>=1} n |a_n|^2.
/// Equals the Dirichlet integral of g by Parseval; a_0 plays no part.
inline double area_series(const TaylorCoeffs& g) {
  double acc = 0.0;
  for (int n = 1; n <= g.m_max(); ++n) acc += n * std::norm(g.coeff(n));
  return kPi * acc;
}

/// Boundary restriction of a Taylor series as circle Fourier coefficients.
inline FourierCoeffs boundary_series(const TaylorCoeffs& g) {
  FourierCoeffs out(g.m_max());
  for (int n = 0; n <= g.m_max(); ++n) out.set_coeff(n, g.coeff(n));
  return out;
}

/// Contour-integral area (1/4i) oint (gbar g' dz - g gbar' dzbar) over the
/// unit circle by trapezoid quadrature, exact for trigonometric polynomials
/// at 4x the series bandwidth. The prefactor 1/(4i) makes g = z give +pi.
///
/// Both terms are evaluated independently; a residual imaginary part beyond
/// roundoff signals corrupted (non-finite or inconsistent) input.
inline double area_stokes(const FourierCoeffs& g_boundary) {
  const int n_max = g_boundary.n_max();
  const int count = 4 * n_max + 8;
  const double dtheta = kTwoPi / count;
  cplx acc(0.0, 0.0);
  for (int k = 0; k < count; ++k) {
    const double theta = dtheta * k;
    const cplx z = std::polar(1.0, theta);
    cplx w(0.0, 0.0), dw(0.0, 0.0), dw_conj(0.0, 0.0);
    for (int n = -n_max; n <= n_max; ++n) {
      const cplx e = std::polar(1.0, n * theta);
      const cplx c = g_boundary.coeff(n);
      w += c * e;
      // z-derivative of the series restricted to the circle: n c_n e^{i(n-1)theta}
      dw += static_cast<double>(n) * c * e / z;
      dw_conj += static_cast<double>(n) * std::conj(c * e) * z;
    }
    const cplx dz = cplx(0.0, 1.0) * z;
    acc += std::conj(w) * dw * dz - w * dw_conj * std::conj(dz);
  }
  const cplx area = acc * dtheta / cplx(0.0, 4.0);
  const double scale = std::max(1.0, std::abs(area.real()));
  if (!(std::abs(area.imag()) <= 1e-8 * scale))
    throw InconsistencyError("area_stokes: contour integral is not real");
  return area.real();
}

/// Conformal boundary length int_0^{2pi} e^{u(theta)/2} dtheta by trapezoid
/// quadrature (spectrally accurate for smooth periodic integrands).
inline double boundary_length(const FourierCoeffs& u, int count = 0) {
  if (count <= 0) count = std::max(512, 8 * u.n_max() + 64);
  const double dtheta = kTwoPi / count;
  double acc = 0.0;
  for (int k = 0; k < count; ++k)
    acc += std::exp(0.5 * u.eval_real(dtheta * k));
  return acc * dtheta;
}

/// Nehari: 4 pi Area <= Length^2 for |g'|^2 = e^h, h harmonic with boundary
/// data u. slack = rhs - lhs.
inline CheckReport nehari_check(const FourierCoeffs& u, int m_max = 0,
                                double tolerance = 1e-8) {
  if (!u.is_hermitian()) throw InvalidInput("nehari_check: u must be Hermitian");
  if (m_max <= 0) m_max = std::max(64, 4 * u.n_max());
  const ConformalFactor cf = build_conformal_factor(u, m_max);
  const double lhs = 4.0 * kPi * area_series(cf.g);
  const double len = boundary_length(u);
  const double rhs = len * len;
  CheckReport r = CheckReport::make("nehari", lhs, rhs, rhs - lhs, tolerance);
  r.meta("n_max", u.n_max());
  r.meta("m_max", m_max);
  r.meta("boundary_length", len);
  r.meta("gprime_tail_bound@0.99", tail_bound(cf.g_prime, 0.99, m_max / 2));
  return r;
}

/// True iff g is a rotation/scaling of the identity up to tolerance:
/// sum_{n>=2} n |a_n|^2 <= tol * sum_{n>=1} n |a_n|^2.
inline bool equality_case_detect(const TaylorCoeffs& g, double tol) {
  double total = 0.0, high = 0.0;
  for (int n = 1; n <= g.m_max(); ++n) {
    const double t = n * std::norm(g.coeff(n));
    total += t;
    if (n >= 2) high += t;
  }
  if (total == 0.0) throw InvalidInput("equality_case_detect: zero series");
  return high <= tol * total;
}

}  // namespace isodisk

#endif
