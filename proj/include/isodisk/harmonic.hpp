// Harmonic extension of real boundary data, its holomorphic completion, and
// the conformal map g with |g'|^2 = e^h.
//
// Normalization: g(0) = 0 and g'(0) = e^{F_0/2} > 0, with F_0 real. The map
// is otherwise determined only up to rotation and an additive constant; this
// choice makes outputs unique and directly comparable.
#ifndef ISODISK_HARMONIC_HPP
#define ISODISK_HARMONIC_HPP

#include <utility>

#include "isodisk/fourier.hpp"

namespace isodisk {

/// Harmonic function on the closed disk, h(r,theta) = sum c_n r^{|n|}
/// e^{i n theta}, for Hermitian (real-data) boundary coefficients.
class HarmonicField {
 public:
  explicit HarmonicField(FourierCoeffs boundary) : c_(std::move(boundary)) {
    if (!c_.is_hermitian())
      throw InvalidInput("HarmonicField: boundary data must be Hermitian");
  }

  // c_0 + 2 Re sum_{n>=1} c_n z^n, evaluated by running powers of z
  double operator()(cplx z) const {
    cplx acc(0.0, 0.0);
    cplx zp(1.0, 0.0);
    for (int n = 1; n <= c_.n_max(); ++n) {
      zp *= z;
      acc += c_.coeff(n) * zp;
    }
    return c_.coeff(0).real() + 2.0 * acc.real();
  }
  double operator()(double r, double theta) const {
    return (*this)(std::polar(r, theta));
  }

  const FourierCoeffs& boundary() const { return c_; }

 private:
  FourierCoeffs c_;
};

inline HarmonicField poisson_extend(const FourierCoeffs& u) {
  return HarmonicField(u);
}

/// Holomorphic F with Re F = h on the disk and Im F(0) = 0:
/// F_0 = c_0 (real), F_n = 2 c_n for n >= 1.
inline TaylorCoeffs holomorphic_completion(const FourierCoeffs& u) {
  if (!u.is_hermitian())
    throw InvalidInput("holomorphic_completion: boundary data must be Hermitian");
  TaylorCoeffs f(u.n_max());
  f.set_coeff(0, cplx(u.coeff(0).real(), 0.0));
  for (int n = 1; n <= u.n_max(); ++n) f.set_coeff(n, 2.0 * u.coeff(n));
  return f;
}

/// g' = exp(F/2) and its primitive g with g(0) = 0, all as truncated series.
struct ConformalFactor {
  TaylorCoeffs F;        // holomorphic completion of h
  TaylorCoeffs g_prime;  // exp(F/2)
  TaylorCoeffs g;        // primitive, g(0) = 0
};

inline ConformalFactor build_conformal_factor(const FourierCoeffs& u, int m_max) {
  if (m_max < 2 * u.n_max())
    throw InvalidInput("build_conformal_factor: m_max must be >= 2*n_max");
  TaylorCoeffs f = holomorphic_completion(u);
  TaylorCoeffs gp = series_exp(series_scale(f, cplx(0.5, 0.0)), m_max);
  TaylorCoeffs g = series_antiderivative(gp);
  return ConformalFactor{std::move(f), std::move(gp), std::move(g)};
}

/// max over an (nr x ntheta) grid of |2 log|g'(z)| - h(z)|, with radii
/// covering [0, 1] inclusive. Both sides are evaluated through independent
/// routes (Taylor series of exp(F/2) vs. the r^{|n|} Fourier sum).
inline double residual_check(const ConformalFactor& cf, const FourierCoeffs& u,
                             int nr, int ntheta) {
  if (nr < 2 || ntheta < 1) throw InvalidInput("residual_check: grid too small");
  const HarmonicField h = poisson_extend(u);
  double worst = 0.0;
  for (int i = 0; i < nr; ++i) {
    const double r = static_cast<double>(i) / (nr - 1);
    for (int j = 0; j < ntheta; ++j) {
      const cplx z = std::polar(r, kTwoPi * j / ntheta);
      const double lhs = 2.0 * std::log(std::abs(cf.g_prime.eval(z)));
      worst = std::max(worst, std::abs(lhs - h(z)));
    }
  }
  return worst;
}

}  // namespace isodisk

#endif
