// Test-side oracles, deliberately independent of the library's quadrature
// and series code: plain trapezoid/Simpson rules, Bessel series, and the
// closed forms of the extremal families. Everything here is test-only.
#ifndef ISODISK_TESTS_ORACLES_HPP
#define ISODISK_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <random>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
using cplx = std::complex<double>;

// trapezoid rule over one period (spectrally accurate for smooth periodic f)
inline double periodic_integral(const std::function<double(double)>& f, int n) {
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += f(kTwoPi * k / n);
  return acc * kTwoPi / n;
}

// int over the unit disk of f(r, theta) r dr dtheta, composite Simpson in r
// (nr even), trapezoid in theta
inline double disk_integral(const std::function<double(double, double)>& f,
                            int nr = 512, int ntheta = 256) {
  const double hr = 1.0 / nr;
  double acc = 0.0;
  for (int i = 0; i <= nr; ++i) {
    const double r = i * hr;
    double ring = 0.0;
    for (int j = 0; j < ntheta; ++j) ring += f(r, kTwoPi * j / ntheta);
    ring *= kTwoPi / ntheta * r;
    const double w = (i == 0 || i == nr) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += w * ring;
  }
  return acc * hr / 3.0;
}

// I_0(x) = sum (x^2/4)^k / (k!)^2
inline double bessel_i0(double x) {
  double term = 1.0, acc = 1.0;
  const double q = 0.25 * x * x;
  for (int k = 1; k < 60; ++k) {
    term *= q / (k * k);
    acc += term;
    if (term < 1e-18 * acc) break;
  }
  return acc;
}

// closed forms for the curvature-1 bubble u = log(4 b^2/(1+b^2 r^2)^2)
inline double bubble_mass(double beta) {  // int_{B_1} e^u
  return 4.0 * kPi * beta * beta / (1.0 + beta * beta);
}
inline double bubble_boundary_len(double beta) {  // oint e^{u/2}
  return kTwoPi * 2.0 * beta / (1.0 + beta * beta);
}
// beta = 1 distribution closed forms (weight e^h = 1)
inline double bubble1_a_of_mu(double mu) { return kPi * (2.0 * std::exp(-0.5 * mu) - 1.0); }
inline double bubble1_mu_of_a(double a) { return -2.0 * std::log((a + kPi) / kTwoPi); }
inline double bubble1_H_of_a(double a) { return 8.0 * kPi * a / (a + kPi); }  // lambda = 2

// deterministic uniforms decoupled from the library's generator
class Rng {
 public:
  explicit Rng(unsigned long seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace oracle

#endif
