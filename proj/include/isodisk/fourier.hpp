// Exact-truncation arithmetic on Fourier series over the circle and Taylor
// series on the disk: transforms, products, exponentials, tail bounds.
//
// Truncation orders are explicit parameters throughout; nothing here chooses
// a bandwidth on its own. All reductions run in a fixed left-to-right order
// so results are bit-reproducible across runs.
#ifndef ISODISK_FOURIER_HPP
#define ISODISK_FOURIER_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "isodisk/common.hpp"

namespace isodisk {

/// Dense spectrum c_n, |n| <= n_max, of a function on the unit circle.
/// Real-valued data satisfies c_{-n} = conj(c_n); construction from real
/// samples preserves that identity bit-exactly.
class FourierCoeffs {
 public:
  explicit FourierCoeffs(int n_max) : n_max_(n_max) {
    if (n_max < 0) throw InvalidInput("FourierCoeffs: n_max must be >= 0");
    c_.assign(2 * static_cast<std::size_t>(n_max) + 1, cplx(0.0, 0.0));
  }

  int n_max() const { return n_max_; }

  cplx coeff(int n) const { return c_[index(n)]; }
  void set_coeff(int n, cplx v) { c_[index(n)] = v; }

  // sum c_n e^{i n theta}
  cplx eval(double theta) const {
    cplx acc(0.0, 0.0);
    for (int n = -n_max_; n <= n_max_; ++n)
      acc += c_[index(n)] * std::polar(1.0, n * theta);
    return acc;
  }
  double eval_real(double theta) const { return eval(theta).real(); }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (const cplx& v : c_)
      if (!finite(v)) return false;
    return true;
  }

  // c_{-n} == conj(c_n) for all n, up to rel_tol * max|c|.
  bool is_hermitian(double rel_tol = 1e-13) const {
    const double scale = std::max(1.0, max_abs());
    for (int n = 0; n <= n_max_; ++n) {
      if (std::abs(c_[index(-n)] - std::conj(c_[index(n)])) > rel_tol * scale)
        return false;
    }
    return true;
  }

 private:
  std::size_t index(int n) const { return static_cast<std::size_t>(n + n_max_); }

  int n_max_;
  std::vector<cplx> c_;
};

/// Taylor coefficients a_n, 0 <= n <= m_max, of a function holomorphic on
/// the unit disk.
class TaylorCoeffs {
 public:
  explicit TaylorCoeffs(int m_max) : m_max_(m_max) {
    if (m_max < 0) throw InvalidInput("TaylorCoeffs: m_max must be >= 0");
    a_.assign(static_cast<std::size_t>(m_max) + 1, cplx(0.0, 0.0));
  }

  int m_max() const { return m_max_; }

  cplx coeff(int n) const { return a_[static_cast<std::size_t>(n)]; }
  void set_coeff(int n, cplx v) { a_[static_cast<std::size_t>(n)] = v; }

  cplx eval(cplx z) const {  // Horner
    cplx acc = a_.back();
    for (std::size_t n = a_.size() - 1; n-- > 0;) acc = acc * z + a_[n];
    return acc;
  }

  bool all_finite() const {
    for (const cplx& v : a_)
      if (!finite(v)) return false;
    return true;
  }

 private:
  int m_max_;
  std::vector<cplx> a_;
};

/// Coefficients of the unique trigonometric interpolant through samples at
/// the 2N+1 equispaced angles theta_k = 2 pi k / (2N+1).
///
/// For real samples the returned spectrum is Hermitian to the bit: the
/// negative-frequency accumulator multiplies by the conjugated phasor, and
/// conjugation of a product with a real factor is exact.
inline FourierCoeffs samples_to_coeffs(std::span<const cplx> samples) {
  const std::size_t m = samples.size();
  if (m < 3 || m % 2 == 0)
    throw InvalidInput("samples_to_coeffs: sample count must be odd and >= 3");
  const int n_max = static_cast<int>((m - 1) / 2);
  FourierCoeffs out(n_max);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (int n = 0; n <= n_max; ++n) {
    cplx acc_pos(0.0, 0.0), acc_neg(0.0, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      const cplx w = std::polar(1.0, -kTwoPi * n * static_cast<double>(k) * inv_m);
      acc_pos += samples[k] * w;
      acc_neg += samples[k] * std::conj(w);
    }
    out.set_coeff(n, acc_pos * inv_m);
    if (n > 0) out.set_coeff(-n, acc_neg * inv_m);
  }
  if (!out.all_finite()) throw InvalidInput("samples_to_coeffs: non-finite samples");
  return out;
}

/// Evaluates sum c_n e^{i n theta} at `count` equispaced angles.
inline std::vector<cplx> coeffs_to_samples(const FourierCoeffs& c, int count) {
  if (count < 2 * c.n_max() + 1)
    throw InvalidInput("coeffs_to_samples: count must be >= 2*n_max+1");
  std::vector<cplx> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = c.eval(kTwoPi * k / count);
  return out;
}

/// Truncated product (Cauchy convolution) of two Taylor series.
inline TaylorCoeffs series_product(const TaylorCoeffs& a, const TaylorCoeffs& b,
                                   int m_out) {
  TaylorCoeffs out(m_out);
  for (int n = 0; n <= m_out; ++n) {
    cplx acc(0.0, 0.0);
    const int k_hi = std::min(n, a.m_max());
    for (int k = 0; k <= k_hi; ++k) {
      const int j = n - k;
      if (j <= b.m_max()) acc += a.coeff(k) * b.coeff(j);
    }
    out.set_coeff(n, acc);
  }
  return out;
}

inline TaylorCoeffs series_scale(const TaylorCoeffs& a, cplx factor) {
  TaylorCoeffs out(a.m_max());
  for (int n = 0; n <= a.m_max(); ++n) out.set_coeff(n, factor * a.coeff(n));
  return out;
}

/// Term-wise antiderivative with value 0 at the origin.
inline TaylorCoeffs series_antiderivative(const TaylorCoeffs& a) {
  TaylorCoeffs out(a.m_max() + 1);
  for (int n = 0; n <= a.m_max(); ++n)
    out.set_coeff(n + 1, a.coeff(n) / static_cast<double>(n + 1));
  return out;
}

/// exp of a Taylor series, truncated at m_out, via the recurrence
///   b_0 = exp(F_0),  n b_n = sum_{k=1..n} k F_k b_{n-k}.
inline TaylorCoeffs series_exp(const TaylorCoeffs& f, int m_out) {
  if (m_out < 0) throw InvalidInput("series_exp: m_out must be >= 0");
  if (!f.all_finite()) throw InvalidInput("series_exp: non-finite input");
  if (f.coeff(0).real() > 709.0)
    throw std::range_error("series_exp: exp(F_0) overflows");
  TaylorCoeffs out(m_out);
  out.set_coeff(0, std::exp(f.coeff(0)));
  for (int n = 1; n <= m_out; ++n) {
    cplx acc(0.0, 0.0);
    const int k_hi = std::min(n, f.m_max());
    for (int k = 1; k <= k_hi; ++k)
      acc += static_cast<double>(k) * f.coeff(k) * out.coeff(n - k);
    out.set_coeff(n, acc / static_cast<double>(n));
  }
  return out;
}

/// sum |c_n|^2 = (1/2pi) int |f|^2 dtheta for the interpolant.
inline double parseval_energy(const FourierCoeffs& c) {
  double acc = 0.0;
  for (int n = -c.n_max(); n <= c.n_max(); ++n) acc += std::norm(c.coeff(n));
  return acc;
}

/// Cauchy-Schwarz bound on the truncation tail: an upper bound for
/// sup_{|z|<=rho} |sum_{n>m_cut} a_n z^n| of the form
/// (sum_{n>m_cut} |a_n|^2)^{1/2} (sum_{n>m_cut} rho^{2n})^{1/2}.
inline double tail_bound(const TaylorCoeffs& a, double rho, int m_cut) {
  if (!(rho > 0.0 && rho < 1.0))
    throw InvalidInput("tail_bound: rho must lie in (0,1)");
  if (m_cut < 0 || m_cut > a.m_max())
    throw InvalidInput("tail_bound: m_cut must lie in [0, m_max]");
  double energy = 0.0;
  for (int n = m_cut + 1; n <= a.m_max(); ++n) energy += std::norm(a.coeff(n));
  // geometric tail sum_{n > m_cut} rho^{2n}
  const double r2 = rho * rho;
  const double geom = std::pow(r2, m_cut + 1) / (1.0 - r2);
  return std::sqrt(energy) * std::sqrt(geom);
}

}  // namespace isodisk

#endif
