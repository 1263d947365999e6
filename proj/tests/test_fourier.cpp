#include <catch2/catch_amalgamated.hpp>

#include "isodisk/fourier.hpp"
#include "oracles.hpp"

using namespace isodisk;

namespace {

FourierCoeffs random_hermitian(oracle::Rng& rng, int n_max, double scale) {
  FourierCoeffs c(n_max);
  c.set_coeff(0, cplx(scale * rng.uniform(-1, 1), 0.0));
  for (int n = 1; n <= n_max; ++n) {
    const cplx v(scale * rng.uniform(-1, 1), scale * rng.uniform(-1, 1));
    c.set_coeff(n, v);
    c.set_coeff(-n, std::conj(v));
  }
  return c;
}

std::vector<cplx> sample_function(const std::function<double(double)>& f, int n) {
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = f(oracle::kTwoPi * k / n);
  return out;
}

}  // namespace

TEST_CASE("samples_to_coeffs on basic signals") {
  SECTION("constant samples give c_0 only") {
    const auto c = samples_to_coeffs(sample_function([](double) { return 1.0; }, 9));
    REQUIRE(c.coeff(0).real() == Catch::Approx(1.0).margin(1e-15));
    for (int n = 1; n <= c.n_max(); ++n) {
      REQUIRE(std::abs(c.coeff(n)) < 1e-15);
      REQUIRE(std::abs(c.coeff(-n)) < 1e-15);
    }
  }
  SECTION("cos theta splits into c_{+-1} = 1/2") {
    const auto c = samples_to_coeffs(sample_function([](double t) { return std::cos(t); }, 9));
    REQUIRE(std::abs(c.coeff(1) - cplx(0.5, 0)) < 1e-15);
    REQUIRE(std::abs(c.coeff(-1) - cplx(0.5, 0)) < 1e-15);
    REQUIRE(std::abs(c.coeff(2)) < 1e-15);
  }
  SECTION("mean of e^{cos} is I_0(1)") {
    const auto c = samples_to_coeffs(
        sample_function([](double t) { return std::exp(std::cos(t)); }, 65));
    // oracle: plain trapezoid quadrature of (1/2pi) int e^{cos}
    const double i0 = oracle::periodic_integral(
                          [](double t) { return std::exp(std::cos(t)); }, 256) /
                      oracle::kTwoPi;
    REQUIRE(c.coeff(0).real() == Catch::Approx(i0).epsilon(1e-12));
    REQUIRE(c.coeff(0).real() == Catch::Approx(1.2660658).margin(1e-6));
  }
  SECTION("real samples produce bit-exact Hermitian spectra") {
    oracle::Rng rng(7);
    const auto c = samples_to_coeffs(
        sample_function([&rng](double) { return rng.uniform(-1, 1); }, 33));
    for (int n = 0; n <= c.n_max(); ++n)
      REQUIRE(c.coeff(-n) == std::conj(c.coeff(n)));
  }
  SECTION("rejects even or tiny sample counts") {
    std::vector<cplx> s(8, cplx(1, 0));
    REQUIRE_THROWS_AS(samples_to_coeffs(s), InvalidInput);
    s.resize(1);
    REQUIRE_THROWS_AS(samples_to_coeffs(s), InvalidInput);
  }
}

TEST_CASE("coeffs_to_samples") {
  SECTION("constant spectrum") {
    FourierCoeffs c(0);
    c.set_coeff(0, cplx(1, 0));
    for (const cplx& v : coeffs_to_samples(c, 5)) REQUIRE(std::abs(v - cplx(1, 0)) < 1e-15);
  }
  SECTION("c_{+-1} = 1/2 gives cos at 8 nodes") {
    FourierCoeffs c(1);
    c.set_coeff(1, cplx(0.5, 0));
    c.set_coeff(-1, cplx(0.5, 0));
    const auto s = coeffs_to_samples(c, 8);
    for (int k = 0; k < 8; ++k)
      REQUIRE(s[static_cast<std::size_t>(k)].real() ==
              Catch::Approx(std::cos(oracle::kTwoPi * k / 8)).margin(1e-15));
  }
  SECTION("round-trip is the identity for band-limited data") {
    oracle::Rng rng(11);
    const auto c = random_hermitian(rng, 16, 1.0);
    const auto s = coeffs_to_samples(c, 33);
    const auto c2 = samples_to_coeffs(s);
    for (int n = -16; n <= 16; ++n)
      REQUIRE(std::abs(c2.coeff(n) - c.coeff(n)) < 1e-13);
    // and back through samples
    const auto s2 = coeffs_to_samples(c2, 33);
    for (std::size_t k = 0; k < s.size(); ++k) REQUIRE(std::abs(s2[k] - s[k]) < 1e-12);
  }
  SECTION("undersampling is rejected") {
    FourierCoeffs c(4);
    REQUIRE_THROWS_AS(coeffs_to_samples(c, 8), InvalidInput);
  }
}

TEST_CASE("series_exp") {
  SECTION("exp(0) = 1") {
    const auto b = series_exp(TaylorCoeffs(3), 6);
    REQUIRE(b.coeff(0) == cplx(1, 0));
    for (int n = 1; n <= 6; ++n) REQUIRE(std::abs(b.coeff(n)) == 0.0);
  }
  SECTION("exp(z) has coefficients 1/n!") {
    TaylorCoeffs f(1);
    f.set_coeff(1, cplx(1, 0));
    const auto b = series_exp(f, 10);
    double fact = 1.0;
    for (int n = 0; n <= 10; ++n) {
      if (n > 0) fact *= n;
      REQUIRE(std::abs(b.coeff(n) - cplx(1.0 / fact, 0)) < 1e-15);
    }
  }
  SECTION("exp(2z + z^2) matches sampled exponentials on |z| = 1/2") {
    TaylorCoeffs f(2);
    f.set_coeff(1, cplx(2, 0));
    f.set_coeff(2, cplx(1, 0));
    const auto b = series_exp(f, 6);
    // oracle: sample exp(2z+z^2) on the circle of radius 1/2, transform, and
    // undo the radius scaling of each mode
    const int m = 33;
    std::vector<cplx> s(m);
    for (int k = 0; k < m; ++k) {
      const cplx z = std::polar(0.5, oracle::kTwoPi * k / m);
      s[static_cast<std::size_t>(k)] = std::exp(2.0 * z + z * z);
    }
    const auto c = samples_to_coeffs(s);
    for (int n = 0; n <= 6; ++n) {
      const cplx expected = c.coeff(n) / std::pow(0.5, n);
      REQUIRE(std::abs(b.coeff(n) - expected) < 1e-12);
    }
  }
  SECTION("overflowing constant term") {
    TaylorCoeffs f(0);
    f.set_coeff(0, cplx(800, 0));
    REQUIRE_THROWS_AS(series_exp(f, 4), std::range_error);
  }
  SECTION("exp(F) exp(-F) = 1 up to truncation") {
    oracle::Rng rng(3);
    TaylorCoeffs f(8);
    for (int n = 1; n <= 8; ++n)
      f.set_coeff(n, cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)));
    const auto e = series_exp(f, 16);
    const auto einv = series_exp(series_scale(f, cplx(-1, 0)), 16);
    const auto prod = series_product(e, einv, 16);
    REQUIRE(std::abs(prod.coeff(0) - cplx(1, 0)) < 1e-10);
    for (int n = 1; n <= 16; ++n) REQUIRE(std::abs(prod.coeff(n)) < 1e-10);
  }
}

TEST_CASE("parseval_energy") {
  SECTION("basic spectra") {
    FourierCoeffs c(1);
    c.set_coeff(0, cplx(1, 0));
    REQUIRE(parseval_energy(c) == 1.0);
    c.set_coeff(0, cplx(0, 0));
    c.set_coeff(1, cplx(0.5, 0));
    c.set_coeff(-1, cplx(0.5, 0));
    REQUIRE(parseval_energy(c) == 0.5);
  }
  SECTION("matches |f|^2 quadrature") {
    oracle::Rng rng(5);
    const auto c = random_hermitian(rng, 8, 0.7);
    const double quad = oracle::periodic_integral(
                            [&c](double t) {
                              const double v = c.eval_real(t);
                              return v * v;
                            },
                            128) /
                        oracle::kTwoPi;
    REQUIRE(parseval_energy(c) == Catch::Approx(quad).epsilon(1e-12));
  }
  SECTION("invariant under phase rotation") {
    oracle::Rng rng(9);
    const auto c = random_hermitian(rng, 8, 1.0);
    const double phi = 0.8312;
    FourierCoeffs rot(8);
    for (int n = -8; n <= 8; ++n) rot.set_coeff(n, c.coeff(n) * std::polar(1.0, n * phi));
    REQUIRE(parseval_energy(rot) == Catch::Approx(parseval_energy(c)).epsilon(1e-13));
  }
}

TEST_CASE("tail_bound") {
  SECTION("zero tail") {
    TaylorCoeffs a(10);
    a.set_coeff(0, cplx(1, 0));
    a.set_coeff(3, cplx(2, 0));
    REQUIRE(tail_bound(a, 0.5, 5) == 0.0);
  }
  SECTION("dominates the exponential remainder") {
    TaylorCoeffs a(20);
    double fact = 1.0;
    for (int n = 0; n <= 20; ++n) {
      if (n > 0) fact *= n;
      a.set_coeff(n, cplx(1.0 / fact, 0));
    }
    double partial = 0.0;
    fact = 1.0;
    for (int n = 0; n <= 5; ++n) {
      if (n > 0) fact *= n;
      partial += std::pow(0.5, n) / fact;
    }
    const double actual = std::abs(std::exp(0.5) - partial);
    REQUIRE(tail_bound(a, 0.5, 5) >= actual);
  }
  SECTION("dominates a geometric tail") {
    TaylorCoeffs a(40);
    for (int n = 0; n <= 40; ++n) a.set_coeff(n, cplx(std::pow(0.5, n), 0));
    double tail = 0.0;
    for (int n = 4; n <= 40; ++n) tail += std::pow(0.25, n);
    REQUIRE(tail_bound(a, 0.5, 3) >= tail);
  }
  SECTION("bound dominates the tail sup on sampled points") {
    oracle::Rng rng(13);
    TaylorCoeffs a(24);
    for (int n = 0; n <= 24; ++n)
      a.set_coeff(n, cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)) * std::pow(0.8, n));
    const double rho = 0.7;
    const int m_cut = 6;
    TaylorCoeffs tail_only(24);
    for (int n = m_cut + 1; n <= 24; ++n) tail_only.set_coeff(n, a.coeff(n));
    double sup = 0.0;
    for (int k = 0; k < 64; ++k)
      sup = std::max(sup, std::abs(tail_only.eval(std::polar(rho, oracle::kTwoPi * k / 64))));
    REQUIRE(tail_bound(a, rho, m_cut) >= sup);
  }
  SECTION("rho outside (0,1) is rejected") {
    TaylorCoeffs a(4);
    REQUIRE_THROWS_AS(tail_bound(a, 1.0, 2), InvalidInput);
    REQUIRE_THROWS_AS(tail_bound(a, -0.1, 2), InvalidInput);
    REQUIRE_THROWS_AS(tail_bound(a, 0.5, 7), InvalidInput);
  }
}
