#include <catch2/catch_amalgamated.hpp>

#include "isodisk/harmonic.hpp"
#include "oracles.hpp"

using namespace isodisk;

namespace {

FourierCoeffs cos_theta() {
  FourierCoeffs u(1);
  u.set_coeff(1, cplx(0.5, 0));
  u.set_coeff(-1, cplx(0.5, 0));
  return u;
}

FourierCoeffs random_boundary(oracle::Rng& rng, int n_max, double amp) {
  FourierCoeffs u(n_max);
  double l1 = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const cplx v(rng.uniform(-1, 1), rng.uniform(-1, 1));
    u.set_coeff(n, v);
    u.set_coeff(-n, std::conj(v));
    l1 += 2.0 * std::abs(v);
  }
  const double s = amp / l1;
  for (int n = 1; n <= n_max; ++n) {
    u.set_coeff(n, s * u.coeff(n));
    u.set_coeff(-n, s * u.coeff(-n));
  }
  return u;
}

// discrete Laplacian via the circle-mean stencil: for harmonic data the
// average over a small circle equals the center value, so this residual is
// zero to roundoff; the 4/rho^2 scaling makes it a Laplacian estimate.
double circle_mean_laplacian(const HarmonicField& h, cplx z, double rho) {
  double mean = 0.0;
  const int n = 32;
  for (int k = 0; k < n; ++k) mean += h(z + std::polar(rho, oracle::kTwoPi * k / n));
  mean /= n;
  return 4.0 / (rho * rho) * (mean - h(z));
}

}  // namespace

TEST_CASE("poisson_extend") {
  SECTION("zero data extends to zero") {
    const HarmonicField h = poisson_extend(FourierCoeffs(4));
    REQUIRE(h(0.3, 1.1) == 0.0);
  }
  SECTION("cos theta extends to r cos theta") {
    const HarmonicField h = poisson_extend(cos_theta());
    REQUIRE(h(0.5, 0.0) == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(h(0.7, oracle::kPi / 3) ==
            Catch::Approx(0.7 * std::cos(oracle::kPi / 3)).margin(1e-15));
  }
  SECTION("mean value at the origin is c_0") {
    std::vector<cplx> s(65);
    for (int k = 0; k < 65; ++k)
      s[static_cast<std::size_t>(k)] = std::exp(std::cos(oracle::kTwoPi * k / 65));
    const auto u = samples_to_coeffs(s);
    const HarmonicField h = poisson_extend(u);
    REQUIRE(h(0.0, 0.0) == Catch::Approx(oracle::bessel_i0(1.0)).margin(1e-7));
    REQUIRE(h(0.0, 0.0) == Catch::Approx(u.coeff(0).real()).margin(1e-12));
  }
  SECTION("boundary values match the data at sample angles") {
    oracle::Rng rng(21);
    const auto u = random_boundary(rng, 8, 1.0);
    const HarmonicField h = poisson_extend(u);
    for (int k = 0; k < 32; ++k) {
      const double t = oracle::kTwoPi * k / 32;
      REQUIRE(h(1.0, t) == Catch::Approx(u.eval_real(t)).margin(1e-10));
    }
  }
  SECTION("harmonicity: circle-mean Laplacian residual below 1e-8") {
    oracle::Rng rng(22);
    const auto u = random_boundary(rng, 8, 1.0);
    const HarmonicField h = poisson_extend(u);
    for (int i = 0; i < 20; ++i) {
      const cplx z = std::polar(rng.uniform(0.0, 0.8), rng.uniform(0.0, oracle::kTwoPi));
      REQUIRE(std::abs(circle_mean_laplacian(h, z, 0.1)) < 1e-8);
    }
  }
  SECTION("maximum principle on a grid") {
    oracle::Rng rng(23);
    const auto u = random_boundary(rng, 6, 1.0);
    const HarmonicField h = poisson_extend(u);
    double bmin = 1e300, bmax = -1e300;
    for (int k = 0; k < 256; ++k) {
      const double v = u.eval_real(oracle::kTwoPi * k / 256);
      bmin = std::min(bmin, v);
      bmax = std::max(bmax, v);
    }
    for (int i = 0; i < 200; ++i) {
      const double v = h(std::polar(rng.uniform(0.0, 0.999),
                                    rng.uniform(0.0, oracle::kTwoPi)));
      REQUIRE(v >= bmin - 1e-9);
      REQUIRE(v <= bmax + 1e-9);
    }
  }
  SECTION("non-Hermitian data is rejected") {
    FourierCoeffs bad(1);
    bad.set_coeff(1, cplx(1, 0));  // missing conjugate partner
    REQUIRE_THROWS_AS(poisson_extend(bad), InvalidInput);
  }
}

TEST_CASE("holomorphic_completion") {
  SECTION("zero maps to zero") {
    const auto f = holomorphic_completion(FourierCoeffs(3));
    for (int n = 0; n <= 3; ++n) REQUIRE(std::abs(f.coeff(n)) == 0.0);
  }
  SECTION("cos theta completes to z") {
    const auto f = holomorphic_completion(cos_theta());
    REQUIRE(std::abs(f.coeff(0)) == 0.0);
    REQUIRE(std::abs(f.coeff(1) - cplx(1, 0)) < 1e-15);
  }
  SECTION("cos 2theta + sin theta completes to -i z + z^2") {
    FourierCoeffs u(2);
    u.set_coeff(2, cplx(0.5, 0));
    u.set_coeff(-2, cplx(0.5, 0));
    u.set_coeff(1, cplx(0, -0.5));
    u.set_coeff(-1, cplx(0, 0.5));
    const auto f = holomorphic_completion(u);
    REQUIRE(std::abs(f.coeff(1) - cplx(0, -1)) < 1e-15);
    REQUIRE(std::abs(f.coeff(2) - cplx(1, 0)) < 1e-15);
    // Re F = h on sampled interior points
    const HarmonicField h = poisson_extend(u);
    for (int k = 0; k < 24; ++k) {
      const cplx z = std::polar(0.85, oracle::kTwoPi * k / 24);
      REQUIRE(f.eval(z).real() == Catch::Approx(h(z)).margin(1e-11));
    }
    REQUIRE(f.eval(cplx(0, 0)).imag() == 0.0);
  }
  SECTION("non-Hermitian data is rejected") {
    FourierCoeffs bad(1);
    bad.set_coeff(-1, cplx(0, 1));
    REQUIRE_THROWS_AS(holomorphic_completion(bad), InvalidInput);
  }
}

TEST_CASE("build_conformal_factor") {
  SECTION("u = 0 gives the identity map") {
    const auto cf = build_conformal_factor(FourierCoeffs(2), 8);
    REQUIRE(std::abs(cf.g.coeff(1) - cplx(1, 0)) < 1e-15);
    for (int n = 2; n <= 8; ++n) REQUIRE(std::abs(cf.g.coeff(n)) < 1e-15);
  }
  SECTION("u = cos theta gives g = 2(e^{z/2} - 1)") {
    const auto cf = build_conformal_factor(cos_theta(), 16);
    double fact = 1.0;
    for (int n = 1; n <= 10; ++n) {
      fact *= n;
      const double expected = 1.0 / (std::pow(2.0, n - 1) * fact);
      REQUIRE(std::abs(cf.g.coeff(n) - cplx(expected, 0)) < 1e-14);
    }
  }
  SECTION("constant u scales the identity") {
    FourierCoeffs u(0);
    u.set_coeff(0, cplx(0.8, 0));
    const auto cf = build_conformal_factor(u, 4);
    REQUIRE(std::abs(cf.g.coeff(1) - cplx(std::exp(0.4), 0)) < 1e-14);
    REQUIRE(std::abs(cf.g.coeff(2)) < 1e-15);
  }
  SECTION("g'(0) is e^{c_0/2} and positive") {
    oracle::Rng rng(31);
    auto u = random_boundary(rng, 6, 0.9);
    u.set_coeff(0, cplx(0.37, 0));
    const auto cf = build_conformal_factor(u, 48);
    REQUIRE(std::abs(cf.g_prime.coeff(0) - cplx(std::exp(0.185), 0)) < 1e-12);
  }
  SECTION("insufficient truncation is rejected") {
    REQUIRE_THROWS_AS(build_conformal_factor(cos_theta(), 1), InvalidInput);
  }
}

TEST_CASE("residual_check") {
  SECTION("u = 0 has zero residual") {
    const FourierCoeffs u(2);
    const auto cf = build_conformal_factor(u, 8);
    REQUIRE(residual_check(cf, u, 8, 16) == 0.0);
  }
  SECTION("u = cos theta at N=16, M=64 on a 32x64 grid") {
    FourierCoeffs u(16);
    u.set_coeff(1, cplx(0.5, 0));
    u.set_coeff(-1, cplx(0.5, 0));
    const auto cf = build_conformal_factor(u, 64);
    REQUIRE(residual_check(cf, u, 32, 64) < 1e-10);
  }
  SECTION("random band-limited boundaries stay below 1e-8") {
    oracle::Rng rng(37);
    for (int trial = 0; trial < 5; ++trial) {
      const auto u = random_boundary(rng, 8, 1.0);
      const auto cf = build_conformal_factor(u, 128);
      REQUIRE(residual_check(cf, u, 16, 32) < 1e-8);
    }
  }
}

TEST_CASE("conformal area consistency") {
  // area from the series route equals int e^h by an independent Simpson rule
  oracle::Rng rng(41);
  const auto u = random_boundary(rng, 6, 1.0);
  const auto cf = build_conformal_factor(u, 128);
  const HarmonicField h = poisson_extend(u);
  const double series = kPi * [&cf] {
    double acc = 0.0;
    for (int n = 1; n <= cf.g.m_max(); ++n) acc += n * std::norm(cf.g.coeff(n));
    return acc;
  }();
  const double quad = oracle::disk_integral(
      [&h](double r, double t) { return std::exp(h(r, t)); }, 1024, 128);
  REQUIRE(series == Catch::Approx(quad).margin(1e-8));
}
