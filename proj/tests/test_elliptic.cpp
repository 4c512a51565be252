#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "qrtrap/elliptic.hpp"
#include "qrtrap/error.hpp"

using namespace qrtrap;

TEST_CASE("K at the ends of its range") {
  CHECK(ellip_K(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  const double near_one = 1.0 - 1e-16;
  REQUIRE(near_one < 1.0);
  const double big = ellip_K(near_one);
  CHECK(std::isfinite(big));
  CHECK(big > 18.0);
  CHECK_THROWS_AS((void)ellip_K(1.0), DomainError);
  CHECK_THROWS_AS((void)ellip_K(-0.1), DomainError);
  CHECK_THROWS_AS((void)ellip_K(std::nan("")), DomainError);
}

TEST_CASE("K matches quadrature of its defining integral") {
  for (int i = 1; i <= 9; ++i) {
    const double lambda = i / 10.0;
    const double k = ellip_K(lambda);
    CHECK(std::abs(k - oracle::K_tanh_sinh(lambda)) / k < 1e-10);
    CHECK(std::abs(k - oracle::K_gauss_kronrod(lambda)) / k < 1e-12);
  }
  CHECK(ellip_K(0.5) == doctest::Approx(1.685750354812596).epsilon(1e-14));
}

TEST_CASE("K prime") {
  CHECK(ellip_K_prime(1.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  CHECK(ellip_K_prime(0.5) == doctest::Approx(oracle::K_gauss_kronrod(std::sqrt(0.75))).epsilon(1e-12));
  CHECK_THROWS_AS((void)ellip_K_prime(0.0), DomainError);
  CHECK_THROWS_AS((void)ellip_K_prime(1.5), DomainError);
  for (double lambda = 0.01; lambda < 1.0; lambda += 0.01) {
    const double complement = std::sqrt(1.0 - lambda * lambda);
    CHECK(ellip_K_prime(lambda) == doctest::Approx(ellip_K(complement)).epsilon(1e-12));
  }
  // small lambda stays accurate: K'(l) ~ ln(4 / l)
  CHECK(ellip_K_prime(1e-12) == doctest::Approx(std::log(4e12)).epsilon(1e-12));
}

TEST_CASE("g") {
  CHECK(g_of(1e-6) < 0.1);
  CHECK(g_of(1.0 - 1e-6) < g_of(0.99));
  CHECK(g_of(0.99) < g_of(0.9));
  CHECK(g_of(0.5) == doctest::Approx(oracle::g(0.5)).epsilon(1e-12));
  CHECK_THROWS_AS((void)g_of(0.0), DomainError);
  CHECK_THROWS_AS((void)g_of(1.0), DomainError);

  const double top = g_of(lambda0());
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(1e-9, 1.0 - 1e-9);
  for (int i = 0; i < 1000; ++i) {
    CHECK(g_of(u(rng)) <= top);
  }
}

TEST_CASE("g is concave") {
  constexpr int n = 1000;
  double prev2 = g_of(1.0 / (n + 1));
  double prev1 = g_of(2.0 / (n + 1));
  for (int i = 3; i <= n; ++i) {
    const double cur = g_of(static_cast<double>(i) / (n + 1));
    CHECK(cur - 2 * prev1 + prev2 <= 1e-9);
    prev2 = prev1;
    prev1 = cur;
  }
}

TEST_CASE("lambda0") {
  const auto start = std::chrono::steady_clock::now();
  const double l0 = find_lambda0();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 0.1);
  CHECK(std::abs(l0 - 0.7373921) < 1e-6);
  CHECK(std::abs(lambda0_residual(l0)) < 1e-10);
  CHECK(lambda0() == l0);
  const double h = 1e-5;
  const double slope = (g_of(l0 + h) - g_of(l0 - h)) / (2 * h);
  CHECK(std::abs(slope) < 1e-6);
  // the defining product evaluated with the quadrature oracle
  const double product = (1 - l0 * l0) * oracle::K_gauss_kronrod(l0) * oracle::K_prime(l0);
  CHECK(product == doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
}

TEST_CASE("C(alpha)") {
  CHECK(C_of_alpha(0.5) == 0.0);
  const double quarter = (std::sqrt(5.0) - 1) * (std::sqrt(5.0) - 1) / 4;
  CHECK(C_of_alpha(0.25) == doctest::Approx(quarter).epsilon(1e-15));
  CHECK(C_of_alpha(0.25) == doctest::Approx(0.382).epsilon(1e-3));
  for (double alpha = 0.05; alpha <= 0.45 + 1e-12; alpha += 0.005) {
    CHECK(std::abs(C_of_alpha(alpha) - C_of_alpha_difference_form(alpha)) < 1e-14);
  }
  CHECK(C_of_alpha(0.4999999) < 1e-12);
  CHECK_THROWS_AS((void)C_of_alpha(0.0), DomainError);
  CHECK_THROWS_AS((void)C_of_alpha(0.51), DomainError);
}

TEST_CASE("evaluate_elliptic bundles the values") {
  const EllipticValue v = evaluate_elliptic(0.3);
  CHECK(v.K == ellip_K(0.3));
  CHECK(v.Kprime == ellip_K_prime(0.3));
  CHECK(v.g == doctest::Approx(g_of(0.3)));
  CHECK(v.K >= std::numbers::pi / 2);
}
