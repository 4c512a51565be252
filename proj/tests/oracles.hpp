#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// code paths it is used to check.

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace qrtrap::oracle {

// K(lambda) from int_0^1 dt / sqrt((1 - t^2)(1 - lambda^2 t^2)), tanh-sinh
// handles the endpoint singularity at t = 1.
inline double K_tanh_sinh(double lambda) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [lambda](double t, double one_minus_t) {
    // (1 - t^2) = (1 - t)(1 + t), with the complement supplied to keep digits.
    const double a = one_minus_t > 0.0 ? one_minus_t : 1.0 - t;
    return 1.0 / std::sqrt(a * (1.0 + t) * (1.0 - lambda * lambda * t * t));
  };
  return integrator.integrate(f, 0.0, 1.0, 1e-15);
}

// Same integral after t = sin(theta): a smooth integrand on [0, pi/2].
inline double K_gauss_kronrod(double lambda) {
  auto f = [lambda](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(1.0 - lambda * lambda * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi / 2,
                                                                       15, 1e-14);
}

inline double K_prime(double lambda) { return K_gauss_kronrod(std::sqrt(1.0 - lambda * lambda)); }

inline double g(double lambda) { return lambda * K_prime(lambda) / K_gauss_kronrod(lambda); }

inline double cot_pi(double alpha) {
  return std::cos(std::numbers::pi * alpha) / std::sin(std::numbers::pi * alpha);
}

}  // namespace qrtrap::oracle
