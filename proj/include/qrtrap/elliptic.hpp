#pragma once

namespace qrtrap {

/// Complete elliptic integral of the first kind in the modulus convention,
/// K(lambda) = int_0^1 dt / sqrt((1 - t^2)(1 - lambda^2 t^2)),
/// computed as pi / (2 AGM(1, sqrt(1 - lambda^2))).
/// Defined for lambda in [0, 1); DomainError otherwise. Every double below 1
/// gives a finite value (about 19.4 at the largest one).
[[nodiscard]] double ellip_K(double lambda);

/// K'(lambda) = K(sqrt(1 - lambda^2)) for lambda in (0, 1].
[[nodiscard]] double ellip_K_prime(double lambda);

/// g(lambda) = lambda K'(lambda) / K(lambda) on (0, 1).
[[nodiscard]] double g_of(double lambda);

/// (1 - lambda^2) K(lambda) K'(lambda) - pi / 2; vanishes at the maximiser of g.
[[nodiscard]] double lambda0_residual(double lambda);

/// Root of lambda0_residual on (0.1, 0.99) by bisection, to better than 1e-10.
[[nodiscard]] double find_lambda0();

/// find_lambda0(), computed once per process.
[[nodiscard]] double lambda0();

/// C(alpha) = (sqrt(1 + tan^2(pi alpha) / 4) - tan(pi alpha) / 2)^2, evaluated as
/// 1 / (sqrt(1 + tan^2 / 4) + tan / 2)^2. C(1/2) = 0.
[[nodiscard]] double C_of_alpha(double alpha);

/// The difference form of C(alpha) as written; loses digits as alpha -> 1/2.
[[nodiscard]] double C_of_alpha_difference_form(double alpha);

struct EllipticValue {
  double lambda;
  double K;
  double Kprime;
  double g;
};

[[nodiscard]] EllipticValue evaluate_elliptic(double lambda);

}  // namespace qrtrap
