#pragma once

namespace pubdebt::special {

/// Euler–Mascheroni constant, -psi(1).
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// psi(x) = d/dx log Gamma(x) for x > 0. Upward recurrence to x >= 6, then the
/// asymptotic Bernoulli series. Throws Error(InvalidParameter) for x <= 0.
[[nodiscard]] double digamma(double x);

/// psi'(x) for x > 0, same scheme as digamma.
[[nodiscard]] double trigamma(double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a), a > 0, x >= 0.
[[nodiscard]] double gamma_q(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x).
[[nodiscard]] double gamma_p(double a, double x);

}  // namespace pubdebt::special
