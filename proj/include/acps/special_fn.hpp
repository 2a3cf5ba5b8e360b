#pragma once

namespace acps {

/// Gamma function for x > 0, via a 13-term Lanczos rational approximation
/// (g ~ 6.0247). Relative error is a few ulp on (0, 50].
/// Throws DomainError for x <= 0 or non-finite x.
double gamma(double x);

/// Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
double beta(double x, double y);

/// Gamma(a) / Gamma(b); both arguments must be positive.
double gamma_ratio(double a, double b);

}  // namespace acps
