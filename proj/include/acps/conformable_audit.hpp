#pragma once

namespace acps {

/// Side-by-side power-rule constants of the Caputo and conformable operators
/// for f(t) = (t - t0)^beta, with m = ceil(alpha):
///
///     Caputo:      Gamma(beta+1) / Gamma(beta-alpha+1) * (t - t0)^{beta-alpha}
///     conformable: Gamma(beta+1) / Gamma(beta-m+1)     * (t - t0)^{beta-alpha}
///
/// so caputo = conformable * ratio with ratio = Gamma(beta-m+1) / Gamma(beta-alpha+1).
struct DiscrepancyReport {
    double alpha;
    double beta_exp;
    int m;
    double caputo_coefficient;
    double conformable_coefficient;
    double ratio;
};

/// (t - t0)^{m - alpha} f^{(m)}(t) for f = (t - t0)^beta. Requires beta > m - 1,
/// and t_shift > 0 unless beta >= alpha.
double conformable_power_derivative(double beta_exp, double alpha, double t_shift);

/// Caputo derivative of (t - t0)^beta at t - t0 = t_shift, same preconditions.
double caputo_power_value(double beta_exp, double alpha, double t_shift);

DiscrepancyReport discrepancy_report(double beta_exp, double alpha);

}  // namespace acps
