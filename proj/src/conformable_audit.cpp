#include "acps/conformable_audit.hpp"

#include <cmath>
#include <string>

#include "acps/errors.hpp"
#include "acps/special_fn.hpp"

namespace acps {
namespace {

int order_ceiling(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("alpha must be positive, got " + std::to_string(alpha));
    }
    return static_cast<int>(std::ceil(alpha));
}

void require_exponent(double beta_exp, int m) {
    if (!(beta_exp > m - 1) || !std::isfinite(beta_exp)) {
        throw DomainError("exponent " + std::to_string(beta_exp) + " must exceed m - 1 = " +
                          std::to_string(m - 1));
    }
}

double shifted_power(double beta_exp, double alpha, double t_shift) {
    if (t_shift < 0.0 || std::isnan(t_shift)) {
        throw DomainError("t - t0 must be non-negative");
    }
    const double p = beta_exp - alpha;
    if (t_shift == 0.0) {
        if (p < 0.0) {
            throw DomainError("derivative is singular at t = t0 when beta < alpha");
        }
        return p == 0.0 ? 1.0 : 0.0;
    }
    return std::pow(t_shift, p);
}

}  // namespace

double conformable_power_derivative(double beta_exp, double alpha, double t_shift) {
    const int m = order_ceiling(alpha);
    require_exponent(beta_exp, m);
    return gamma_ratio(beta_exp + 1.0, beta_exp - m + 1.0) *
           shifted_power(beta_exp, alpha, t_shift);
}

double caputo_power_value(double beta_exp, double alpha, double t_shift) {
    const int m = order_ceiling(alpha);
    require_exponent(beta_exp, m);
    return gamma_ratio(beta_exp + 1.0, beta_exp - alpha + 1.0) *
           shifted_power(beta_exp, alpha, t_shift);
}

DiscrepancyReport discrepancy_report(double beta_exp, double alpha) {
    const int m = order_ceiling(alpha);
    require_exponent(beta_exp, m);
    return DiscrepancyReport{
        alpha,
        beta_exp,
        m,
        gamma_ratio(beta_exp + 1.0, beta_exp - alpha + 1.0),
        gamma_ratio(beta_exp + 1.0, beta_exp - m + 1.0),
        gamma_ratio(beta_exp - m + 1.0, beta_exp - alpha + 1.0),
    };
}

}  // namespace acps
