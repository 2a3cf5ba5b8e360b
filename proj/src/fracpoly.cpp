#include "acps/fracpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "acps/errors.hpp"
#include "acps/special_fn.hpp"

namespace acps {
namespace {

void require_same_grid(const FractionalPolynomial& p, const FractionalPolynomial& q,
                       const char* op) {
    if (!p.same_grid(q)) {
        std::ostringstream msg;
        msg << op << ": polynomials on different grids (alpha " << p.alpha() << " vs "
            << q.alpha() << ", t0 " << p.t0() << " vs " << q.t0() << ")";
        throw MismatchError(msg.str());
    }
}

// Gamma(i alpha + 1) / Gamma(j alpha + 1)
double grid_gamma_ratio(std::size_t i, std::size_t j, double alpha) {
    return gamma_ratio(static_cast<double>(i) * alpha + 1.0, static_cast<double>(j) * alpha + 1.0);
}

}  // namespace

FractionalPolynomial::FractionalPolynomial(double alpha, double t0, std::vector<double> coeffs)
    : alpha_(alpha), t0_(t0), coeffs_(std::move(coeffs)) {
    if (!(alpha_ > 0.0 && alpha_ <= 1.0)) {
        throw DomainError("fractional polynomial: alpha out of (0,1], got " + std::to_string(alpha_));
    }
    if (!std::isfinite(t0_)) {
        throw DomainError("fractional polynomial: t0 must be finite");
    }
    if (coeffs_.empty()) {
        coeffs_.push_back(0.0);
    }
}

FractionalPolynomial FractionalPolynomial::constant(double alpha, double t0, double value) {
    return FractionalPolynomial(alpha, t0, {value});
}

FractionalPolynomial FractionalPolynomial::zero(double alpha, double t0, std::size_t degree) {
    return FractionalPolynomial(alpha, t0, std::vector<double>(degree + 1, 0.0));
}

FractionalPolynomial FractionalPolynomial::resized(std::size_t degree) const {
    std::vector<double> c(coeffs_.begin(),
                          coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(coeffs_.size(), degree + 1)));
    c.resize(degree + 1, 0.0);
    return FractionalPolynomial(alpha_, t0_, std::move(c));
}

FractionalPolynomial FractionalPolynomial::shifted(std::size_t slots) const {
    std::vector<double> c(slots, 0.0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return FractionalPolynomial(alpha_, t0_, std::move(c));
}

FractionalPolynomial FractionalPolynomial::with_coeff(std::size_t i, double value) const {
    std::vector<double> c = coeffs_;
    if (i >= c.size()) {
        c.resize(i + 1, 0.0);
    }
    c[i] = value;
    return FractionalPolynomial(alpha_, t0_, std::move(c));
}

double evaluate(const FractionalPolynomial& p, double t) {
    const double dt = t - p.t0();
    if (dt < 0.0 || std::isnan(dt)) {
        throw DomainError("evaluate: t must satisfy t >= t0");
    }
    const auto c = p.coeffs();
    if (dt == 0.0) {
        return c[0];
    }
    // x = (t - t0)^alpha, then Horner in x.
    const double x = std::exp(p.alpha() * std::log(dt));
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x + c[i];
    }
    return acc;
}

FractionalPolynomial add_scaled(const FractionalPolynomial& p, const FractionalPolynomial& q,
                                double a, double b) {
    require_same_grid(p, q, "add_scaled");
    const std::size_t n = std::max(p.degree(), q.degree()) + 1;
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = a * p.coeff(i) + b * q.coeff(i);
    }
    return FractionalPolynomial(p.alpha(), p.t0(), std::move(c));
}

FractionalPolynomial multiply_truncated(const FractionalPolynomial& p,
                                        const FractionalPolynomial& q, std::size_t max_degree) {
    require_same_grid(p, q, "multiply_truncated");
    const auto pc = p.coeffs();
    const auto qc = q.coeffs();
    std::vector<double> r(max_degree + 1, 0.0);
    for (std::size_t i = 0; i < pc.size() && i <= max_degree; ++i) {
        if (pc[i] == 0.0) {
            continue;
        }
        const std::size_t jmax = std::min(qc.size() - 1, max_degree - i);
        for (std::size_t j = 0; j <= jmax; ++j) {
            r[i + j] += pc[i] * qc[j];
        }
    }
    return FractionalPolynomial(p.alpha(), p.t0(), std::move(r));
}

std::optional<PowerRuleTerm> caputo_power_rule(double beta_exp, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("caputo_power_rule: alpha must be positive");
    }
    if (!(beta_exp >= 0.0) || !std::isfinite(beta_exp)) {
        throw DomainError("caputo_power_rule: exponent must be non-negative");
    }
    const double m = std::ceil(alpha);
    const bool is_integer = beta_exp == std::floor(beta_exp);
    if (is_integer && beta_exp <= m - 1.0) {
        return std::nullopt;
    }
    if (!(beta_exp > m - 1.0)) {
        throw DomainError("caputo_power_rule: non-integer exponent must exceed ceil(alpha) - 1");
    }
    return PowerRuleTerm{gamma_ratio(beta_exp + 1.0, beta_exp - alpha + 1.0), beta_exp - alpha};
}

FractionalPolynomial caputo_derivative(const FractionalPolynomial& p) {
    const auto c = p.coeffs();
    if (c.size() == 1) {
        return FractionalPolynomial::zero(p.alpha(), p.t0());
    }
    std::vector<double> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
        d[i - 1] = c[i] * grid_gamma_ratio(i, i - 1, p.alpha());
    }
    return FractionalPolynomial(p.alpha(), p.t0(), std::move(d));
}

double sequential_caputo_limit(const FractionalPolynomial& p, std::size_t k) {
    if (k > p.degree()) {
        throw IndexError("sequential_caputo_limit: order " + std::to_string(k) +
                         " exceeds degree " + std::to_string(p.degree()));
    }
    FractionalPolynomial current = p;
    for (std::size_t i = 0; i < k; ++i) {
        current = caputo_derivative(current);
    }
    // Every remaining non-constant power vanishes as t -> t0+.
    return current.coeff(0);
}

FractionalPolynomial rl_integral(const FractionalPolynomial& p) {
    const auto c = p.coeffs();
    std::vector<double> r(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        r[i + 1] = c[i] * grid_gamma_ratio(i, i + 1, p.alpha());
    }
    return FractionalPolynomial(p.alpha(), p.t0(), std::move(r));
}

}  // namespace acps
