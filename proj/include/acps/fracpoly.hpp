#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace acps {

/// Truncated fractional power series
///
///     p(t) = sum_{i=0}^{n} c_i (t - t0)^{i alpha},   0 < alpha <= 1,
///
/// stored as a flat coefficient list (no Gamma factors pulled out).
/// Values are immutable; every operation returns a new polynomial.
class FractionalPolynomial {
public:
    /// Throws DomainError unless 0 < alpha <= 1 and t0 is finite.
    /// An empty coefficient list is normalised to the zero constant.
    FractionalPolynomial(double alpha, double t0, std::vector<double> coeffs);

    static FractionalPolynomial constant(double alpha, double t0, double value);
    static FractionalPolynomial zero(double alpha, double t0, std::size_t degree = 0);

    double alpha() const noexcept { return alpha_; }
    double t0() const noexcept { return t0_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    /// c_i, or 0 for indices beyond the degree.
    double coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    /// Same polynomial, padded with zeros or cut down to `degree`.
    FractionalPolynomial resized(std::size_t degree) const;

    /// Multiplication by (t - t0)^{slots alpha}: coefficients move up by `slots`.
    FractionalPolynomial shifted(std::size_t slots) const;

    /// Same coefficients except c_i replaced by `value` (extends the degree if needed).
    FractionalPolynomial with_coeff(std::size_t i, double value) const;

    bool same_grid(const FractionalPolynomial& other) const noexcept {
        return alpha_ == other.alpha_ && t0_ == other.t0_;
    }

    friend bool operator==(const FractionalPolynomial&, const FractionalPolynomial&) = default;

private:
    double alpha_;
    double t0_;
    std::vector<double> coeffs_;
};

/// sum c_i (t - t0)^{i alpha}; (t - t0)^0 is 1, also at t = t0.
/// Throws DomainError for t < t0.
double evaluate(const FractionalPolynomial& p, double t);

/// a p + b q, degree max(deg p, deg q). Throws MismatchError if grids differ.
FractionalPolynomial add_scaled(const FractionalPolynomial& p, const FractionalPolynomial& q,
                                double a, double b);

/// Cauchy product truncated at `max_degree`; result has degree exactly max_degree.
FractionalPolynomial multiply_truncated(const FractionalPolynomial& p,
                                        const FractionalPolynomial& q, std::size_t max_degree);

/// D^alpha (t - t0)^beta = coefficient * (t - t0)^exponent.
struct PowerRuleTerm {
    double coefficient;
    double exponent;
};

/// Caputo derivative of order `alpha` of (t - t0)^beta_exp. Returns nullopt when
/// beta_exp is one of the integers 0..m-1 (the power is annihilated), with
/// m = ceil(alpha). Throws DomainError for beta_exp < 0 or for non-integer
/// beta_exp <= m - 1.
std::optional<PowerRuleTerm> caputo_power_rule(double beta_exp, double alpha);

/// Caputo derivative of order p.alpha() applied term-wise on the grid:
/// c'_{i-1} = c_i Gamma(i alpha + 1) / Gamma((i - 1) alpha + 1).
/// A constant maps to the zero constant.
FractionalPolynomial caputo_derivative(const FractionalPolynomial& p);

/// lim_{t -> t0+} (D^alpha)^k p(t), computed by applying caputo_derivative k
/// times and reading off the constant term. Throws IndexError for k > degree.
double sequential_caputo_limit(const FractionalPolynomial& p, std::size_t k);

/// Riemann-Liouville integral of order p.alpha():
/// c'_{i+1} = c_i Gamma(i alpha + 1) / Gamma((i + 1) alpha + 1), c'_0 = 0.
FractionalPolynomial rl_integral(const FractionalPolynomial& p);

}  // namespace acps
