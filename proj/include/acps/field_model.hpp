#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "acps/fracpoly.hpp"

namespace acps {

/// coeff * (t - t0)^{time_power alpha} * prod_j y_j^{state_powers[j]}
struct Monomial {
    double coeff = 0.0;
    std::vector<unsigned> state_powers;
    unsigned time_power = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

using TermList = std::vector<Monomial>;

/// Polynomial right-hand side f(t, y): one term list per state variable.
class PolynomialVectorField {
public:
    /// Throws DimensionError if the equation count or any monomial's
    /// state_powers length differs from the number of variables.
    PolynomialVectorField(std::vector<TermList> equations, std::vector<std::string> variable_names);

    /// Unnamed variables y0, y1, ...
    explicit PolynomialVectorField(const std::vector<TermList>& equations);

    std::size_t dimension() const noexcept { return equations_.size(); }
    const std::vector<TermList>& equations() const noexcept { return equations_; }
    const std::vector<std::string>& variable_names() const noexcept { return names_; }

    friend bool operator==(const PolynomialVectorField&, const PolynomialVectorField&) = default;

private:
    std::vector<TermList> equations_;
    std::vector<std::string> names_;
};

/// Pointwise evaluation with time_powers applied to `time_factor` = (t - t0)^alpha.
std::vector<double> evaluate_field(const PolynomialVectorField& field, double time_factor,
                                   std::span<const double> y);

/// Substitutes the series for the state variables and expands every monomial
/// into a fractional polynomial of degree exactly `max_degree`.
std::vector<FractionalPolynomial> compose_series(const PolynomialVectorField& field,
                                                 std::span<const FractionalPolynomial> y_series,
                                                 std::size_t max_degree);

}  // namespace acps
