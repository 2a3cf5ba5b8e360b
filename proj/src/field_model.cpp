#include "acps/field_model.hpp"

#include <cmath>
#include <string>

#include "acps/errors.hpp"

namespace acps {
namespace {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("y" + std::to_string(i));
    }
    return names;
}

double int_pow(double x, unsigned e) {
    double r = 1.0;
    for (unsigned k = 0; k < e; ++k) {
        r *= x;
    }
    return r;
}

}  // namespace

PolynomialVectorField::PolynomialVectorField(std::vector<TermList> equations,
                                             std::vector<std::string> variable_names)
    : equations_(std::move(equations)), names_(std::move(variable_names)) {
    const std::size_t n = equations_.size();
    if (n == 0) {
        throw DimensionError("vector field needs at least one equation");
    }
    if (names_.size() != n) {
        throw DimensionError("vector field: " + std::to_string(names_.size()) +
                             " variable names for " + std::to_string(n) + " equations");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (const Monomial& m : equations_[i]) {
            if (m.state_powers.size() != n) {
                throw DimensionError("vector field: equation " + std::to_string(i) +
                                     " has a term with " + std::to_string(m.state_powers.size()) +
                                     " state powers, expected " + std::to_string(n));
            }
        }
    }
}

PolynomialVectorField::PolynomialVectorField(const std::vector<TermList>& equations)
    : PolynomialVectorField(equations, default_names(equations.size())) {}

std::vector<double> evaluate_field(const PolynomialVectorField& field, double time_factor,
                                   std::span<const double> y) {
    if (y.size() != field.dimension()) {
        throw DimensionError("evaluate_field: state has " + std::to_string(y.size()) +
                             " components, field dimension is " +
                             std::to_string(field.dimension()));
    }
    if (time_factor < 0.0) {
        throw DomainError("evaluate_field: time factor must be non-negative");
    }
    std::vector<double> out(field.dimension(), 0.0);
    for (std::size_t i = 0; i < field.dimension(); ++i) {
        double acc = 0.0;
        for (const Monomial& m : field.equations()[i]) {
            double term = m.coeff * int_pow(time_factor, m.time_power);
            for (std::size_t j = 0; j < y.size(); ++j) {
                term *= int_pow(y[j], m.state_powers[j]);
            }
            acc += term;
        }
        out[i] = acc;
    }
    return out;
}

std::vector<FractionalPolynomial> compose_series(const PolynomialVectorField& field,
                                                 std::span<const FractionalPolynomial> y_series,
                                                 std::size_t max_degree) {
    if (y_series.size() != field.dimension()) {
        throw DimensionError("compose_series: " + std::to_string(y_series.size()) +
                             " series for a field of dimension " +
                             std::to_string(field.dimension()));
    }
    const double alpha = y_series.front().alpha();
    const double t0 = y_series.front().t0();
    for (const auto& s : y_series) {
        if (!s.same_grid(y_series.front())) {
            throw MismatchError("compose_series: state series on different grids");
        }
    }

    std::vector<FractionalPolynomial> out;
    out.reserve(field.dimension());
    for (const TermList& terms : field.equations()) {
        FractionalPolynomial acc = FractionalPolynomial::zero(alpha, t0, max_degree);
        for (const Monomial& m : terms) {
            if (m.time_power > max_degree) {
                continue;
            }
            const std::size_t room = max_degree - m.time_power;
            FractionalPolynomial product = FractionalPolynomial::constant(alpha, t0, m.coeff);
            for (std::size_t j = 0; j < y_series.size(); ++j) {
                for (unsigned e = 0; e < m.state_powers[j]; ++e) {
                    product = multiply_truncated(product, y_series[j], room);
                }
            }
            acc = add_scaled(acc, product.shifted(m.time_power).resized(max_degree), 1.0, 1.0);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace acps
