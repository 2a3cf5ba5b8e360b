#include "acps/acps_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "acps/errors.hpp"
#include "acps/special_fn.hpp"

namespace acps {

void validate(const AcpsProblem& problem) {
    if (!(problem.alpha > 0.0 && problem.alpha <= 1.0)) {
        throw DomainError("alpha out of (0,1]");
    }
    if (!std::isfinite(problem.t0)) {
        throw DomainError("t0 must be finite");
    }
    if (problem.y0.size() != problem.field.dimension()) {
        throw DimensionError("initial state has " + std::to_string(problem.y0.size()) +
                             " components, field dimension is " +
                             std::to_string(problem.field.dimension()));
    }
}

std::vector<FractionalPolynomial> build_defect(const PolynomialVectorField& field,
                                               std::span<const FractionalPolynomial> candidate,
                                               std::size_t max_degree) {
    const auto composed = compose_series(field, candidate, max_degree);
    std::vector<FractionalPolynomial> defect;
    defect.reserve(candidate.size());
    for (std::size_t j = 0; j < candidate.size(); ++j) {
        const FractionalPolynomial derivative = caputo_derivative(candidate[j]).resized(max_degree);
        defect.push_back(add_scaled(derivative, composed[j], 1.0, -1.0).resized(max_degree));
    }
    return defect;
}

AcpsSolution solve(const AcpsProblem& problem) {
    validate(problem);
    const std::size_t dim = problem.field.dimension();
    const std::size_t n = problem.degree;
    const double alpha = problem.alpha;

    std::vector<std::vector<double>> coeffs(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        coeffs[j].reserve(n + 1);
        coeffs[j].push_back(problem.y0[j]);
    }

    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<FractionalPolynomial> partial;
        partial.reserve(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            partial.emplace_back(alpha, problem.t0, coeffs[j]);
        }
        const auto composed = compose_series(problem.field, partial, i - 1);
        const double scale = gamma_ratio(static_cast<double>(i - 1) * alpha + 1.0,
                                         static_cast<double>(i) * alpha + 1.0);
        for (std::size_t j = 0; j < dim; ++j) {
            coeffs[j].push_back(scale * composed[j].coeff(i - 1));
        }
    }

    AcpsSolution solution;
    solution.series.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        solution.series.emplace_back(alpha, problem.t0, std::move(coeffs[j]));
    }
    solution.defect_coefficients.resize(dim);
    if (n > 0) {
        const auto defect = build_defect(problem.field, solution.series, n - 1);
        for (std::size_t j = 0; j < dim; ++j) {
            const auto c = defect[j].coeffs();
            solution.defect_coefficients[j].assign(c.begin(), c.end());
        }
    }
    return solution;
}

std::vector<double> verify_defect_conditions(const AcpsSolution& solution,
                                             const AcpsProblem& problem) {
    const std::size_t n = problem.degree;
    std::vector<double> worst(n, 0.0);
    if (n == 0) {
        return worst;
    }
    const auto defect = build_defect(problem.field, solution.series, n - 1);
    for (std::size_t i = 1; i <= n; ++i) {
        for (const auto& component : defect) {
            worst[i - 1] = std::max(worst[i - 1], std::abs(sequential_caputo_limit(component, i - 1)));
        }
    }
    return worst;
}

std::vector<double> defect_condition_scales(const AcpsSolution& solution,
                                            const AcpsProblem& problem) {
    const std::size_t n = problem.degree;
    std::vector<double> scales(n, 1.0);
    if (n == 0) {
        return scales;
    }
    const auto composed = compose_series(problem.field, solution.series, n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        const double g = gamma(static_cast<double>(k) * problem.alpha + 1.0);
        for (std::size_t j = 0; j < solution.series.size(); ++j) {
            const double derivative_part = caputo_derivative(solution.series[j]).coeff(k);
            scales[k] = std::max({scales[k], std::abs(g * derivative_part),
                                  std::abs(g * composed[j].coeff(k))});
        }
    }
    return scales;
}

}  // namespace acps
