#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "acps/field_model.hpp"
#include "acps/fracpoly.hpp"

namespace acps {

/// D^alpha y = f(t, y), y(t0) = y0, sought as a degree-n fractional polynomial.
struct AcpsProblem {
    PolynomialVectorField field;
    std::vector<double> y0;
    double alpha = 1.0;
    double t0 = 0.0;
    std::size_t degree = 1;
};

struct AcpsSolution {
    std::vector<FractionalPolynomial> series;
    /// Per equation, coefficients 0..n-1 of the defect of the final series.
    std::vector<std::vector<double>> defect_coefficients;
};

/// Throws DomainError / DimensionError when the problem invariants fail.
void validate(const AcpsProblem& problem);

/// Defect D^alpha P - f(t, P), one component per equation, truncated at max_degree.
std::vector<FractionalPolynomial> build_defect(const PolynomialVectorField& field,
                                               std::span<const FractionalPolynomial> candidate,
                                               std::size_t max_degree);

/// Determines c_1..c_n by the explicit recursion
///
///     c_i = Gamma((i-1) alpha + 1) / Gamma(i alpha + 1) * [f(t, P_{i-1})]_{i-1},
///
/// where [.]_k is the coefficient of (t - t0)^{k alpha}. Because f is polynomial,
/// that coefficient only involves c_0..c_{i-1}, so each vanishing-defect condition
/// is linear in the one new unknown. All components advance together.
AcpsSolution solve(const AcpsProblem& problem);

/// For each i = 1..n, the largest |lim_{t->t0+} D^{(i-1)alpha} Def_j(t)| over
/// equations j, evaluated through repeated Caputo differentiation of the defect.
/// Entry [i-1] belongs to condition i.
std::vector<double> verify_defect_conditions(const AcpsSolution& solution,
                                             const AcpsProblem& problem);

/// Magnitude against which verify_defect_conditions entries are judged:
/// for condition i, the largest |Gamma((i-1) alpha + 1) x| over the index-(i-1)
/// coefficients x of both defect parts (derivative and composed field), floored at 1.
std::vector<double> defect_condition_scales(const AcpsSolution& solution,
                                            const AcpsProblem& problem);

}  // namespace acps
