#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "acps/fracpoly.hpp"
#include "acps/reference_rk4.hpp"

namespace acps {

struct ErrorRow {
    double t;
    double reference;
    double approximation;
    double absolute_error;
    /// NaN when the reference value is zero.
    double relative_error;
};

struct ErrorTable {
    std::string variable;
    std::vector<ErrorRow> rows;
};

/// t_i = t0 + i / 10, i = 0..10.
std::vector<double> default_sample_times(double t0 = 0.0);

/// Reference values are looked up on the trajectory grid (tolerance 1e-12);
/// a time that is not recorded raises MissingSampleError.
ErrorTable comparison_table(const Trajectory& reference,
                            std::span<const FractionalPolynomial> series, std::size_t component,
                            std::span<const double> sample_times, std::string variable = {});

}  // namespace acps
