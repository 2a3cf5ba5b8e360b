#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acps/field_model.hpp"

namespace acps {

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;

    /// Index of the recorded time within `tol` of t, if any.
    std::optional<std::size_t> find_time(double t, double tol = 1e-12) const;
};

/// Classical RK4 on y' = f(t, y) (integer order; time powers act on t - t0).
/// `h` must divide t_end - t0 to within 1e-12 relative. The initial point and
/// every `record_every`-th step are recorded.
Trajectory rk4_integrate(const PolynomialVectorField& field, const std::vector<double>& y0,
                         double t0, double t_end, double h, std::size_t record_every = 1);

}  // namespace acps
