#include "acps/reference_rk4.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "acps/errors.hpp"

namespace acps {

std::optional<std::size_t> Trajectory::find_time(double t, double tol) const {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (std::abs(times[i] - t) <= tol) {
            return i;
        }
    }
    return std::nullopt;
}

Trajectory rk4_integrate(const PolynomialVectorField& field, const std::vector<double>& y0,
                         double t0, double t_end, double h, std::size_t record_every) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("rk4_integrate: step size must be positive");
    }
    if (!(t_end > t0)) {
        throw DomainError("rk4_integrate: t_end must exceed t0");
    }
    if (record_every == 0) {
        throw DomainError("rk4_integrate: record_every must be positive");
    }
    if (y0.size() != field.dimension()) {
        throw DimensionError("rk4_integrate: initial state dimension mismatch");
    }
    const double span = t_end - t0;
    const double steps_real = std::round(span / h);
    if (steps_real < 1.0 || std::abs(steps_real * h - span) > 1e-12 * std::max(1.0, span)) {
        throw DomainError("rk4_integrate: step " + std::to_string(h) +
                          " does not divide the interval length " + std::to_string(span));
    }
    const auto steps = static_cast<std::size_t>(steps_real);
    const std::size_t dim = y0.size();

    Trajectory traj;
    traj.times.push_back(t0);
    traj.states.push_back(y0);

    std::vector<double> y = y0;
    std::vector<double> stage(dim);
    auto f = [&](double s, const std::vector<double>& state) {
        return evaluate_field(field, s, state);
    };
    auto offset = [&](const std::vector<double>& k, double scale) {
        for (std::size_t d = 0; d < dim; ++d) {
            stage[d] = y[d] + scale * k[d];
        }
        return stage;
    };

    for (std::size_t step = 1; step <= steps; ++step) {
        // Time argument is the offset from t0.
        const double s = static_cast<double>(step - 1) * h;
        const auto k1 = f(s, y);
        const auto k2 = f(s + 0.5 * h, offset(k1, 0.5 * h));
        const auto k3 = f(s + 0.5 * h, offset(k2, 0.5 * h));
        const auto k4 = f(s + h, offset(k3, h));
        for (std::size_t d = 0; d < dim; ++d) {
            y[d] += h / 6.0 * (k1[d] + 2.0 * k2[d] + 2.0 * k3[d] + k4[d]);
        }
        if (step % record_every == 0) {
            traj.times.push_back(t0 + static_cast<double>(step) * h);
            traj.states.push_back(y);
        }
    }
    return traj;
}

}  // namespace acps
