#include "acps/metrics.hpp"

#include <cmath>
#include <limits>

#include "acps/errors.hpp"

namespace acps {

std::vector<double> default_sample_times(double t0) {
    std::vector<double> times;
    for (int i = 0; i <= 10; ++i) {
        times.push_back(t0 + static_cast<double>(i) / 10.0);
    }
    return times;
}

ErrorTable comparison_table(const Trajectory& reference,
                            std::span<const FractionalPolynomial> series, std::size_t component,
                            std::span<const double> sample_times, std::string variable) {
    if (component >= series.size()) {
        throw IndexError("comparison_table: component " + std::to_string(component) +
                         " out of range");
    }
    ErrorTable table{std::move(variable), {}};
    table.rows.reserve(sample_times.size());
    for (double t : sample_times) {
        const auto idx = reference.find_time(t);
        if (!idx) {
            throw MissingSampleError("comparison_table: t = " + std::to_string(t) +
                                     " is not on the reference grid");
        }
        const auto& state = reference.states[*idx];
        if (component >= state.size()) {
            throw IndexError("comparison_table: reference state too short");
        }
        const double ref = state[component];
        const double approx = evaluate(series[component], t);
        const double abs_err = std::abs(ref - approx);
        const double rel_err =
            ref == 0.0 ? std::numeric_limits<double>::quiet_NaN() : abs_err / std::abs(ref);
        table.rows.push_back({t, ref, approx, abs_err, rel_err});
    }
    return table;
}

}  // namespace acps
