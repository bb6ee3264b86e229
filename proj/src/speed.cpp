#include "reflow/speed.hpp"

#include <cmath>
#include <stdexcept>

namespace reflow {

SpeedFunction speed_hyperbolic() {
    SpeedFunction s;
    s.value = [](double w) { return 1.0 / (1.0 + w); };
    s.derivative = [](double w) {
        const double d = 1.0 + w;
        return -1.0 / (d * d);
    };
    s.lipschitz_K = 1.0;
    s.lambda0 = 1.0;
    return s;
}

SpeedFunction speed_constant(double c, double declared_K) {
    if (!(c > 0.0)) throw std::invalid_argument("speed_constant: c must be positive");
    if (!(declared_K > 0.0))
        throw std::invalid_argument("speed_constant: derivative bound must be positive");
    SpeedFunction s;
    s.value = [c](double) { return c; };
    s.derivative = [](double) { return 0.0; };
    s.lipschitz_K = declared_K;
    s.lambda0 = c;
    return s;
}

PlantReport validate_plant(const SpeedFunction& speed, std::size_t grid_n, double w_hi) {
    if (grid_n < 2) throw std::invalid_argument("validate_plant: grid_n must be >= 2");
    PlantReport report;

    PlantCheck finite{"finite speed", true, 0.0, ""};
    PlantCheck positive{"positive speed", true, 0.0, ""};
    PlantCheck nonincreasing{"non-increasing", true, 0.0, ""};
    PlantCheck deriv_bound{"derivative bound", true, 0.0, ""};
    PlantCheck lambda0{"lambda0 consistency", true, 0.0, ""};

    double prev = 0.0;
    double worst_incr = 0.0;
    double worst_deriv = 0.0;
    for (std::size_t k = 0; k < grid_n; ++k) {
        const double w = w_hi * static_cast<double>(k) / static_cast<double>(grid_n - 1);
        const double v = speed.value(w);
        const double dv = speed.derivative(w);
        if (!std::isfinite(v) || !std::isfinite(dv)) {
            finite.pass = false;
            finite.worst_w = w;
            finite.message = "invalid speed function";
        }
        if (!(v > 0.0)) {
            positive.pass = false;
            positive.worst_w = w;
        }
        if (k > 0) {
            // Tiny slack absorbs rounding in flat regions.
            const double incr = v - prev;
            if (incr > 1e-12 * std::max(1.0, std::abs(prev)) && incr > worst_incr) {
                nonincreasing.pass = false;
                nonincreasing.worst_w = w;
                worst_incr = incr;
            }
        }
        const double excess = std::abs(dv) - speed.lipschitz_K;
        if (excess > 1e-12 * std::max(1.0, speed.lipschitz_K) && excess > worst_deriv) {
            deriv_bound.pass = false;
            deriv_bound.worst_w = w;
            worst_deriv = excess;
        }
        prev = v;
    }
    const double l0 = speed.value(0.0);
    if (!(std::abs(l0 - speed.lambda0) <= 1e-12 * std::max(1.0, std::abs(l0)))) {
        lambda0.pass = false;
        lambda0.message = "declared lambda0 differs from value(0)";
    }

    report.checks = {finite, positive, nonincreasing, deriv_bound, lambda0};
    report.pass = true;
    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

}  // namespace reflow
