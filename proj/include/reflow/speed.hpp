#pragma once

#include <functional>
#include <string>
#include <vector>

namespace reflow {

/// Production-speed law: a positive, non-increasing C1 function of the total
/// work in progress, with a declared bound on |derivative|.
struct SpeedFunction {
    std::function<double(double)> value;       // W >= 0 -> speed > 0
    std::function<double(double)> derivative;  // W -> d(speed)/dW
    double lipschitz_K = 0.0;                  // declared sup |derivative|
    double lambda0 = 0.0;                      // value(0)

    double operator()(double w) const { return value(w); }
};

/// speed(W) = 1 / (1 + W); derivative bound 1, speed(0) = 1.
SpeedFunction speed_hyperbolic();

/// Constant speed c > 0. The declared derivative bound must be positive for
/// the guarantee formulas, so it defaults to 1 rather than the tight 0.
SpeedFunction speed_constant(double c, double declared_K = 1.0);

struct PlantCheck {
    std::string name;
    bool pass = false;
    double worst_w = 0.0;   // grid point with the largest violation
    std::string message;
};

struct PlantReport {
    bool pass = false;
    std::vector<PlantCheck> checks;
};

/// Grid-check the speed-law assumptions on [0, w_hi]: positivity, finiteness,
/// monotone non-increase, |derivative| <= lipschitz_K, and lambda0 == value(0).
PlantReport validate_plant(const SpeedFunction& speed, std::size_t grid_n,
                           double w_hi = 100.0);

}  // namespace reflow
