#pragma once

#include <functional>
#include <span>
#include <vector>

#include "reflow/quadrature.hpp"

namespace reflow {

/// A positive density profile on [0,1] that is smooth between listed
/// breakpoints. Point evaluation stays closed-form; partial masses come from
/// a precomputed breakpoint-respecting quadrature table.
class DensityProfile {
public:
    DensityProfile() = default;
    DensityProfile(std::function<double(double)> eval, std::vector<double> breakpoints,
                   double inf_bound, double sup_bound, std::size_t quad_panels = 64);

    double operator()(double x) const { return eval_(x); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    double inf_bound() const { return inf_bound_; }
    double sup_bound() const { return sup_bound_; }

    /// Integral of the profile over [0, x], x clamped to [0,1].
    double mass_to(double x) const { return cumulative_.to(x); }

    /// Total mass, integral over [0,1].
    double mass() const { return cumulative_.total(); }

private:
    std::function<double(double)> eval_;
    std::vector<double> breakpoints_;
    double inf_bound_ = 0.0;
    double sup_bound_ = 0.0;
    quad::CumulativeIntegral cumulative_;
};

/// rho0(x) = 6 + sin(pi x) + l * x^4 for l >= 0. Bounds: [6, 7 + l].
DensityProfile profile_bump(double l = 0.0);

/// Constant profile rho0(x) = rho_s.
DensityProfile profile_uniform(double rho_s);

/// Piecewise-linear profile through (xs, ys); knots become breakpoints.
/// xs must start at 0, end at 1, and increase strictly; ys must be positive.
DensityProfile profile_piecewise_linear(std::span<const double> xs,
                                        std::span<const double> ys);

/// Evaluation-only view of a density slice: callable plus the points where
/// the slice can kink or jump. Used by sup/inf scans.
struct ProfileView {
    std::function<double(double)> eval;
    std::vector<double> breakpoints;
};

ProfileView as_view(const DensityProfile& p);

}  // namespace reflow
