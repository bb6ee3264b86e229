#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace reflow::interp {

/// Cubic Hermite value on [t0,t1] from endpoint values and slopes.
double hermite(double t, double t0, double t1, double f0, double f1, double d0, double d1);

/// Derivative of the cubic Hermite interpolant at t.
double hermite_deriv(double t, double t0, double t1, double f0, double f1, double d0,
                     double d1);

/// Integral of the cubic Hermite interpolant over [t0, t].
double hermite_integral(double t, double t0, double t1, double f0, double f1, double d0,
                        double d1);

/// Solve hermite(t) = y on [t0,t1] for a strictly increasing interpolant.
/// Newton iteration with a bisection safeguard; tol is in ordinate units.
double hermite_invert(double y, double t0, double t1, double f0, double f1, double d0,
                      double d1, double tol);

/// Shape-preserving cubic slopes (Fritsch-Carlson) on a non-uniform grid.
/// t must be strictly increasing with at least two points.
void pchip_slopes(std::span<const double> t, std::span<const double> f,
                  std::span<double> d_out);

/// Integral over [a,b] of the cubic through four samples (xs, fs).
/// Coordinates are shifted locally before expanding powers, so closely
/// spaced nodes far from the origin do not lose precision.
double integrate_cubic(std::span<const double> xs, std::span<const double> fs, double a,
                       double b);

/// Prefix integrals of a sampled function using a sliding 4-point cubic per
/// interval (composite 4th order). prefix[k] = integral from t[0] to t[k];
/// grids with fewer than four points fall back to lower-degree rules.
void integrate_samples_prefix(std::span<const double> t, std::span<const double> f,
                              std::span<double> prefix);

}  // namespace reflow::interp
