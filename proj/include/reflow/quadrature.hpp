#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace reflow::quad {

/// Nodes and weights of the 16-point Gauss-Legendre rule on [-1,1].
std::span<const double> gl16_nodes();
std::span<const double> gl16_weights();

/// 16-point Gauss-Legendre estimate of the integral of f over [a,b].
template <class F>
double gl16(F&& f, double a, double b) {
    const auto xs = gl16_nodes();
    const auto ws = gl16_weights();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) s += ws[i] * f(mid + half * xs[i]);
    return half * s;
}

/// Panel decomposition of [lo,hi] that never straddles a cut point: cuts are
/// inserted as panel boundaries and each resulting span is subdivided so no
/// panel exceeds (hi-lo)/min_panels.
std::vector<double> make_panels(double lo, double hi, std::span<const double> cuts,
                                std::size_t min_panels);

/// Composite 16-point Gauss-Legendre over panel edges produced by make_panels.
double integrate_panels(const std::function<double(double)>& f,
                        std::span<const double> edges);

/// Precomputed cumulative integral of a function on [0,1]: panel edges and
/// running panel sums, so partial integrals cost one panel evaluation.
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;
    CumulativeIntegral(std::function<double(double)> f, std::span<const double> cuts,
                       std::size_t min_panels);

    /// Integral of f over [0, x] for x in [0,1]; x is clamped to the domain.
    double to(double x) const;

    /// Integral over the whole domain [0,1].
    double total() const;

private:
    std::function<double(double)> f_;
    std::vector<double> edges_;
    std::vector<double> cum_;  // cum_[i] = integral over [0, edges_[i]]
};

}  // namespace reflow::quad
