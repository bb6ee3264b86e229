#include "reflow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reflow::quad {

namespace {

// Abscissae/weights for n=16 Gauss-Legendre on [-1,1].
constexpr double kNodes[16] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
    -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
    0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
    0.9894009349916499};

constexpr double kWeights[16] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
    0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
    0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
    0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
    0.0271524594117541};

}  // namespace

std::span<const double> gl16_nodes() { return {kNodes, 16}; }
std::span<const double> gl16_weights() { return {kWeights, 16}; }

std::vector<double> make_panels(double lo, double hi, std::span<const double> cuts,
                                std::size_t min_panels) {
    if (!(hi > lo)) return {lo, hi};
    if (min_panels == 0) min_panels = 1;
    std::vector<double> anchors{lo, hi};
    for (double c : cuts) {
        if (c > lo && c < hi) anchors.push_back(c);
    }
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

    const double max_len = (hi - lo) / static_cast<double>(min_panels);
    std::vector<double> edges;
    edges.push_back(anchors.front());
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        const double a = anchors[i];
        const double b = anchors[i + 1];
        const auto parts = static_cast<std::size_t>(std::ceil((b - a) / max_len));
        for (std::size_t k = 1; k < std::max<std::size_t>(parts, 1); ++k)
            edges.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(parts));
        edges.push_back(b);
    }
    return edges;
}

double integrate_panels(const std::function<double(double)>& f,
                        std::span<const double> edges) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) s += gl16(f, edges[i], edges[i + 1]);
    return s;
}

CumulativeIntegral::CumulativeIntegral(std::function<double(double)> f,
                                       std::span<const double> cuts,
                                       std::size_t min_panels)
    : f_(std::move(f)), edges_(make_panels(0.0, 1.0, cuts, min_panels)) {
    cum_.resize(edges_.size());
    cum_[0] = 0.0;
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
        cum_[i + 1] = cum_[i] + gl16(f_, edges_[i], edges_[i + 1]);
}

double CumulativeIntegral::to(double x) const {
    if (edges_.empty()) throw std::logic_error("CumulativeIntegral: empty");
    if (x <= edges_.front()) return 0.0;
    if (x >= edges_.back()) return cum_.back();
    const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
    const auto i = static_cast<std::size_t>(it - edges_.begin()) - 1;
    return cum_[i] + gl16(f_, edges_[i], x);
}

double CumulativeIntegral::total() const {
    if (edges_.empty()) throw std::logic_error("CumulativeIntegral: empty");
    return cum_.back();
}

}  // namespace reflow::quad
