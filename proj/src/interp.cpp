#include "reflow/interp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace reflow::interp {

double hermite(double t, double t0, double t1, double f0, double f1, double d0,
               double d1) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return f0 * (2 * s3 - 3 * s2 + 1) + d0 * h * (s3 - 2 * s2 + s) +
           f1 * (-2 * s3 + 3 * s2) + d1 * h * (s3 - s2);
}

double hermite_deriv(double t, double t0, double t1, double f0, double f1, double d0,
                     double d1) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s;
    return (f0 * (6 * s2 - 6 * s) + f1 * (-6 * s2 + 6 * s)) / h +
           d0 * (3 * s2 - 4 * s + 1) + d1 * (3 * s2 - 2 * s);
}

double hermite_integral(double t, double t0, double t1, double f0, double f1, double d0,
                        double d1) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double s4 = s2 * s2;
    // Antiderivatives of the Hermite basis in s, scaled by h.
    const double H00 = 0.5 * s4 - s3 + s;
    const double H10 = 0.25 * s4 - (2.0 / 3.0) * s3 + 0.5 * s2;
    const double H01 = -0.5 * s4 + s3;
    const double H11 = 0.25 * s4 - s3 / 3.0;
    return h * (f0 * H00 + d0 * h * H10 + f1 * H01 + d1 * h * H11);
}

double hermite_invert(double y, double t0, double t1, double f0, double f1, double d0,
                      double d1, double tol) {
    if (y <= f0) return t0;
    if (y >= f1) return t1;
    double lo = t0, hi = t1;
    // Linear initial guess.
    double t = t0 + (t1 - t0) * (y - f0) / (f1 - f0);
    for (int it = 0; it < 100; ++it) {
        const double val = hermite(t, t0, t1, f0, f1, d0, d1);
        const double err = val - y;
        if (std::abs(err) <= tol) return t;
        if (err > 0)
            hi = t;
        else
            lo = t;
        const double der = hermite_deriv(t, t0, t1, f0, f1, d0, d1);
        double next = der > 0 ? t - err / der : lo;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        t = next;
    }
    return t;
}

namespace {

// Edge slope for pchip (three-point, shape-limited).
double edge_slope(double h0, double h1, double del0, double del1) {
    double d = ((2 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if (d * del0 <= 0)
        d = 0.0;
    else if (del0 * del1 < 0 && std::abs(d) > 3 * std::abs(del0))
        d = 3 * del0;
    return d;
}

}  // namespace

void pchip_slopes(std::span<const double> t, std::span<const double> f,
                  std::span<double> d_out) {
    const std::size_t n = t.size();
    assert(f.size() == n && d_out.size() == n && n >= 2);
    if (n == 2) {
        const double del = (f[1] - f[0]) / (t[1] - t[0]);
        d_out[0] = d_out[1] = del;
        return;
    }
    std::vector<double> h(n - 1), del(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = t[i + 1] - t[i];
        del[i] = (f[i + 1] - f[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (del[i - 1] * del[i] <= 0) {
            d_out[i] = 0.0;
        } else {
            const double w1 = 2 * h[i] + h[i - 1];
            const double w2 = h[i] + 2 * h[i - 1];
            d_out[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
        }
    }
    d_out[0] = edge_slope(h[0], h[1], del[0], del[1]);
    d_out[n - 1] = edge_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
}

double integrate_cubic(std::span<const double> xs, std::span<const double> fs, double a,
                       double b) {
    assert(xs.size() == 4 && fs.size() == 4);
    // Work in coordinates relative to a.
    const double B = b - a;
    double total = 0.0;
    for (int j = 0; j < 4; ++j) {
        double p[3];
        int m = 0;
        double denom = 1.0;
        for (int k = 0; k < 4; ++k) {
            if (k == j) continue;
            p[m++] = xs[k] - a;
            denom *= xs[j] - xs[k];
        }
        const double c2 = -(p[0] + p[1] + p[2]);
        const double c1 = p[0] * p[1] + p[0] * p[2] + p[1] * p[2];
        const double c0 = -p[0] * p[1] * p[2];
        const double integral =
            0.25 * B * B * B * B + c2 * B * B * B / 3.0 + 0.5 * c1 * B * B + c0 * B;
        total += fs[j] * integral / denom;
    }
    return total;
}

void integrate_samples_prefix(std::span<const double> t, std::span<const double> f,
                              std::span<double> prefix) {
    const std::size_t n = t.size();
    assert(f.size() == n && prefix.size() == n && n >= 1);
    prefix[0] = 0.0;
    if (n == 1) return;
    if (n == 2) {
        prefix[1] = 0.5 * (f[0] + f[1]) * (t[1] - t[0]);
        return;
    }
    if (n == 3) {
        // Quadratic through all three points.
        auto quad_int = [&](double a, double b) {
            // Lagrange quadratic on (t0,t1,t2), integrated over [a,b], local
            // coordinates relative to a.
            double total = 0.0;
            const double B = b - a;
            for (int j = 0; j < 3; ++j) {
                double p[2];
                int m = 0;
                double denom = 1.0;
                for (int k = 0; k < 3; ++k) {
                    if (k == j) continue;
                    p[m++] = t[k] - a;
                    denom *= t[j] - t[k];
                }
                const double integral =
                    B * B * B / 3.0 - 0.5 * (p[0] + p[1]) * B * B + p[0] * p[1] * B;
                total += f[j] * integral / denom;
            }
            return total;
        };
        prefix[1] = quad_int(t[0], t[1]);
        prefix[2] = prefix[1] + quad_int(t[1], t[2]);
        return;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t lo = i == 0 ? 0 : i - 1;
        if (lo + 4 > n) lo = n - 4;
        prefix[i + 1] = prefix[i] + integrate_cubic(t.subspan(lo, 4), f.subspan(lo, 4),
                                                    t[i], t[i + 1]);
    }
}

}  // namespace reflow::interp
