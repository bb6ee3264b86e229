#pragma once

#include <cstddef>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reflow::kernels {

/// Result of a max-scan: the maximum value and the point where it was first
/// attained (smallest grid index wins on ties, so results do not depend on
/// the number of threads).
struct ScanMax {
    double value = 0.0;
    double arg = 0.0;
};

bool parallel_enabled();
void set_parallel_enabled(bool on);
int worker_count();

namespace detail {
// Grid point k of an n-point closed uniform grid on [a,b].
inline double grid_point(double a, double b, std::size_t n, std::size_t k) {
    if (n == 1) return a;
    return a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
}
}  // namespace detail

/// Serial reference: max of f over an n-point uniform grid on [a,b] plus any
/// extra probe points.
template <class F>
ScanMax sup_scan_serial(F&& f, double a, double b, std::size_t n,
                        std::span<const double> extra = {}) {
    ScanMax best{f(a), a};
    for (std::size_t k = 1; k < n; ++k) {
        const double x = detail::grid_point(a, b, n, k);
        const double v = f(x);
        if (v > best.value) best = {v, x};
    }
    for (double x : extra) {
        if (x < a || x > b) continue;
        const double v = f(x);
        if (v > best.value) best = {v, x};
    }
    return best;
}

/// OpenMP variant of sup_scan_serial. The combine rule (strictly larger
/// value, or equal value at a smaller index) makes the result identical to
/// the serial reference for any thread count.
template <class F>
ScanMax sup_scan_omp(F&& f, double a, double b, std::size_t n,
                     std::span<const double> extra = {}) {
#ifdef _OPENMP
    double best_val = f(a);
    long long best_idx = 0;
    const long long nn = static_cast<long long>(n);
#pragma omp parallel
    {
        double loc_val = best_val;
        long long loc_idx = 0;
#pragma omp for nowait schedule(static)
        for (long long k = 1; k < nn; ++k) {
            const double x = detail::grid_point(a, b, n, static_cast<std::size_t>(k));
            const double v = f(x);
            if (v > loc_val || (v == loc_val && k < loc_idx)) {
                loc_val = v;
                loc_idx = k;
            }
        }
#pragma omp critical(reflow_sup_scan)
        {
            if (loc_val > best_val || (loc_val == best_val && loc_idx < best_idx)) {
                best_val = loc_val;
                best_idx = loc_idx;
            }
        }
    }
    ScanMax best{best_val, detail::grid_point(a, b, n, static_cast<std::size_t>(best_idx))};
    for (double x : extra) {
        if (x < a || x > b) continue;
        const double v = f(x);
        if (v > best.value) best = {v, x};
    }
    return best;
#else
    return sup_scan_serial(f, a, b, n, extra);
#endif
}

/// Dispatcher: OpenMP path for large grids when enabled, otherwise the
/// serial reference. Both paths return bit-identical results.
template <class F>
ScanMax sup_scan(F&& f, double a, double b, std::size_t n,
                 std::span<const double> extra = {}) {
#ifdef _OPENMP
    if (parallel_enabled() && n >= 8192)
        return sup_scan_omp(f, a, b, n, extra);
#endif
    return sup_scan_serial(f, a, b, n, extra);
}

/// Serial reference: evaluate f(i) for i in [0, n) into out[i].
template <class F>
void map_indexed_serial(std::size_t n, F&& f, std::span<double> out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
}

/// OpenMP variant. Each slot is written exactly once, so the result is
/// identical to the serial path.
template <class F>
void map_indexed_omp(std::size_t n, F&& f, std::span<double> out) {
#ifdef _OPENMP
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < nn; ++i)
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
#else
    map_indexed_serial(n, f, out);
#endif
}

template <class F>
void map_indexed(std::size_t n, F&& f, std::span<double> out) {
#ifdef _OPENMP
    if (parallel_enabled() && n >= 2) {
        map_indexed_omp(n, f, out);
        return;
    }
#endif
    map_indexed_serial(n, f, out);
}

/// Deterministic sum of per-panel contributions: partials are computed in
/// parallel, then accumulated in index order.
template <class F>
double panel_sum(std::size_t n_panels, F&& panel_value) {
    std::vector<double> partial(n_panels);
    map_indexed(n_panels, panel_value, partial);
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

template <class F>
double panel_sum_serial(std::size_t n_panels, F&& panel_value) {
    std::vector<double> partial(n_panels);
    map_indexed_serial(n_panels, panel_value, partial);
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

}  // namespace reflow::kernels
