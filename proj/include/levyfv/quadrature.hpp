#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "levyfv/errors.hpp"

namespace levyfv::quad {

/// One Gauss-Kronrod 7-15 pass over [a,b]. Returns the K15 value and an
/// error estimate from the G7/K15 difference.
template <class F>
struct GkResult {
    double value;
    double error;
};

namespace detail {
// Nodes/weights for Gauss-Kronrod 7-15 on [-1,1]; node, Gauss weight, Kronrod weight.
inline constexpr double gk15[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
    {0.207784955007898468, 0.0, 0.204432940075298892},
    {0.586087235467691130, 0.0, 0.169004726639267903},
    {0.864864423359769073, 0.0, 0.104790010322250184},
    {0.991455371120812639, 0.0, 0.022935322010529225},
};
}  // namespace detail

template <class F>
GkResult<F> gauss_kronrod_15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = detail::gk15[0][1] * f0;
    double k15 = detail::gk15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * detail::gk15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += detail::gk15[i][1] * fi;
        k15 += detail::gk15[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    double err = std::abs(k15 - g7);
    // Standard QUADPACK-style sharpening of the raw difference.
    err = 200.0 * err;
    err = err * std::sqrt(err) / 200.0;
    if (!(err < std::abs(k15 - g7))) err = std::abs(k15 - g7);
    return {k15, err};
}

/// Adaptive Gauss-Kronrod integration with a worst-interval-first heap.
/// Throws QuadratureFailure when the budget is exhausted with the global
/// error estimate still above max(abs_tol, rel_tol*|I|).
template <class F>
double integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 0.0, int max_intervals = 4000) {
    if (a == b) return 0.0;
    struct Piece {
        double a, b, value, error;
        bool operator<(const Piece& o) const { return error < o.error; }
    };
    std::priority_queue<Piece> heap;
    auto r = gauss_kronrod_15(f, a, b);
    heap.push({a, b, r.value, r.error});
    double total = r.value;
    double total_err = r.error;
    int used = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (used >= max_intervals) {
            throw QuadratureFailure("adaptive quadrature: error " +
                                    std::to_string(total_err) + " above tolerance after " +
                                    std::to_string(used) + " intervals");
        }
        Piece worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) {
            // Interval at rounding resolution; accept its estimate as-is.
            total_err -= worst.error;
            if (heap.empty()) break;
            continue;
        }
        auto left = gauss_kronrod_15(f, worst.a, m);
        auto right = gauss_kronrod_15(f, m, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push({worst.a, m, left.value, left.error});
        heap.push({m, worst.b, right.value, right.error});
        ++used;
    }
    return total;
}

/// Adaptive integration of an integrand with an (integrable) singularity at
/// the lower endpoint: seeds a log-spaced mesh towards `a` before adapting.
template <class F>
double integrate_singular_lower(const F& f, double a, double b, double rel_tol = 1e-10,
                                double abs_tol = 0.0, int max_intervals = 6000) {
    if (!(b > a)) return 0.0;
    double total = 0.0;
    double hi = b;
    // Geometric bisection towards the singular end, then plain adaptive per cell.
    int cells = 0;
    while (hi - a > 1e-14 * std::abs(b) && cells < 60) {
        double lo = a + 0.5 * (hi - a);
        if (cells == 59 || hi - a < 4e-14 * std::abs(b)) lo = a;
        total += integrate(f, lo, hi, rel_tol, abs_tol * 0.5, max_intervals / 8);
        hi = lo;
        ++cells;
        if (lo == a) break;
    }
    return total;
}

/// Fixed 8-point Gauss-Legendre rule on [a,b] (used for cell projections).
template <class F>
double gauss_legendre_8(const F& f, double a, double b) {
    static constexpr double x[4] = {0.1834346424956498049, 0.5255324099163289858,
                                    0.7966664774136267395, 0.9602898564975362317};
    static constexpr double w[4] = {0.3626837833783619830, 0.3137066458778872873,
                                    0.2223810344533744705, 0.1012285362903762592};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        s += w[i] * (f(mid + half * x[i]) + f(mid - half * x[i]));
    }
    return s * half;
}

/// Fixed 12-point Gauss-Legendre rule on [a,b] (smooth wrapped densities).
template <class F>
double gauss_legendre_12(const F& f, double a, double b) {
    static constexpr double x[6] = {0.1252334085114689155, 0.3678314989981801937,
                                    0.5873179542866174473, 0.7699026741943046870,
                                    0.9041172563704748567, 0.9815606342467192506};
    static constexpr double w[6] = {0.2491470458134027850, 0.2334925365383548087,
                                    0.2031674267230659217, 0.1600783285433462263,
                                    0.1069393259953184309, 0.0471753363865118271};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 6; ++i) {
        s += w[i] * (f(mid + half * x[i]) + f(mid - half * x[i]));
    }
    return s * half;
}

}  // namespace levyfv::quad
