#pragma once

// Adaptive Dormand-Prince 5(4) for complex-valued states parameterized by a
// real path variable. Shared by the PVI path integrator and the lambda-plane
// transport.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "pvi/errors.hpp"
#include "pvi/mat2.hpp"

namespace pvi {

template <std::size_t N>
using State = std::array<cx, N>;

namespace detail {

template <std::size_t N>
State<N> axpy(const State<N>& y, double h, const std::array<double, 7>& w,
              const std::array<State<N>, 7>& k, int stages) {
    State<N> out = y;
    for (int s = 0; s < stages; ++s) {
        if (w[s] == 0.0) continue;
        for (std::size_t i = 0; i < N; ++i) out[i] += h * w[s] * k[s][i];
    }
    return out;
}

}  // namespace detail

struct OdeOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    double h_init = 1e-3;
    double h_min_rel = 1e-14;  // StepUnderflow below h_min_rel * |interval|
    long max_steps = 2000000;
};

// Integrates dy/dt = f(t, y) over t in [0, 1]; calls observe(t, y) after each
// accepted step (and at t=0). Throws StepUnderflow if the controller stalls.
template <std::size_t N, typename F, typename Obs>
State<N> integrate_dp5(F&& f, State<N> y, const OdeOptions& opt, Obs&& observe) {
    // Dormand-Prince tableau
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    double t = 0.0, h = std::min(opt.h_init, 1.0);
    std::array<State<N>, 7> k;
    k[0] = f(t, y);
    observe(0.0, y);
    long steps = 0;
    while (t < 1.0) {
        if (++steps > opt.max_steps) throw ConvergenceError("integrate_dp5: step cap exceeded");
        if (h < opt.h_min_rel) throw StepUnderflow("integrate_dp5: step size underflow");
        if (t + h > 1.0) h = 1.0 - t;

        k[1] = f(t + c2 * h, detail::axpy(y, h, {a21}, k, 1));
        k[2] = f(t + c3 * h, detail::axpy(y, h, {a31, a32}, k, 2));
        k[3] = f(t + c4 * h, detail::axpy(y, h, {a41, a42, a43}, k, 3));
        k[4] = f(t + c5 * h, detail::axpy(y, h, {a51, a52, a53, a54}, k, 4));
        k[5] = f(t + h, detail::axpy(y, h, {a61, a62, a63, a64, a65}, k, 5));
        State<N> y5 = detail::axpy(y, h, {b1, 0.0, b3, b4, b5, b6}, k, 6);
        k[6] = f(t + h, y5);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            cx e = h * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] +
                        e6 * k[5][i] + e7 * k[6][i]);
            double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            double r = std::abs(e) / sc;
            err = std::max(err, r);
        }
        if (err <= 1.0) {
            t += h;
            y = y5;
            k[0] = k[6];  // FSAL
            observe(t, y);
        }
        double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::min(5.0, std::max(0.2, factor));
    }
    return y;
}

}  // namespace pvi
