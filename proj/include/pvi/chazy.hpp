#pragma once

// Closed-form transcendent at theta = (2,0,0,1) built from the omega pair,
// with region-stable algebra near x = 1 and x = infinity, plus the printed
// rho-transport formulas.

#include <cmath>
#include <complex>

#include "pvi/errors.hpp"
#include "pvi/specfun.hpp"

namespace pvi {

struct ChazyParams {
    cx nu;
    long p = 1;
    cx rho0{}, rhoinf{}, rho1{};
};

inline cx chazy_nu_from_rho0(cx rho0) {
    cx den = 4.0 * std::log(2.0) - 1.0 + rho0;
    if (std::abs(den) < 1e-14) throw SingularDenominator("chazy: 4 ln 2 - 1 + rho0 = 0");
    return 1.0 / den;
}

namespace detail {

struct ChazyFactors {
    cx w, wp, u, v, d, x;
};

inline ChazyFactors chazy_factors(cx x, cx nu, const SeriesConfig& cfg) {
    const cx h = 0.5, I(0.0, 1.0);
    SeriesConfig wide = cfg;
    wide.z_max = 0.76;
    ChazyFactors f;
    f.x = x;
    if (std::abs(x) >= 4.0 / 3.0) {
        // w = W(t)/sqrt(x), t = 1/x; cancellation-free combinations via W, W'.
        cx t = 1.0 / x;
        cx F = hyp_f(h, h, 1.0, t, wide), g = norlund_g(h, h, 1.0, t, wide);
        cx Fp = hyp_f_dz({h, h, 1.0}, t, wide), gp = norlund_g_dz(h, h, 1.0, t, wide);
        cx W = F + (nu - I / kPi) * g;
        cx Wp = Fp + (nu - I / kPi) * gp;
        cx sq = std::sqrt(x);
        f.w = W / sq;
        f.wp = -(W / 2.0 + t * Wp) / (sq * x);
        f.u = -2.0 * t * Wp / sq;           // 2 x w' + w, exact
        f.v = f.u - 2.0 * f.wp;             // 2 (x-1) w' + w
        f.d = f.u * f.v + 2.0 * f.w * f.wp; // 4x(x-1)w'^2 + 4x w'w + w^2
        return f;
    }
    OmegaValue om;
    if (std::abs(1.0 - x) <= 0.75) {
        cx s = 1.0 - x;
        cx F = hyp_f(h, h, 1.0, s, wide), g = norlund_g(h, h, 1.0, s, wide);
        cx Fp = hyp_f_dz({h, h, 1.0}, s, wide), gp = norlund_g_dz(h, h, 1.0, s, wide);
        om = {-g / kPi, -kPi * F, gp / kPi, kPi * Fp};
    } else if (std::abs(x) <= 0.75) {
        om = {hyp_f(h, h, 1.0, x, wide), norlund_g(h, h, 1.0, x, wide),
              hyp_f_dz({h, h, 1.0}, x, wide), norlund_g_dz(h, h, 1.0, x, wide)};
    } else {
        throw BranchError("chazy: x outside all connection regions");
    }
    f.w = om.w1 + nu * om.w2;
    f.wp = om.dw1 + nu * om.dw2;
    f.u = 2.0 * x * f.wp + f.w;
    f.v = 2.0 * (x - 1.0) * f.wp + f.w;
    // expanded form avoids the difference-of-squares cancellation near x = 1
    f.d = 4.0 * x * (x - 1.0) * f.wp * f.wp + 4.0 * x * f.wp * f.w + f.w * f.w;
    return f;
}

}  // namespace detail

// The closed-form transcendent for theta = (2, 0, 0, 1).
inline cx chazy_solution(cx x, cx nu, const SeriesConfig& cfg = {}) {
    if (std::abs(x) < 1e-300 || std::abs(x - 1.0) < 1e-300)
        throw DomainError("chazy_solution: x must avoid {0, 1}");
    auto f = detail::chazy_factors(x, nu, cfg);
    double scale = std::max({std::abs(f.u * f.v), std::abs(f.w * f.wp), 1e-300});
    if (std::abs(f.d) < 1e-13 * scale)
        throw DenominatorZero("chazy_solution: movable pole (denominator vanishes)");
    return 8.0 * x * f.w * f.wp * f.v * f.u / (f.d * f.d);
}

// dy/dx of the closed form; uses w'' from the hypergeometric ODE.
inline cx chazy_solution_deriv(cx x, cx nu, const SeriesConfig& cfg = {}) {
    auto f = detail::chazy_factors(x, nu, cfg);
    // w solves x(1-x) w'' + (1-2x) w' - w/4 = 0
    cx wpp = ((2.0 * x - 1.0) * f.wp + f.w / 4.0) / (x * (1.0 - x));
    cx up = 3.0 * f.wp + 2.0 * x * wpp;
    cx vp = 3.0 * f.wp + 2.0 * (x - 1.0) * wpp;
    cx dp = 4.0 * (2.0 * x - 1.0) * f.wp * f.wp + 8.0 * x * (x - 1.0) * f.wp * wpp +
            4.0 * f.wp * f.w + 4.0 * x * (wpp * f.w + f.wp * f.wp) + 2.0 * f.w * f.wp;
    cx N = 8.0 * x * f.w * f.wp * f.v * f.u;
    cx Np = 8.0 * (f.w * f.wp * f.v * f.u +
                   x * (f.wp * f.wp * f.v * f.u + f.w * wpp * f.v * f.u +
                        f.w * f.wp * vp * f.u + f.w * f.wp * f.v * up));
    double scale = std::max({std::abs(f.u * f.v), std::abs(f.w * f.wp), 1e-300});
    if (std::abs(f.d) < 1e-13 * scale)
        throw DenominatorZero("chazy_solution_deriv: movable pole");
    return Np / (f.d * f.d) - 2.0 * N * dp / (f.d * f.d * f.d);
}

struct RhoTransport {
    cx rhoinf, rho1;
};

// Printed transport formulas, verbatim.
inline RhoTransport rho_transport(cx rho0) {
    const double L2 = std::log(2.0);
    cx u = 4.0 * L2 - 1.0 + rho0;
    if (std::abs(u) < 1e-14) throw SingularDenominator("rho_transport: 4 ln 2 - 1 + rho0 = 0");
    cx deninf = kPi - cx(0.0, 1.0) * u;
    if (std::abs(deninf) < 1e-14)
        throw SingularDenominator("rho_transport: pi - i (4 ln 2 - 1 + rho0) = 0");
    RhoTransport out;
    out.rhoinf = kPi * u / deninf - 2.0 * L2 + 1.0;
    out.rho1 = kPi * kPi / u - L2 + 1.0;
    return out;
}

}  // namespace pvi
