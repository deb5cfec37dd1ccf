#pragma once

// Monodromy representation containers and trace-level operations shared by the
// closed-form constructors and the numerical continuation.

#include <cmath>
#include <complex>

#include "pvi/mat2.hpp"
#include "pvi/pvi.hpp"

namespace pvi {

// Ordered triple w.r.t. the loop basis (1,2,3) = (0, x, 1); gamma_inf =
// gamma_0 gamma_x gamma_1, so M_inf = M1 Mx M0.
struct MonodromyRep {
    Mat2 m0, mx, m1;
};

struct TraceTriple {
    cx t0x, t01, t1x;
};

inline TraceTriple trace_triple(const MonodromyRep& rep) {
    return {(rep.m0 * rep.mx).trace(), (rep.m0 * rep.m1).trace(), (rep.m1 * rep.mx).trace()};
}

// sigma with 0 <= Re sigma <= 1 solving 2 cos(pi sigma) = t0x; boundary ties
// resolved to Im sigma >= 0.
inline cx sigma_from_trace(cx t0x) {
    cx s = std::acos(t0x / 2.0) / kPi;
    constexpr double edge = 1e-14;
    if (std::abs(s.real()) < edge && s.imag() < 0.0) s = -s;
    if (std::abs(s.real() - 1.0) < edge && s.imag() < 0.0) s = 2.0 - s;
    return s;
}

// Residual of the trace relation printed in the paper (section 2.2):
//   cos(pi t0) tr(M1Mx) + cos(pi t1) tr(M0Mx) + cos(pi tx) tr(M0M1)
//     = 2 cos(pi tinf) + 4 cos(pi t1) cos(pi t0) cos(pi tx).
// Genuine monodromy satisfies this only on special loci (see the character
// variety cubic below for the relation that always holds).
inline double fricke_check(const ThetaTuple& t, const TraceTriple& tt) {
    cx c0 = std::cos(kPi * t.theta0), cxv = std::cos(kPi * t.thetax);
    cx c1 = std::cos(kPi * t.theta1), ci = std::cos(kPi * t.thetainf);
    cx lhs = c0 * tt.t1x + c1 * tt.t0x + cxv * tt.t01;
    cx rhs = 2.0 * ci + 4.0 * c1 * c0 * cxv;
    return std::abs(lhs - rhs);
}

// The Fricke cubic of the 4-punctured-sphere character variety; vanishes for
// every SL2 triple with tr(Mi) = 2cos(pi thetai) and tr(M1MxM0) = 2cos(pi thetainf).
inline double character_variety_residual(const ThetaTuple& t, const TraceTriple& tt) {
    cx m0 = 2.0 * std::cos(kPi * t.theta0), mx = 2.0 * std::cos(kPi * t.thetax);
    cx m1 = 2.0 * std::cos(kPi * t.theta1), mi = 2.0 * std::cos(kPi * t.thetainf);
    cx X = tt.t0x, Z = tt.t01, Y = tt.t1x;
    cx val = X * Y * Z + X * X + Y * Y + Z * Z - (m0 * mx + m1 * mi) * X -
             (mx * m1 + m0 * mi) * Y - (m0 * m1 + mx * mi) * Z + m0 * m0 + mx * mx + m1 * m1 +
             mi * mi + m0 * mx * m1 * mi - 4.0;
    return std::abs(val);
}

}  // namespace pvi
