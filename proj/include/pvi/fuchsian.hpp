#pragma once

// The 2x2 Fuchsian system attached to a transcendent: JMU residue matrices,
// y-recovery, and the Appendix-1 reduced pairs with their hypergeometric
// fundamental solutions.

#include <cmath>
#include <complex>

#include "pvi/errors.hpp"
#include "pvi/mat2.hpp"
#include "pvi/pvi.hpp"
#include "pvi/specfun.hpp"

namespace pvi {

struct FuchsianSystem {
    Mat2 a0, ax, a1;
    cx x;
    cx k0{1.0};

    Mat2 coeff(cx lambda) const {
        return (1.0 / lambda) * a0 + (1.0 / (lambda - x)) * ax + (1.0 / (lambda - 1.0)) * a1;
    }
};

struct JmuAuxiliary {
    cx kappa2, ztilde, z0, zx, z1, k;
};

inline JmuAuxiliary jmu_auxiliary(const ThetaTuple& t, cx x, cx y, cx yp, cx k) {
    const cx t0 = t.theta0, tx = t.thetax, t1 = t.theta1, ti = t.thetainf;
    JmuAuxiliary a;
    a.k = k;
    a.kappa2 = -(t0 / 2.0 + tx / 2.0 + t1 / 2.0 + ti / 2.0);
    a.ztilde = 0.5 * x * (x - 1.0) / (y * (y - 1.0) * (y - x)) * yp -
               0.5 * (1.0 / (y - x) + t0 / y + tx / (y - x) + t1 / (y - 1.0));
    const cx zt = a.ztilde, kap = a.kappa2;
    a.z0 = y / (x * ti) *
           (y * (y - 1.0) * (y - x) * zt * zt +
            (t1 * (y - x) + x * tx * (y - 1.0) - 2.0 * kap * (y - 1.0) * (y - x)) * zt +
            kap * kap * (y - x - 1.0) - kap * (t1 + x * tx));
    a.z1 = -(y - 1.0) / ((x - 1.0) * ti) *
           (y * (y - 1.0) * (y - x) * zt * zt +
            ((t1 + ti) * (y - x) + x * tx * (y - 1.0) - 2.0 * kap * (y - 1.0) * (y - x)) * zt +
            kap * kap * (y - x) - kap * (t1 + x * tx) - kap * (kap + ti));
    a.zx = (y - x) / (x * (x - 1.0) * ti) *
           (y * (y - 1.0) * (y - x) * zt * zt +
            (t1 * (y - x) + x * (tx + ti) * (y - 1.0) - 2.0 * kap * (y - 1.0) * (y - x)) * zt +
            kap * kap * (y - 1.0) - kap * (t1 + x * tx) - x * kap * (kap + ti));
    return a;
}

// Residue matrices per the JMU formulas; the gauge k is held constant at k0
// (y is invariant under diagonal conjugation, traces are unaffected).
inline FuchsianSystem build_system(const ThetaTuple& t, cx x, cx y, cx yp, cx k0 = 1.0,
                                   double clearance = 1e-12) {
    if (std::abs(t.thetainf) < 1e-12) throw GaugeError("build_system: thetainf must be nonzero");
    if (std::abs(x) < clearance || std::abs(x - 1.0) < clearance)
        throw SingularityError("build_system: x at a critical point");
    if (std::abs(y) < clearance || std::abs(y - 1.0) < clearance || std::abs(y - x) < clearance)
        throw SingularityError("build_system: y on the singular locus {0,1,x}");
    if (std::abs(k0) == 0.0) throw GaugeError("build_system: k0 must be nonzero");
    auto aux = jmu_auxiliary(t, x, y, yp, k0);
    const cx k = k0;
    FuchsianSystem s;
    s.x = x;
    s.k0 = k0;
    s.a0 = {aux.z0 + t.theta0 / 2.0, -k * y / x, aux.z0 * x / (k * y) * (aux.z0 + t.theta0),
            -(aux.z0 + t.theta0 / 2.0)};
    s.a1 = {aux.z1 + t.theta1 / 2.0, k * (y - 1.0) / (x - 1.0),
            -(x - 1.0) * aux.z1 / (k * (y - 1.0)) * (aux.z1 + t.theta1),
            -(aux.z1 + t.theta1 / 2.0)};
    s.ax = {aux.zx + t.thetax / 2.0, -k * (y - x) / (x * (x - 1.0)),
            x * (x - 1.0) * aux.zx / (k * (y - x)) * (aux.zx + t.thetax),
            -(aux.zx + t.thetax / 2.0)};
    return s;
}

// y = x (A0)12 / ( x [(A0)12 + (A1)12] - (A1)12 )
inline cx recover_y(const FuchsianSystem& s) {
    cx num = s.x * s.a0.b;
    cx den = s.x * (s.a0.b + s.a1.b) - s.a1.b;
    double scale = std::max({std::abs(s.a0.b), std::abs(s.a1.b), 1e-300});
    if (std::abs(den) < 1e-13 * scale) throw DegenerateSystem("recover_y: denominator vanishes");
    return num / den;
}

// ---------------------------------------------------------------------------
// Appendix-1 reduced pairs and their fundamental solutions.

enum class ReducedCase { D1, D6, D7, J8, J9, J10 };

struct ReducedPair {
    ReducedCase case_id;
    cx a, b, c, r, s;
    Mat2 b0, b1;
};

inline ReducedPair reduced_b_pair(ReducedCase id, cx a, cx b, cx c, cx r, cx s = 0.0) {
    ReducedPair p{id, a, b, c, r, s, {}, {}};
    switch (id) {
        case ReducedCase::D1: {
            if (std::abs(a - b) < 1e-12) throw CaseConstraintError("D1 requires a != b");
            if (std::abs(r) == 0.0) throw CaseConstraintError("D1 requires r != 0");
            cx b021 = a * b * (a - c) * (c - b) / (r * (a - b) * (a - b));
            p.b0 = {a * (b - c) / (a - b), r, b021, b * (c - a) / (a - b)};
            p.b1 = {a * (c - a) / (a - b), -r, -b021, b * (b - c) / (a - b)};
            break;
        }
        case ReducedCase::D6: {
            if (std::abs(a - b) > 1e-12 || std::abs(a - c) > 1e-12)
                throw CaseConstraintError("D6 requires a = b = c");
            if (std::abs(r) == 0.0) throw CaseConstraintError("D6 requires r != 0");
            p.b0 = {-c - s, r, -s * (c + s) / r, s};
            p.b1 = {s, -r, s * (c + s) / r, -c - s};
            break;
        }
        case ReducedCase::D7: {
            if (std::abs(a) > 1e-12 || std::abs(b) > 1e-12)
                throw CaseConstraintError("D7 requires a = b = 0");
            if (std::abs(r) == 0.0) throw CaseConstraintError("D7 requires r != 0");
            p.b0 = {-c - s, r, -s * (c + s) / r, s};
            p.b1 = cx(-1.0) * p.b0;
            break;
        }
        case ReducedCase::J8: {
            if (std::abs(a) < 1e-12 || std::abs(a - c) < 1e-12)
                throw CaseConstraintError("J8 requires a != 0 and a != c");
            p.b0 = {r, r * (r + c) / (a * (a - c)), a * (c - a), -c - r};
            p.b1 = {-a - r, 1.0 - r * (r + c) / (a * (a - c)), a * (a - c), c - a + r};
            break;
        }
        case ReducedCase::J9: {
            if (std::abs(a) > 1e-12 && std::abs(a - c) > 1e-12)
                throw CaseConstraintError("J9 requires a = 0 or a = c");
            p.b0 = {0.0, r, 0.0, -c};
            p.b1 = {-a, 1.0 - r, 0.0, -a + c};
            break;
        }
        case ReducedCase::J10: {
            if (std::abs(a) > 1e-12 && std::abs(a - c) > 1e-12)
                throw CaseConstraintError("J10 requires a = 0 or a = c");
            p.b0 = {-c, r, 0.0, 0.0};
            p.b1 = {c - a, 1.0 - r, 0.0, -a};
            break;
        }
    }
    return p;
}

namespace detail {

inline void require_nonlog_c(cx c) {
    if (is_integer(c))
        throw LogCaseUnsupported("reduced_solution: integer c hits the logarithmic branch");
}

}  // namespace detail

// Fundamental matrix [[phi1, phi2],[xi1, xi2]] of dPhi/dz = [B0/z + B1/(z-1)] Phi.
inline Mat2 reduced_solution(const ReducedPair& p, cx z, const SeriesConfig& cfg = {}) {
    if (std::abs(z) < 1e-300 || std::abs(z - 1.0) < 1e-300)
        throw DomainError("reduced_solution: z must avoid {0,1}");
    SeriesConfig wide = cfg;
    wide.z_max = 0.95;
    const cx a = p.a, b = p.b, c = p.c, r = p.r, s = p.s;
    switch (p.case_id) {
        case ReducedCase::D1: {
            detail::require_nonlog_c(c);
            cx phi1 = hyp_f(a, b + 1.0, 1.0 + c, z, wide);
            cx dphi1 = hyp_f_dz({a, b + 1.0, 1.0 + c}, z, wide);
            cx f2 = hyp_f(a - c, b + 1.0 - c, 1.0 - c, z, wide);
            cx df2 = hyp_f_dz({a - c, b + 1.0 - c, 1.0 - c}, z, wide);
            cx zc = std::pow(z, -c);
            cx phi2 = zc * f2;
            cx dphi2 = zc * (df2 - c * f2 / z);
            auto xi = [&](cx phi, cx dphi) {
                return (z * (1.0 - z) * dphi - a * (z + (b - c) / (a - b)) * phi) / r;
            };
            return {phi1, phi2, xi(phi1, dphi1), xi(phi2, dphi2)};
        }
        case ReducedCase::D6: {
            cx phi1 = std::pow(1.0 - z, -c), dphi1 = c * std::pow(1.0 - z, -c - 1.0);
            cx phi2 = std::pow(z, -c), dphi2 = -c * std::pow(z, -c - 1.0);
            auto xi = [&](cx phi, cx dphi) {
                return (z * (1.0 - z) * dphi + (c + s - c * z) * phi) / r;
            };
            return {phi1, phi2, xi(phi1, dphi1), xi(phi2, dphi2)};
        }
        case ReducedCase::D7: {
            cx phi1 = 1.0, dphi1 = 0.0;
            cx phi2 = std::pow(z, -c) * std::pow(1.0 - z, c);
            cx dphi2 = phi2 * (-c / z - c / (1.0 - z));
            auto xi = [&](cx phi, cx dphi) {
                return (z * (1.0 - z) * dphi + (c + s) * phi) / r;
            };
            return {phi1, phi2, xi(phi1, dphi1), xi(phi2, dphi2)};
        }
        case ReducedCase::J8: {
            detail::require_nonlog_c(c);
            cx xi1 = hyp_f(a, a + 1.0, 1.0 + c, z, wide);
            cx dxi1 = hyp_f_dz({a, a + 1.0, 1.0 + c}, z, wide);
            cx f2 = hyp_f(a - c, a + 1.0 - c, 1.0 - c, z, wide);
            cx df2 = hyp_f_dz({a - c, a + 1.0 - c, 1.0 - c}, z, wide);
            cx zc = std::pow(z, -c);
            cx xi2 = zc * f2;
            cx dxi2 = zc * (df2 - c * f2 / z);
            auto phi = [&](cx xi, cx dxi) {
                return (z * (z - 1.0) * dxi + (a * z - c - r) * xi) / (a * (a - c));
            };
            return {phi(xi1, dxi1), phi(xi2, dxi2), xi1, xi2};
        }
        case ReducedCase::J9: {
            detail::require_nonlog_c(c);
            bool a_zero = std::abs(a) < 1e-12;
            if (a_zero) {
                cx xi2 = std::pow(z, -c) * std::pow(1.0 - z, c);
                cx phi2 = -r / c * std::pow(1.0 - z, c) * std::pow(z, -c) +
                          1.0 / (c - 1.0) * std::pow(z, 1.0 - c) *
                              hyp_f(1.0 - c, 1.0 - c, 2.0 - c, z, wide);
                return {1.0, phi2, 0.0, xi2};
            }
            cx xi2 = std::pow(z, -c);
            cx phi1 = std::pow(1.0 - z, -c);
            cx phi2 = -r / c * std::pow(z, -c) +
                      1.0 / (c - 1.0) * std::pow(z, 1.0 - c) * std::pow(1.0 - z, -c) *
                          hyp_f(1.0 - c, 1.0 - c, 2.0 - c, z, wide);
            return {phi1, phi2, 0.0, xi2};
        }
        case ReducedCase::J10: {
            detail::require_nonlog_c(c);
            bool a_zero = std::abs(a) < 1e-12;
            if (a_zero) {
                cx phi1 = std::pow(1.0 - z, c) * std::pow(z, -c);
                cx phi2 = r / c - 1.0 / (c + 1.0) * z * std::pow(1.0 - z, c) *
                                      hyp_f(1.0 + c, 1.0 + c, 2.0 + c, z, wide);
                return {phi1, phi2, 0.0, 1.0};
            }
            cx phi1 = std::pow(z, -c);
            cx phi2 = r / c * std::pow(1.0 - z, -c) -
                      1.0 / (c + 1.0) * z * hyp_f(1.0 + c, 1.0 + c, 2.0 + c, z, wide);
            cx xi2 = std::pow(1.0 - z, -c);
            return {phi1, phi2, 0.0, xi2};
        }
    }
    throw CaseConstraintError("reduced_solution: unknown case");
}

}  // namespace pvi
