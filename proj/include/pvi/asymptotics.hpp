#pragma once

// Evaluators for the asymptotic solution families at the critical points
// 0, 1, infinity: power-law (Jimbo), oscillatory, resonant Taylor, the four
// logarithmic types and their images under the Backlund maps, and the
// non-generic ln^2 family at theta = (2p,0,0,1).

#include <cmath>
#include <complex>
#include <string>

#include "pvi/errors.hpp"
#include "pvi/pvi.hpp"

namespace pvi {

enum class Family {
    Jimbo0,
    SineLog0,
    Resonant0,
    LogSquared0,
    LogLinear0,
    LogSquared1,
    LogSquaredInf,
    InvLogSq0,
    InvLogSq1,
    InvLogSqInf,
    LogLinear1,
    LogLinearInf,
    InvLogLin0,
    InvLogLin1,
    InvLogLinInf,
    NonGeneric,
    Taylor0,
};

enum class CriticalPoint { Zero, One, Infinity };

struct AsymptoticParams {
    cx sigma{};   // Jimbo0, SineLog0, Resonant0
    cx a{};       // Jimbo0 amplitude
    cx phi{};     // SineLog0 phase
    cx amp{};     // SineLog0 amplitude A (derived from theta and sigma)
    cx r{};       // log families
    long p = 1;   // NonGeneric
    cx rho0{};    // NonGeneric
    int sign = 1; // two-branch families
};

struct AsymptoticSolution {
    Family family;
    AsymptoticParams params;
    CriticalPoint point;

    AsymptoticSolution(Family f, AsymptoticParams pr) : family(f), params(pr), point(point_of(f)) {}

    static CriticalPoint point_of(Family f) {
        switch (f) {
            case Family::LogSquared1:
            case Family::InvLogSq1:
            case Family::LogLinear1:
            case Family::InvLogLin1:
                return CriticalPoint::One;
            case Family::LogSquaredInf:
            case Family::InvLogSqInf:
            case Family::LogLinearInf:
            case Family::InvLogLinInf:
                return CriticalPoint::Infinity;
            default:
                return CriticalPoint::Zero;
        }
    }
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Jimbo0: return "jimbo0";
        case Family::SineLog0: return "sinelog0";
        case Family::Resonant0: return "resonant0";
        case Family::LogSquared0: return "logsq0";
        case Family::LogLinear0: return "loglin0";
        case Family::LogSquared1: return "logsq1";
        case Family::LogSquaredInf: return "logsqinf";
        case Family::InvLogSq0: return "invlogsq0";
        case Family::InvLogSq1: return "invlogsq1";
        case Family::InvLogSqInf: return "invlogsqinf";
        case Family::LogLinear1: return "loglin1";
        case Family::LogLinearInf: return "loglininf";
        case Family::InvLogLin0: return "invloglin0";
        case Family::InvLogLin1: return "invloglin1";
        case Family::InvLogLinInf: return "invloglininf";
        case Family::NonGeneric: return "nongeneric";
        case Family::Taylor0: return "taylor0";
    }
    return "?";
}

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw FamilyConstraintError(what);
}

inline bool near(cx a, cx b, double tol = 1e-8) { return std::abs(a - b) < tol; }

}  // namespace detail

struct AsymptoticValue {
    cx y, dy;
};

// Value and x-derivative of the printed truncation.
inline AsymptoticValue eval_asymptotic_full(const AsymptoticSolution& sol, const ThetaTuple& t,
                                            cx x) {
    using detail::near;
    using detail::require;
    const auto& pr = sol.params;
    const cx t0 = t.theta0, tx = t.thetax, t1 = t.theta1, ti = t.thetainf;
    switch (sol.family) {
        case Family::Jimbo0: {
            require(pr.sigma.real() > 0.0 && pr.sigma.real() < 1.0,
                    "Jimbo0 requires 0 < Re sigma < 1");
            cx y = pr.a * std::pow(x, 1.0 - pr.sigma);
            return {y, pr.a * (1.0 - pr.sigma) * std::pow(x, -pr.sigma)};
        }
        case Family::SineLog0: {
            require(std::abs(pr.sigma.real()) < 1e-12 && std::abs(pr.sigma) > 0.0,
                    "SineLog0 requires purely imaginary sigma != 0");
            cx s = pr.sigma;
            cx K = (t0 * t0 - tx * tx + s * s) / (2.0 * s * s);
            cx A = pr.amp;
            cx u = cx(0.0, 1.0) * s * std::log(x) + pr.phi;
            cx iA = cx(0.0, 1.0) * A;
            cx y = x * (iA * std::sin(u) + K);
            cx dy = iA * std::sin(u) + K - A * s * std::cos(u);
            return {y, dy};
        }
        case Family::Resonant0: {
            cx s = pr.sigma;
            cx D;
            int inner;
            if (near(s, t0 + tx) || near(s, -(t0 + tx))) {
                D = t0 + tx;
                inner = near(s, t0 + tx) ? 1 : -1;
            } else if (near(s, t0 - tx) || near(s, -(t0 - tx))) {
                D = t0 - tx;
                inner = near(s, t0 - tx) ? 1 : -1;
            } else {
                throw FamilyConstraintError("Resonant0 requires sigma = +-(theta0 +- thetax)");
            }
            require(std::abs(s) > 1e-12, "Resonant0 requires sigma != 0");
            double flip = (inner == 1) ? -1.0 : 1.0;  // -minus for sigma=+D, plus for sigma=-D
            cx y = t0 / D * x + flip * pr.r / D * std::pow(x, 1.0 + s);
            cx dy = t0 / D + flip * pr.r / D * (1.0 + s) * std::pow(x, s);
            return {y, dy};
        }
        case Family::LogSquared0: {
            require(std::abs(t0 * t0 - tx * tx) > 1e-8, "LogSquared0 requires theta0^2 != thetax^2");
            cx D = t0 * t0 - tx * tx;
            cx c = (4.0 * pr.r + 2.0 * t0) / D;
            cx L = std::log(x) + c;
            cx bracket = -D / 4.0 * L * L + t0 * t0 / D;
            return {x * bracket, bracket - D / 2.0 * L};
        }
        case Family::LogLinear0: {
            require(near(t0 * t0, tx * tx), "LogLinear0 requires theta0^2 = thetax^2");
            cx s0 = static_cast<double>(pr.sign) * t0;
            cx L = std::log(x);
            return {x * (pr.r + s0 * L), pr.r + s0 * L + s0};
        }
        case Family::LogSquared1: {
            require(std::abs(t1 * t1 - tx * tx) > 1e-8, "LogSquared1 requires theta1^2 != thetax^2");
            cx D = t1 * t1 - tx * tx;
            cx c = (4.0 * pr.r + 2.0 * t1) / D;
            cx L = std::log(1.0 - x) + c;
            cx bracket = t1 * t1 / D - D / 4.0 * L * L;
            return {1.0 - (1.0 - x) * bracket, bracket - D / 2.0 * L};
        }
        case Family::LogSquaredInf: {
            require(std::abs(t0 * t0 - t1 * t1) > 1e-8,
                    "LogSquaredInf requires theta0^2 != theta1^2");
            cx D = t0 * t0 - t1 * t1;
            cx c = (4.0 * pr.r + 2.0 * t0) / D;
            cx L = std::log(1.0 / x) + c;
            cx y = t0 * t0 / D - D / 4.0 * L * L;
            return {y, D / 2.0 * L / x};
        }
        case Family::InvLogSq0: {
            cx D = t1 * t1 - (ti - 1.0) * (ti - 1.0);
            require(std::abs(D) > 1e-8, "InvLogSq0 requires theta1^2 != (thetainf-1)^2");
            cx e = (8.0 * pr.r + 4.0 * ti - 4.0) / D;
            cx L = std::log(x);
            cx y = 4.0 / (D * L * L) * (1.0 + e / L);
            cx dy = (-8.0 / (D * L * L * L) - 12.0 * e / (D * L * L * L * L)) / x;
            return {y, dy};
        }
        case Family::InvLogSqInf: {
            cx D = (ti - 1.0) * (ti - 1.0) - tx * tx;
            require(std::abs(D) > 1e-8, "InvLogSqInf requires (thetainf-1)^2 != thetax^2");
            cx e = (8.0 * pr.r + 4.0 * (ti - 1.0)) / D;
            cx L = std::log(x);
            cx y = 4.0 * x / (D * L * L) * (1.0 + e / L);
            cx dy = 4.0 / (D * L * L) * (1.0 + e / L) +
                    4.0 / D * (-2.0 / (L * L * L) - 3.0 * e / (L * L * L * L));
            return {y, dy};
        }
        case Family::InvLogSq1: {
            cx D = t1 * t1 - t0 * t0;
            require(std::abs(D) > 1e-8, "InvLogSq1 requires theta1^2 != theta0^2");
            cx e = (8.0 * pr.r + 4.0 * t0) / D;  // = -(8r+4 t0)/(t0^2-t1^2)
            cx L = std::log(x - 1.0);
            cx y = 1.0 + 4.0 / D * (1.0 / (L * L) + e / (L * L * L));
            cx dy = 4.0 / D * (-2.0 / (L * L * L) - 3.0 * e / (L * L * L * L)) / (x - 1.0);
            return {y, dy};
        }
        case Family::LogLinear1: {
            require(near(t1 * t1, tx * tx), "LogLinear1 requires theta1^2 = thetax^2");
            cx s1 = static_cast<double>(pr.sign) * t1;
            cx L = std::log(1.0 - x);
            return {1.0 - (1.0 - x) * (pr.r + s1 * L), pr.r + s1 * L + s1};
        }
        case Family::LogLinearInf: {
            require(near(t0 * t0, t1 * t1), "LogLinearInf requires theta0^2 = theta1^2");
            cx s0 = static_cast<double>(pr.sign) * t0;
            return {pr.r + s0 * std::log(x), s0 / x};
        }
        case Family::InvLogLin0: {
            require(near((ti - 1.0) * (ti - 1.0), t1 * t1),
                    "InvLogLin0 requires (thetainf-1)^2 = theta1^2");
            cx w = pr.r + static_cast<double>(pr.sign) * (ti - 1.0) * std::log(x);
            return {1.0 / w, -static_cast<double>(pr.sign) * (ti - 1.0) / (x * w * w)};
        }
        case Family::InvLogLinInf: {
            require(near((ti - 1.0) * (ti - 1.0), tx * tx),
                    "InvLogLinInf requires (thetainf-1)^2 = thetax^2");
            double s = pr.sign;
            cx w = (ti - 1.0) * std::log(x);
            cx y = s * x / w - x * pr.r / (w * w);
            cx dy = s * (1.0 / w - (ti - 1.0) / (w * w)) -
                    pr.r * (1.0 / (w * w) - 2.0 * (ti - 1.0) / (w * w * w));
            return {y, dy};
        }
        case Family::InvLogLin1: {
            require(near((ti - 1.0) * (ti - 1.0), t0 * t0),
                    "InvLogLin1 requires (thetainf-1)^2 = theta0^2");
            double s = pr.sign;
            cx w = t0 * std::log(x - 1.0);
            cx y = 1.0 + s / w - pr.r / (w * w);
            cx dy = (-s / (w * w) + 2.0 * pr.r / (w * w * w)) * t0 / (x - 1.0);
            return {y, dy};
        }
        case Family::NonGeneric: {
            require(pr.p != 0, "NonGeneric requires p != 0");
            double p = static_cast<double>(pr.p);
            require(near(t0, 2.0 * p) && near(tx, 0.0) && near(t1, 0.0) && near(ti, 1.0),
                    "NonGeneric requires theta = (2p, 0, 0, 1)");
            cx L = std::log(x) + pr.rho0;
            cx bracket = 1.0 - p * p * L * L;
            return {x * bracket, bracket - 2.0 * p * p * L};
        }
        case Family::Taylor0: {
            cx D = t0 + static_cast<double>(pr.sign) * tx;
            require(std::abs(D) > 1e-12, "Taylor0 requires theta0 +- thetax != 0");
            return {t0 / D * x, t0 / D};
        }
    }
    throw FamilyConstraintError("eval_asymptotic: unknown family");
}

inline cx eval_asymptotic(const AsymptoticSolution& sol, const ThetaTuple& t, cx x) {
    return eval_asymptotic_full(sol, t, x).y;
}

// Amplitude A of the oscillatory family.
inline cx sinelog_amplitude(const ThetaTuple& t, cx sigma) {
    cx K = (t.theta0 * t.theta0 - t.thetax * t.thetax + sigma * sigma) / (2.0 * sigma * sigma);
    return std::sqrt(t.theta0 * t.theta0 / (sigma * sigma) - K * K);
}

}  // namespace pvi
