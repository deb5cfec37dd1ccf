#pragma once

// Closed-form monodromy representations for the logarithmic families, the
// inverse connection problem (r from traces), and the Riemann-Hilbert
// correspondence classifier.

#include <cmath>
#include <complex>
#include <vector>

#include "pvi/errors.hpp"
#include "pvi/mat2.hpp"
#include "pvi/pvi.hpp"
#include "pvi/rep.hpp"
#include "pvi/specfun.hpp"

namespace pvi {

struct BranchSign {
    int epsilon = 1;  // +1: basis referred to a basepoint in the upper half plane
    BranchSign() = default;
    BranchSign(int e) : epsilon(e) {
        if (e != 1 && e != -1) throw ParamError("BranchSign: epsilon must be +-1");
    }
};

namespace detail {

inline void require_noninteger(cx v, const char* what, double tol = 1e-8) {
    if (is_integer(v, tol)) throw ParamError(std::string("integer parameter not allowed: ") + what);
}

inline void require_not_even_integer(cx v, const char* what, double tol = 1e-8) {
    cx half = v / 2.0;
    if (is_integer(half, tol))
        throw ParamError(std::string("parameter in 2Z hits a Gamma pole: ") + what);
}

// C01 of Prop. 4 (OUT-side 0<->1 connection; also used by Prop. 5).
inline Mat2 prop4_c01(cx t1, cx ti) {
    return {gamma_fn(-t1) / (gamma_fn(1.0 - ti / 2.0 - t1 / 2.0) * gamma_fn(ti / 2.0 - t1 / 2.0)),
            -gamma_fn(1.0 + t1 / 2.0 - ti / 2.0) * gamma_fn(ti / 2.0 + t1 / 2.0) /
                gamma_fn(1.0 + t1),
            gamma_fn(t1) / (gamma_fn(1.0 + t1 / 2.0 - ti / 2.0) * gamma_fn(ti / 2.0 + t1 / 2.0)),
            0.0};
}

// omega of Prop. 4. The paper prints a minus before the second digamma; the
// series expansion of the Norlund g solution fixes the sign to plus, and only
// the plus version reproduces the lambda-plane monodromy.
inline cx prop4_omega(cx t1, cx ti) {
    return digamma(ti / 2.0 + t1 / 2.0) + digamma(t1 / 2.0 - ti / 2.0 + 1.0) + 2.0 * kEulerGamma;
}

inline Mat2 m1_out_block(cx t1, cx ti) {
    Mat2 C01 = prop4_c01(t1, ti);
    Mat2 B{1.0, prop4_omega(t1, ti), 0.0, 1.0};
    return B * C01.inverse() * exp_i_pi_sigma3(t1) * C01 * B.inverse();
}

}  // namespace detail

struct GenericLogConnection {
    cx q, omega, r1;
    BranchSign epsilon;
    Mat2 E, c01_star, c0inf_star, c01, B, D, c_out;
};

namespace detail {

// Monodromy triple of Prop. 4 as a function of the auxiliary parameter q
// (used both by the forward map and by the trace-fitting inverse).
inline MonodromyRep prop4_rep_from_q(const ThetaTuple& t, cx q, int eps,
                                     GenericLogConnection* conn = nullptr, cx r1 = 1.0) {
    const cx t0 = t.theta0, tx = t.thetax, t1 = t.theta1, ti = t.thetainf;
    const cx I(0.0, 1.0);
    Mat2 E{4.0 * q / (tx * tx - t0 * t0), 4.0 / (t0 * t0 - tx * tx),
           4.0 / (tx * tx - t0 * t0), 0.0};
    const cx eps_phase = std::exp(I * kPi * static_cast<double>(eps) * (t0 / 2.0 + tx / 2.0));
    const cx eps_phase2 = std::exp(I * kPi * static_cast<double>(eps) * (tx / 2.0 - t0 / 2.0));
    Mat2 C0is{-eps_phase * gamma_fn(1.0 + t0) /
                  (gamma_fn(t0 / 2.0 + tx / 2.0) * gamma_fn(t0 / 2.0 - tx / 2.0)),
              -eps_phase2 * gamma_fn(1.0 - t0) /
                  (gamma_fn(-t0 / 2.0 - tx / 2.0) * gamma_fn(tx / 2.0 - t0 / 2.0)),
              eps_phase * kPi * std::sin(kPi * t0) * gamma_fn(1.0 + t0) /
                  (std::sin(kPi * (t0 / 2.0 - tx / 2.0)) * std::sin(kPi * (t0 / 2.0 + tx / 2.0)) *
                   gamma_fn(t0 / 2.0 + tx / 2.0) * gamma_fn(t0 / 2.0 - tx / 2.0)),
              0.0};
    Mat2 C01s{gamma_fn(-tx) * gamma_fn(1.0 + t0) /
                  ((t0 / 2.0 - tx / 2.0) * gamma_fn(t0 / 2.0 - tx / 2.0) *
                   gamma_fn(t0 / 2.0 - tx / 2.0)),
              gamma_fn(-tx) * gamma_fn(1.0 - t0) /
                  ((-t0 / 2.0 - tx / 2.0) * gamma_fn(-t0 / 2.0 - tx / 2.0) *
                   gamma_fn(-t0 / 2.0 - tx / 2.0)),
              gamma_fn(tx) * gamma_fn(1.0 + t0) /
                  ((t0 / 2.0 + tx / 2.0) * gamma_fn(t0 / 2.0 + tx / 2.0) *
                   gamma_fn(t0 / 2.0 + tx / 2.0)),
              gamma_fn(tx) * gamma_fn(1.0 - t0) /
                  ((-t0 / 2.0 + tx / 2.0) * gamma_fn(-t0 / 2.0 + tx / 2.0) *
                   gamma_fn(-t0 / 2.0 + tx / 2.0))};
    Mat2 EC = E * C0is;
    Mat2 ECi = EC.inverse();
    MonodromyRep rep;
    rep.m0 = EC * exp_i_pi_sigma3(t0) * ECi;
    rep.mx = EC * C01s.inverse() * exp_i_pi_sigma3(tx) * C01s * ECi;
    rep.m1 = m1_out_block(t1, ti);
    if (conn) {
        conn->q = q;
        conn->omega = prop4_omega(t1, ti);
        conn->r1 = r1;
        conn->epsilon = BranchSign(eps);
        conn->E = E;
        conn->c01_star = C01s;
        conn->c0inf_star = C0is;
        conn->c01 = prop4_c01(t1, ti);
        conn->B = Mat2{1.0, conn->omega, 0.0, 1.0};
        conn->D = Mat2{1.0, 0.0, 0.0, (1.0 - ti) / r1};
        Mat2 C0i{1.0,
                 -kPi * std::exp(-I * kPi / 2.0 * (t1 + ti)) / std::sin(kPi / 2.0 * (t1 + ti)),
                 1.0,
                 -kPi * std::exp(-I * kPi / 2.0 * (t1 - ti)) / std::sin(kPi / 2.0 * (t1 - ti))};
        conn->c_out = conn->B * C0i.inverse() * conn->D.inverse();
    }
    return rep;
}

// Digamma bracket entering q(r).
inline cx prop4_psi_bracket(cx t0, cx tx) {
    return digamma(-t0 / 2.0 - tx / 2.0) + digamma(tx / 2.0 - t0 / 2.0 + 1.0) +
           2.0 * kEulerGamma;
}

inline void prop4_guards(const ThetaTuple& t) {
    require_noninteger(t.theta0, "theta0");
    require_noninteger(t.thetax, "thetax");
    require_noninteger(t.theta1, "theta1");
    require_noninteger(t.thetainf, "thetainf");
    require_not_even_integer(t.theta0 + t.thetax, "theta0 + thetax");
    require_not_even_integer(t.theta0 - t.thetax, "theta0 - thetax");
    require_not_even_integer(t.thetainf + t.theta1, "thetainf + theta1");
    require_not_even_integer(t.thetainf - t.theta1, "thetainf - theta1");
}

}  // namespace detail

// q(r) of Prop. 4. The paper prints -4 i pi epsilon; the large-mu expansion of
// the IN-system solutions gives -i pi epsilon, which is what the lambda-plane
// cross-check confirms.
inline cx generic_log_q(const ThetaTuple& t, cx r, BranchSign eps = {}) {
    const cx t0 = t.theta0, tx = t.thetax;
    return -cx(0.0, kPi * eps.epsilon) +
           (4.0 * r + 2.0 * (t0 - tx)) / (t0 * t0 - tx * tx) - detail::prop4_psi_bracket(t0, tx);
}

inline cx generic_log_r_from_q(const ThetaTuple& t, cx q, BranchSign eps = {}) {
    const cx t0 = t.theta0, tx = t.thetax;
    cx lin = q + cx(0.0, kPi * eps.epsilon) + detail::prop4_psi_bracket(t0, tx);
    return (lin * (t0 * t0 - tx * tx) - 2.0 * (t0 - tx)) / 4.0;
}

// Proposition 4: monodromy of the ln^2 family at x -> 0.
inline std::pair<MonodromyRep, GenericLogConnection> monodromy_generic_log(const ThetaTuple& t,
                                                                           cx r,
                                                                           BranchSign eps = {},
                                                                           cx r1 = 1.0) {
    detail::prop4_guards(t);
    if (std::abs(r1) == 0.0) throw ParamError("monodromy_generic_log: r1 must be nonzero");
    GenericLogConnection conn;
    MonodromyRep rep =
        detail::prop4_rep_from_q(t, generic_log_q(t, r, eps), eps.epsilon, &conn, r1);
    return {rep, conn};
}

// Proposition 5: monodromy of the x(r +- theta0 ln x) family. sign selects the
// branch; the family constraint is thetax = sign * theta0.
inline MonodromyRep monodromy_loglinear(const ThetaTuple& t, cx r, int sign) {
    if (sign != 1 && sign != -1) throw ParamError("monodromy_loglinear: sign must be +-1");
    const cx s0 = static_cast<double>(sign) * t.theta0;
    if (std::abs(t.thetax - s0) > 1e-8)
        throw FamilyConstraintError("monodromy_loglinear: requires thetax = sign*theta0");
    detail::require_noninteger(t.theta0, "theta0");
    detail::require_noninteger(t.theta1, "theta1");
    detail::require_noninteger(t.thetainf, "thetainf");
    detail::require_not_even_integer(t.thetainf + t.theta1, "thetainf + theta1");
    detail::require_not_even_integer(t.thetainf - t.theta1, "thetainf - theta1");
    const cx I(0.0, 1.0);
    // kappa = r/theta0 - psi(theta0+1) - gammaE - i pi; the (1,2) entry carries
    // an extra e^{+i pi theta0/2} relative to the printed matrix (lambda-plane
    // verified); only the ratio E12/E22 enters the monodromy.
    cx kap = r / s0 - digamma(s0 + 1.0) - kEulerGamma - I * kPi;
    Mat2 E{std::exp(-I * kPi / 2.0 * s0), kap * std::exp(I * kPi / 2.0 * s0), 0.0,
           std::exp(I * kPi / 2.0 * s0)};
    Mat2 U{1.0, -gamma_fn(s0 + 1.0) * gamma_fn(-s0), 0.0, 1.0};
    MonodromyRep rep;
    rep.m0 = E * exp_i_pi_sigma3(-s0) * E.inverse();
    rep.mx = E * U.inverse() * exp_i_pi_sigma3(s0) * U * E.inverse();
    rep.m1 = detail::m1_out_block(t.theta1, t.thetainf);
    return rep;
}

// Eq. numerostar: r as a function of tr(M0 M1) for the log-linear family.
inline cx r_from_traces_loglinear(const ThetaTuple& t, cx t01, int sign = 1) {
    if (sign != 1 && sign != -1) throw ParamError("r_from_traces_loglinear: sign must be +-1");
    const cx s0 = static_cast<double>(sign) * t.theta0;
    const cx t1 = t.theta1, ti = t.thetainf;
    cx sin0 = std::sin(kPi * s0);
    cx sinp = std::sin(kPi / 2.0 * (ti + t1));
    cx sinm = std::sin(kPi / 2.0 * (ti - t1));
    cx sin1 = std::sin(kPi * t1);
    if (std::abs(sin0) < 1e-12 || std::abs(sinp) < 1e-12 || std::abs(sinm) < 1e-12 ||
        std::abs(sin1) < 1e-12)
        throw SingularDenominator("r_from_traces_loglinear: printed denominator vanishes");
    cx omega = detail::prop4_omega(t1, ti);
    cx den = sin0 * sinp * sinm;
    cx val = -kPi / 4.0 * t01 / den + (digamma(s0 + 1.0) + cx(0.0, kPi) + kEulerGamma) +
             kPi / 2.0 * std::cos(kPi * (s0 + t1)) / den -
             omega / 2.0 * (std::cos(kPi * (s0 + t1)) - std::cos(kPi * (s0 - t1))) / (sin0 * sin1);
    return val * s0;
}

// Proposition 6: the non-generic rep at theta = (2p, 0, 0, 1); independent of
// r and of the value of p.
inline MonodromyRep monodromy_nongeneric(long p) {
    if (p == 0) throw ParamError("monodromy_nongeneric: p must be a nonzero integer");
    const double L2 = std::log(2.0);
    const cx I(0.0, 1.0);
    MonodromyRep rep;
    rep.m0 = Mat2::identity();
    rep.mx = {1.0, 2.0 * kPi * I, 0.0, 1.0};
    rep.m1 = {1.0 - 8.0 * I / kPi * L2, -32.0 * I / kPi * L2 * L2, 2.0 * I / kPi,
              1.0 + 8.0 * I / kPi * L2};
    return rep;
}

// All r consistent with (t01, t1x), by fitting the two trace quadratics in q
// from forward evaluations (the paper omits the coefficients).
inline std::vector<cx> r_from_traces_generic(const ThetaTuple& t, cx t01, cx t1x,
                                             BranchSign eps = {}) {
    detail::prop4_guards(t);
    auto eval = [&](cx q) {
        MonodromyRep rep = detail::prop4_rep_from_q(t, q, eps.epsilon);
        return trace_triple(rep);
    };
    // exact quadratic reconstruction from q = 0, +-1, validated at q = 2
    TraceTriple f0 = eval(0.0), fp = eval(1.0), fm = eval(-1.0), f2 = eval(2.0);
    auto fit = [&](cx v0, cx vp, cx vm, cx v2, cx* coef) {
        coef[2] = v0;
        coef[0] = (vp + vm - 2.0 * v0) / 2.0;
        coef[1] = (vp - vm) / 2.0;
        cx pred2 = 4.0 * coef[0] + 2.0 * coef[1] + coef[2];
        double scale = std::max({std::abs(v0), std::abs(vp), std::abs(v2), 1.0});
        if (std::abs(pred2 - v2) > 1e-8 * scale)
            throw IllConditioned("r_from_traces_generic: quadratic fit validation failed");
    };
    cx cz[3], cy[3];
    fit(f0.t01, fp.t01, fm.t01, f2.t01, cz);
    fit(f0.t1x, fp.t1x, fm.t1x, f2.t1x, cy);

    // roots of cz[0] q^2 + cz[1] q + (cz[2] - t01) = 0
    cx A = cz[0], B = cz[1], C = cz[2] - t01;
    if (std::abs(A) < 1e-14) throw IllConditioned("r_from_traces_generic: degenerate quadratic");
    cx disc = std::sqrt(B * B - 4.0 * A * C);
    std::vector<cx> roots{(-B + disc) / (2.0 * A), (-B - disc) / (2.0 * A)};
    std::vector<cx> out;
    double scale = std::max(std::abs(t1x), 1.0);
    for (cx q : roots) {
        cx pred = cy[0] * q * q + cy[1] * q + cy[2];
        if (std::abs(pred - t1x) < 1e-6 * scale) out.push_back(generic_log_r_from_q(t, q, eps));
    }
    if (out.empty())
        throw NoSolution("r_from_traces_generic: trace pair inconsistent with the family");
    return out;
}

// ---------------------------------------------------------------------------
// Proposition 1 classifier.

enum class RFlag { Zero, UpperNilpotent, LowerNilpotent, JordanUnit };

struct RFlags {
    RFlag r0 = RFlag::Zero, rx = RFlag::Zero, r1f = RFlag::Zero, rinf = RFlag::Zero;
};

enum class RhClass { OneToOne, Degenerate };

namespace detail {

inline void check_flag_consistency(cx theta, RFlag f, bool finite_point, const char* name) {
    const double tol = 1e-8;
    bool integer = is_integer(theta, tol);
    bool zero = std::abs(theta) < tol;
    if (!integer && f != RFlag::Zero)
        throw InconsistentFlags(std::string("R must vanish for non-integer theta: ") + name);
    if (zero && finite_point && f != RFlag::JordanUnit)
        throw InconsistentFlags(std::string("theta = 0 at a finite point requires the Jordan unit: ") +
                                name);
    if (integer && !zero) {
        if (theta.real() > 0.0 && f == RFlag::LowerNilpotent)
            throw InconsistentFlags(std::string("positive integer theta takes an upper R: ") + name);
        if (theta.real() < 0.0 && f == RFlag::UpperNilpotent)
            throw InconsistentFlags(std::string("negative integer theta takes a lower R: ") + name);
        if (f == RFlag::JordanUnit)
            throw InconsistentFlags(std::string("Jordan unit is reserved for theta = 0: ") + name);
    }
}

}  // namespace detail

// Degenerate iff some theta_nu in Z\{0} with R_nu = 0.
inline RhClass rh_correspondence_class(const ThetaTuple& t, const RFlags& flags) {
    if (std::abs(t.thetainf) < 1e-8)
        throw InconsistentFlags("rh_correspondence_class: thetainf must be nonzero");
    detail::check_flag_consistency(t.theta0, flags.r0, true, "R0");
    detail::check_flag_consistency(t.thetax, flags.rx, true, "Rx");
    detail::check_flag_consistency(t.theta1, flags.r1f, true, "R1");
    detail::check_flag_consistency(t.thetainf, flags.rinf, false, "Rinf");
    const double tol = 1e-8;
    struct Slot {
        cx theta;
        RFlag f;
    } slots[4] = {{t.theta0, flags.r0},
                  {t.thetax, flags.rx},
                  {t.theta1, flags.r1f},
                  {t.thetainf, flags.rinf}};
    for (const auto& s : slots) {
        bool nonzero_integer = detail::is_integer(s.theta, tol) && std::abs(s.theta) >= tol;
        if (nonzero_integer && s.f == RFlag::Zero) return RhClass::Degenerate;
    }
    return RhClass::OneToOne;
}

}  // namespace pvi
