#pragma once

// Complex special functions: log-Gamma (Lanczos), digamma, signed Pochhammer,
// Gauss hypergeometric series, and the Norlund logarithmic companions g, g1,
// g0, G with explicit branch bookkeeping for log(-z).

#include <cmath>
#include <complex>
#include <utility>

#include "pvi/errors.hpp"
#include "pvi/mat2.hpp"

namespace pvi {

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

struct SeriesConfig {
    double tol = 1e-14;     // relative truncation target
    int max_terms = 10000;  // hard cap; ConvergenceError beyond
    double z_max = 0.75;    // series radius accepted by hyp_f
};

namespace detail {

inline bool is_nonpositive_integer(cx z, double tol = 1e-12) {
    return std::abs(z.imag()) < tol && z.real() < 0.5 &&
           std::abs(z.real() - std::round(z.real())) < tol;
}

inline bool is_integer(cx z, double tol = 1e-12) {
    return std::abs(z.imag()) < tol && std::abs(z.real() - std::round(z.real())) < tol;
}

// log(sin(pi z)) without overflow for large |Im z|; branch is whatever the
// factored exponential produces (callers only need exp of the result).
inline cx log_sin_pi(cx z) {
    const cx ipz = cx(0.0, kPi) * z;
    if (z.imag() <= 0.0) {
        // |e^{i pi z}| >= 1
        return ipz + std::log(1.0 - std::exp(-2.0 * ipz)) - cx(std::log(2.0), kPi / 2.0);
    }
    return -ipz + std::log(1.0 - std::exp(2.0 * ipz)) - cx(std::log(2.0), -kPi / 2.0);
}

// Lanczos g=7, n=9 coefficients (Godfrey / GSL standard set).
inline constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

inline cx log_gamma_lanczos_half_plane(cx z) {
    // valid for Re z >= 0.5; relative accuracy ~1e-14
    z -= 1.0;
    cx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    cx t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace detail

// Principal-branch log-Gamma; exp(log_gamma(z)) = Gamma(z).
inline cx log_gamma(cx z) {
    if (detail::is_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return detail::log_gamma_lanczos_half_plane(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - detail::log_sin_pi(z) - detail::log_gamma_lanczos_half_plane(1.0 - z);
}

inline cx gamma_fn(cx z) { return std::exp(log_gamma(z)); }

// Digamma via reflection + recurrence + Stirling tail.
inline cx digamma(cx z) {
    if (detail::is_nonpositive_integer(z))
        throw PoleError("digamma: pole at nonpositive integer");
    cx result = 0.0;
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        result -= kPi / std::tan(kPi * z);
        z = 1.0 - z;
    }
    while (z.real() < 10.0) {
        result -= 1.0 / z;
        z += 1.0;
    }
    // Stirling: psi(z) ~ ln z - 1/(2z) - sum B_{2k}/(2k z^{2k})
    const cx inv = 1.0 / z, inv2 = inv * inv;
    static constexpr double kB[7] = {1.0 / 12.0,   -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
                                     1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
    cx tail = 0.0, p = inv2;
    for (double bk : kB) {
        tail += bk * p;
        p *= inv2;
    }
    return result + std::log(z) - 0.5 * inv - tail;
}

// (a)_n for signed n: rising product for n >= 0, reciprocal product for n < 0.
inline cx pochhammer(cx a, long n) {
    if (n >= 0) {
        cx p = 1.0;
        for (long k = 0; k < n; ++k) p *= a + static_cast<double>(k);
        return p;
    }
    cx q = 1.0;
    for (long j = 1; j <= -n; ++j) {
        cx f = a - static_cast<double>(j);
        if (std::abs(f) == 0.0)
            throw DivisionByZero("pochhammer: vanishing factor in negative-index product");
        q *= f;
    }
    return 1.0 / q;
}

struct HypergeometricParams {
    cx alpha0, beta0, gamma0;
};

// Gauss series F(a,b,c;z), |z| <= cfg.z_max.
inline cx hyp_f(const HypergeometricParams& p, cx z, const SeriesConfig& cfg = {}) {
    if (detail::is_nonpositive_integer(p.gamma0))
        throw ParamError("hyp_f: gamma0 is a nonpositive integer");
    if (std::abs(z) > cfg.z_max)
        throw DomainError("hyp_f: |z| exceeds configured series radius");
    cx sum = 0.0, term = 1.0;
    int small_streak = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        sum += term;
        term *= (p.alpha0 + static_cast<double>(n)) * (p.beta0 + static_cast<double>(n)) /
                ((p.gamma0 + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
        if (std::abs(term) < cfg.tol * std::abs(sum)) {
            if (++small_streak >= 3) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("hyp_f: series did not converge within term cap");
}

inline cx hyp_f(cx a, cx b, cx c, cx z, const SeriesConfig& cfg = {}) {
    return hyp_f({a, b, c}, z, cfg);
}

// d/dz F(a,b,c;z) = (a b / c) F(a+1,b+1,c+1;z)
inline cx hyp_f_dz(const HypergeometricParams& p, cx z, const SeriesConfig& cfg = {}) {
    return p.alpha0 * p.beta0 / p.gamma0 *
           hyp_f({p.alpha0 + 1.0, p.beta0 + 1.0, p.gamma0 + 1.0}, z, cfg);
}

namespace detail {

// Which psi-slots of the Norlund bracket are in "reflected" form psi(1-x-n).
enum class NorlundKind { G_plain, G1, G0, BigG };

inline int require_positive_integer_c(cx c) {
    if (!is_integer(c) || c.real() < 0.5)
        throw ParamError("norlund: third parameter must be a positive integer");
    return static_cast<int>(std::lround(c.real()));
}

// Finite part sum_{n=1}^{c-1} (-1)^{n-1} (n-1)! (a)_{-n}(b)_{-n}/(c)_{-n} z^{-n}
inline cx norlund_finite_sum(cx a, cx b, int c, cx z) {
    cx s = 0.0;
    double fact = 1.0;  // (n-1)!
    for (int n = 1; n <= c - 1; ++n) {
        if (n > 1) fact *= static_cast<double>(n - 1);
        cx num = pochhammer(a, -n) * pochhammer(b, -n) / pochhammer(cx(c), -n);
        s += ((n % 2 == 1) ? 1.0 : -1.0) * fact * num * std::pow(z, -n);
    }
    return s;
}

struct BracketSlot {
    // psi(x0 + dir*n) tracked incrementally; handles the reflected slots too.
    cx x0;
    int dir;  // +1: psi(x0+n), -1: psi(x0-n) with x0 = 1-a
    cx value;
};

// Core evaluator for the four Norlund log-series. log_z is the caller-fixed
// value of ln z (g, G) or ln(-z) (g1, g0).
inline cx norlund_series(NorlundKind kind, cx a, cx b, cx c_, cx z, cx log_z,
                         const SeriesConfig& cfg) {
    const int c = require_positive_integer_c(c_);
    const bool a_reflected = (kind == NorlundKind::G1 || kind == NorlundKind::G0);
    const bool b_reflected = (kind == NorlundKind::G0);

    const bool a_cancel = (a_reflected || kind == NorlundKind::BigG) && is_nonpositive_integer(a);
    const bool b_cancel = (b_reflected || kind == NorlundKind::BigG) && is_nonpositive_integer(b);
    if (a_cancel && b_cancel)
        throw ParamError("norlund: double Pochhammer/digamma cancellation not supported");
    // Non-cancelled poles are reported, not regularized.
    if (kind != NorlundKind::BigG) {
        if (!a_reflected && is_nonpositive_integer(a))
            throw ParamError("norlund: digamma pole at a not cancelled by Pochhammer zero");
        if (!b_reflected && is_nonpositive_integer(b))
            throw ParamError("norlund: digamma pole at b not cancelled by Pochhammer zero");
    }
    if (a_reflected && !a_cancel && is_integer(a) && a.real() > 0.5)
        throw ParamError("norlund: digamma pole at 1-a-n not cancelled");
    if (b_reflected && !b_cancel && is_integer(b) && b.real() > 0.5)
        throw ParamError("norlund: digamma pole at 1-b-n not cancelled");

    const int m = a_cancel ? static_cast<int>(-std::lround(a.real()))
                           : (b_cancel ? static_cast<int>(-std::lround(b.real())) : -1);

    cx sum = norlund_finite_sum(a, b, c, z);

    // BigG uses psi-differences; fold psi(a)... constants into the bracket start.
    cx psi_a, psi_b;
    if (kind == NorlundKind::BigG) {
        psi_a = 0.0;  // bracket tracks psi(a+n)-psi(a) = sum_{k<n} 1/(a+k)
        psi_b = 0.0;
    } else {
        // For cancelled reflected slots, psi(1-a) = psi(1+m) is still finite and
        // needed for the terms n <= m.
        psi_a = a_reflected ? digamma(1.0 - a) : digamma(a);
        psi_b = b_reflected ? digamma(1.0 - b) : digamma(b);
    }
    cx psi_c = (kind == NorlundKind::BigG) ? cx(0.0) : digamma(cx(c));
    cx psi_n = (kind == NorlundKind::BigG) ? cx(0.0) : cx(-kEulerGamma);  // psi(1)

    cx coeff = 1.0;  // (a)_n (b)_n / ((c)_n n!) z^n
    cx sum_inv_a = 0.0, sum_inv_b = 0.0, sum_inv_c = 0.0, harmonic = 0.0;  // BigG increments
    cx cancel_coeff = 0.0;  // for n > m when cancellation active
    int small_streak = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        cx term;
        if (m >= 0 && n >= m + 1) {
            if (n == m + 1) {
                // limit of (a)_n psi(1-a-n) as a -> -m:  (-1)^m m! (n-1-m)! * rest
                double sgn = (m % 2 == 0) ? 1.0 : -1.0;
                double mfact = 1.0;
                for (int k = 2; k <= m; ++k) mfact *= k;
                cx other = a_cancel ? pochhammer(b, n) : pochhammer(a, n);
                cx cn = pochhammer(cx(c), n);
                double nfact = 1.0;
                for (int k = 2; k <= n; ++k) nfact *= k;
                cancel_coeff = sgn * mfact * other / (cn * nfact) * std::pow(z, n);
            } else {
                // ratio update: extra (n-1-m) from the factorial, usual b/c/n factors
                cx other_f = a_cancel ? (b + static_cast<double>(n - 1)) : (a + static_cast<double>(n - 1));
                cancel_coeff *= static_cast<double>(n - 1 - m) * other_f /
                                ((cx(c) + static_cast<double>(n - 1)) * static_cast<double>(n)) * z;
            }
            term = cancel_coeff;
        } else {
            cx bracket;
            if (kind == NorlundKind::BigG) {
                bracket = sum_inv_a + sum_inv_b - sum_inv_c - harmonic + log_z;
            } else {
                bracket = psi_a + psi_b - psi_c - psi_n + log_z;
            }
            term = coeff * bracket;
        }
        sum += term;

        // advance all trackers to n+1
        cx an = a + static_cast<double>(n), bn = b + static_cast<double>(n);
        coeff *= an * bn / ((cx(c) + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
        if (kind == NorlundKind::BigG) {
            sum_inv_a += 1.0 / an;
            sum_inv_b += 1.0 / bn;
            sum_inv_c += 1.0 / (cx(c) + static_cast<double>(n));
            harmonic += 1.0 / static_cast<double>(n + 1);
        } else {
            psi_a += a_reflected ? 1.0 / (a + static_cast<double>(n)) : 1.0 / an;
            psi_b += b_reflected ? 1.0 / (b + static_cast<double>(n)) : 1.0 / bn;
            psi_c += 1.0 / (cx(c) + static_cast<double>(n));
            psi_n += 1.0 / static_cast<double>(n + 1);
        }

        double scale = std::max(std::abs(sum), 1e-30);
        if (n > 1 && std::abs(term) < cfg.tol * scale) {
            if (++small_streak >= 3) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("norlund: series did not converge within term cap");
}

}  // namespace detail

// g(a,b,c;z): defined for |arg z| < pi, principal log.
inline cx norlund_g(cx a, cx b, cx c, cx z, const SeriesConfig& cfg = {}) {
    return detail::norlund_series(detail::NorlundKind::G_plain, a, b, c, z, std::log(z), cfg);
}

// g1(a,b,c;z): log(-z) branch fixed by eps: log(-z) = Log z + i pi eps.
inline cx norlund_g1(cx a, cx b, cx c, cx z, int eps, const SeriesConfig& cfg = {}) {
    cx logmz = std::log(z) + cx(0.0, kPi * eps);
    return detail::norlund_series(detail::NorlundKind::G1, a, b, c, z, logmz, cfg);
}

// g0(a,b,c;z): same branch convention as g1.
inline cx norlund_g0(cx a, cx b, cx c, cx z, int eps, const SeriesConfig& cfg = {}) {
    cx logmz = std::log(z) + cx(0.0, kPi * eps);
    return detail::norlund_series(detail::NorlundKind::G0, a, b, c, z, logmz, cfg);
}

// G(a,b,c;z): principal log.
inline cx norlund_big_g(cx a, cx b, cx c, cx z, const SeriesConfig& cfg = {}) {
    return detail::norlund_series(detail::NorlundKind::BigG, a, b, c, z, std::log(z), cfg);
}

// d/dz g(a,b,c;z), term-wise.
inline cx norlund_g_dz(cx a, cx b, cx c_, cx z, const SeriesConfig& cfg = {}) {
    const int c = detail::require_positive_integer_c(c_);
    cx s = 0.0;
    double fact = 1.0;
    for (int n = 1; n <= c - 1; ++n) {
        if (n > 1) fact *= static_cast<double>(n - 1);
        cx num = pochhammer(a, -n) * pochhammer(b, -n) / pochhammer(cx(c), -n);
        s += ((n % 2 == 1) ? 1.0 : -1.0) * fact * num * (-static_cast<double>(n)) *
             std::pow(z, -n - 1);
    }
    cx L = std::log(z);
    cx psi_a = digamma(a), psi_b = digamma(b), psi_c = digamma(cx(c)), psi_n = cx(-kEulerGamma);
    cx coeff = 1.0;
    int small_streak = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        cx bracket = psi_a + psi_b - psi_c - psi_n + L;
        cx term = coeff / z;  // from d(log z)/dz * z^n
        if (n >= 1) term += coeff * bracket * static_cast<double>(n) / z;
        s += term;
        psi_a += 1.0 / (a + static_cast<double>(n));
        psi_b += 1.0 / (b + static_cast<double>(n));
        psi_c += 1.0 / (cx(c) + static_cast<double>(n));
        psi_n += 1.0 / static_cast<double>(n + 1);
        coeff *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
                 ((cx(c) + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
        double scale = std::max(std::abs(s), 1e-30);
        if (n > 2 && std::abs(term) < cfg.tol * scale) {
            if (++small_streak >= 3) return s;
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("norlund_g_dz: series did not converge within term cap");
}

// The two solutions of x(x-1) w'' + (1-2x) w' - w/4 = 0 and their derivatives.
// w1 = F(1/2,1/2,1;x), w2 = g(1/2,1/2,1;x), continued by connection formulas
// near x=1 and x=infinity (upper-half-plane branch at infinity).
struct OmegaValue {
    cx w1, w2, dw1, dw2;
};

inline OmegaValue omega_pair_full(cx z, const SeriesConfig& cfg = {}) {
    const cx h = 0.5;
    if (std::abs(z) < 1e-300 || std::abs(z - 1.0) < 1e-300)
        throw DomainError("omega_pair: z must avoid {0, 1}");
    SeriesConfig wide = cfg;
    wide.z_max = 0.76;
    if (std::abs(z) <= 0.75) {
        return {hyp_f(h, h, 1.0, z, wide), norlund_g(h, h, 1.0, z, wide),
                hyp_f_dz({h, h, 1.0}, z, wide), norlund_g_dz(h, h, 1.0, z, wide)};
    }
    if (std::abs(1.0 - z) <= 0.75) {
        cx s = 1.0 - z;
        cx F = hyp_f(h, h, 1.0, s, wide), g = norlund_g(h, h, 1.0, s, wide);
        cx Fp = hyp_f_dz({h, h, 1.0}, s, wide), gp = norlund_g_dz(h, h, 1.0, s, wide);
        // w1 = -(1/pi) g(s), w2 = -pi F(s); d/dz = -d/ds
        return {-g / kPi, -kPi * F, gp / kPi, kPi * Fp};
    }
    if (std::abs(z) >= 4.0 / 3.0) {
        cx t = 1.0 / z;
        cx F = hyp_f(h, h, 1.0, t, wide), g = norlund_g(h, h, 1.0, t, wide);
        cx Fp = hyp_f_dz({h, h, 1.0}, t, wide), gp = norlund_g_dz(h, h, 1.0, t, wide);
        cx sq = std::sqrt(z);
        cx w1 = (F - cx(0.0, 1.0) / kPi * g) / sq;
        cx w2 = g / sq;
        // d/dz [z^{-1/2} H(1/z)] = -z^{-3/2} (H/2 + t H'(t))
        cx H1 = F - cx(0.0, 1.0) / kPi * g, H1p = Fp - cx(0.0, 1.0) / kPi * gp;
        cx dw1 = -(H1 / 2.0 + t * H1p) / (sq * z);
        cx dw2 = -(g / 2.0 + t * gp) / (sq * z);
        return {w1, w2, dw1, dw2};
    }
    throw BranchError("omega_pair: z outside all implemented connection regions");
}

inline std::pair<cx, cx> omega_pair(cx z, const SeriesConfig& cfg = {}) {
    auto v = omega_pair_full(z, cfg);
    return {v.w1, v.w2};
}

}  // namespace pvi
