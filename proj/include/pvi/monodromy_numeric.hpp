#pragma once

// Monodromy by lambda-plane continuation: polygonal loop basis in the order
// (1,2,3) = (0, x, 1) referred to the basepoint, adaptive transport of a
// fundamental matrix, and the IN/OUT matching residual.

#include <cmath>
#include <complex>
#include <vector>

#include "pvi/errors.hpp"
#include "pvi/fuchsian.hpp"
#include "pvi/ode.hpp"
#include "pvi/rep.hpp"

namespace pvi {

struct LoopBasis {
    cx basepoint{2.0, 2.0};
    std::vector<cx> loop0, loopx, loop1;  // closed polylines from/to basepoint
};

namespace detail {

// Spokes are subdivided geometrically so each sub-segment spans a bounded
// scale ratio; the polyline stays on the straight ray (same homotopy class)
// while keeping the adaptive steps well-conditioned down to tiny radii.
inline std::vector<cx> spoke_ladder(cx center, double radius, cx base) {
    std::vector<cx> pts{base};
    cx dir = (base - center) / std::abs(base - center);
    double R = std::abs(base - center);
    for (double rr = R / 4.0; rr > radius * 2.0; rr /= 4.0) pts.push_back(center + rr * dir);
    pts.push_back(center + radius * dir);
    return pts;
}

inline std::vector<cx> polygon_loop(cx center, double radius, cx base, int nseg = 24) {
    std::vector<cx> down = spoke_ladder(center, radius, base);
    std::vector<cx> pts = down;
    cx entry = down.back();
    double th0 = std::arg(entry - center);
    for (int k = 1; k <= nseg; ++k)
        pts.push_back(center + radius * std::exp(cx(0.0, th0 + 2.0 * kPi * k / nseg)));
    for (auto it = down.rbegin(); it != down.rend(); ++it) pts.push_back(*it);
    return pts;
}

}  // namespace detail

// Circles of radius (distance to nearest other singularity)/3 joined by
// straight spokes from the basepoint. Works down to very small |x|; the loop
// scale shrinks with |x| so the spokes clear the co-moving singularity.
inline LoopBasis default_loop_basis(cx x, cx basepoint = cx(2.0, 2.0)) {
    if (std::abs(x) < 1e-300 || std::abs(x - 1.0) < 1e-300)
        throw DomainError("default_loop_basis: x coincides with 0 or 1");
    LoopBasis b;
    b.basepoint = basepoint;
    double r0 = std::min(std::abs(x), 1.0) / 3.0;
    double rx = std::min(std::abs(x), std::abs(1.0 - x)) / 3.0;
    double r1 = std::min(std::abs(1.0 - x), 1.0) / 3.0;
    b.loop0 = detail::polygon_loop(0.0, r0, basepoint);
    b.loopx = detail::polygon_loop(x, rx, basepoint);
    b.loop1 = detail::polygon_loop(1.0, r1, basepoint);
    return b;
}

// Transport of Psi (Psi(start) = I) along a polyline for dPsi/dlambda = A(lambda) Psi.
inline Mat2 transport(const FuchsianSystem& s, const std::vector<cx>& pts, double rtol = 1e-12) {
    State<4> y{1.0, 0.0, 0.0, 1.0};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        cx a = pts[i], bnd = pts[i + 1];
        auto rhs = [&](double t, const State<4>& v) -> State<4> {
            cx lam = a + t * (bnd - a);
            Mat2 A = s.coeff(lam);
            Mat2 P{v[0], v[1], v[2], v[3]};
            Mat2 dP = (bnd - a) * (A * P);
            return {dP.a, dP.b, dP.c, dP.d};
        };
        OdeOptions opt;
        opt.rtol = rtol;
        opt.atol = 1e-14;
        y = integrate_dp5<4>(rhs, y, opt, [](double, const State<4>&) {});
    }
    return {y[0], y[1], y[2], y[3]};
}

// Monodromy triple in the identity frame at the basepoint. det Mi must come
// out unimodular to tol (traceless residues); ConditioningError otherwise.
inline MonodromyRep numerical_monodromy(const FuchsianSystem& s, const LoopBasis& basis,
                                        double tol = 1e-9, double rtol = 1e-12) {
    MonodromyRep rep;
    rep.m0 = transport(s, basis.loop0, rtol);
    rep.mx = transport(s, basis.loopx, rtol);
    rep.m1 = transport(s, basis.loop1, rtol);
    for (const Mat2* m : {&rep.m0, &rep.mx, &rep.m1}) {
        if (std::abs(m->det() - 1.0) > tol)
            throw ConditioningError("numerical_monodromy: det M deviates from 1 beyond tol");
    }
    return rep;
}

inline MonodromyRep numerical_monodromy(const FuchsianSystem& s, double tol = 1e-9,
                                        double rtol = 1e-12) {
    return numerical_monodromy(s, default_loop_basis(s.x), tol, rtol);
}

// ---------------------------------------------------------------------------
// IN/OUT matching residual for the sigma = 0 logarithmic reduction.

struct MatchingConfig {
    double delta_in = 0.5;
    double delta_out = 0.5;
    int n_samples = 3;
    double anchor_exponent = 0.95;  // anchors at |x|^{+-anchor_exponent}
    double rtol = 1e-12;
};

namespace detail {

inline Mat2 ln_frame(cx logval) { return {1.0, logval, 0.0, 1.0}; }

// transport for a constant-coefficient pair dPsi/dz = [P/z + Q/(z-1)] Psi
inline Mat2 transport_pair(const Mat2& P, const Mat2& Q, Mat2 psi, cx za, cx zb, double rtol) {
    State<4> y{psi.a, psi.b, psi.c, psi.d};
    auto rhs = [&](double t, const State<4>& v) -> State<4> {
        cx z = za + t * (zb - za);
        Mat2 A = (1.0 / z) * P + (1.0 / (z - 1.0)) * Q;
        Mat2 M{v[0], v[1], v[2], v[3]};
        Mat2 d = (zb - za) * (A * M);
        return {d.a, d.b, d.c, d.d};
    };
    OdeOptions opt;
    opt.rtol = rtol;
    opt.atol = 1e-14;
    auto out = integrate_dp5<4>(rhs, y, opt, [](double, const State<4>&) {});
    return {out[0], out[1], out[2], out[3]};
}

}  // namespace detail

// K0(x) = G0 [[1, log x],[0,1]] with G0 from the sigma=0 OUT system.
inline Mat2 matching_k0(const ThetaTuple& t, cx r1, cx x) {
    const cx ti = t.thetainf, t1 = t.theta1;
    Mat2 G0{1.0, 0.0, (ti * ti - t1 * t1) / (4.0 * ti * r1), 1.0 / r1};
    return G0 * detail::ln_frame(std::log(x));
}

// Max relative deviation between Psi_OUT and K0(x) Psi0(lambda/x) over samples
// on |lambda| = |x|^{(delta_in+delta_out)/2}, upper half plane.
inline double matching_residual(const ThetaTuple& t, cx r, cx r1, cx x_small,
                                const MatchingConfig& cfg = {}) {
    if (cfg.delta_in > cfg.delta_out)
        throw DomainError("matching_residual: empty overlap (delta_in > delta_out)");
    if (!(cfg.delta_in > 0.0) || !(cfg.delta_out < 1.0))
        throw DomainError("matching_residual: deltas must satisfy 0 < in <= out < 1");
    const cx t0 = t.theta0, tx = t.thetax, t1 = t.theta1, ti = t.thetainf;
    if (std::abs(ti) < 1e-12) throw GaugeError("matching_residual: thetainf must be nonzero");

    // OUT system (sigma = 0 lemma): hatA1 and hatA0+hatAx
    Mat2 A1h{-(ti * ti + t1 * t1) / (4.0 * ti), -r1,
             (t1 * t1 - ti * ti) * (t1 * t1 - ti * ti) / (16.0 * ti * ti * r1),
             (ti * ti + t1 * t1) / (4.0 * ti)};
    Mat2 A0xh{(t1 * t1 - ti * ti) / (4.0 * ti), r1,
              -(ti * ti - t1 * t1) * (ti * ti - t1 * t1) / (16.0 * ti * ti * r1),
              (ti * ti - t1 * t1) / (4.0 * ti)};
    Mat2 G0{1.0, 0.0, (ti * ti - t1 * t1) / (4.0 * ti * r1), 1.0 / r1};

    // IN system in mu: hathatA0, hathatAx
    cx D = tx * tx - t0 * t0;
    Mat2 A0hh{r + t0 / 2.0, 4.0 * r * (r + t0) / D, -D / 4.0, -r - t0 / 2.0};
    Mat2 Axhh{-r - t0 / 2.0, 1.0 - 4.0 * r * (r + t0) / D, D / 4.0, r + t0 / 2.0};

    Mat2 K0 = matching_k0(t, r1, x_small);
    const double ax = std::abs(x_small);
    const double rs = std::pow(ax, 0.5 * (cfg.delta_in + cfg.delta_out));
    const double r_anchor_out = std::pow(ax, cfg.anchor_exponent);
    const double r_anchor_in_mu = std::pow(ax, -cfg.anchor_exponent);

    double worst = 0.0;
    for (int k = 0; k < cfg.n_samples; ++k) {
        double phase = kPi * (k + 1) / (cfg.n_samples + 1);
        cx dir_k = std::exp(cx(0.0, phase));
        cx lam_s = rs * dir_k;
        // OUT: anchor near 0 with the log frame, integrate out to the sample
        cx lam_a = r_anchor_out * dir_k;
        Mat2 psi_out = detail::transport_pair(A0xh, A1h, G0 * detail::ln_frame(std::log(lam_a)),
                                              lam_a, lam_s, cfg.rtol);
        // IN: anchor Psi0 at large mu, integrate down to mu_s = lam_s / x
        cx mu_a = r_anchor_in_mu * dir_k;
        cx mu_s = lam_s / x_small;
        Mat2 psi0 = detail::transport_pair(A0hh, Axhh, detail::ln_frame(std::log(mu_a)), mu_a,
                                           mu_s, cfg.rtol);
        Mat2 psi_in = K0 * psi0;
        worst = std::max(worst, rel_diff(psi_out, psi_in));
    }
    return worst;
}

}  // namespace pvi
