#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "pvi/asymptotics.hpp"
#include "pvi/chazy.hpp"
#include "pvi/pvi.hpp"
#include "test_util.hpp"

using namespace pvi;
using pvi_test::Rng;

namespace {

// Central finite differences of a holomorphic map, used as the test-side
// derivative oracle.
template <typename F>
cx fd_deriv(F&& f, cx x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

const double kL2 = std::log(2.0);

}  // namespace

TEST(ThetaMaps, TrivialAndDerivedValues) {
    PviCoefficients c = theta_to_coeffs({0.0, 0.0, 0.0, 1.0});
    EXPECT_CNEAR(c.alpha, cx(0.0), 1e-15);
    EXPECT_CNEAR(c.beta, cx(0.0), 1e-15);
    EXPECT_CNEAR(c.gamma, cx(0.0), 1e-15);
    EXPECT_CNEAR(c.delta, cx(0.5), 1e-15);

    c = theta_to_coeffs({2.0, 0.0, 0.0, 1.0});  // p = 1
    EXPECT_CNEAR(c.beta, cx(-2.0), 1e-15);
    EXPECT_CNEAR(c.alpha, cx(0.0), 1e-15);
    EXPECT_CNEAR(c.gamma, cx(0.0), 1e-15);
    EXPECT_CNEAR(c.delta, cx(0.5), 1e-15);
}

TEST(ThetaMaps, RoundTrip) {
    Rng rng(201);
    for (int i = 0; i < 30; ++i) {
        ThetaTuple t{rng.complex_box(0.05, 2.0, -0.5, 0.5), rng.complex_box(0.05, 2.0, -0.5, 0.5),
                     rng.complex_box(0.05, 2.0, -0.5, 0.5), rng.complex_box(1.05, 3.0, -0.5, 0.5)};
        ThetaTuple back = coeffs_to_theta(theta_to_coeffs(t));
        // principal sqrt picks the representative with Re >= 0; our draws obey that
        EXPECT_CNEAR(back.theta0, t.theta0, 1e-12);
        EXPECT_CNEAR(back.thetax, t.thetax, 1e-12);
        EXPECT_CNEAR(back.theta1, t.theta1, 1e-12);
        EXPECT_CNEAR(back.thetainf, t.thetainf, 1e-12);
    }
}

TEST(PviRhs, SingularityGuard) {
    PviCoefficients c = theta_to_coeffs({0.3, 0.4, 0.5, 0.6});
    EXPECT_THROW(pvi_rhs(cx(0.3), cx(0.3), cx(0.1), c), SingularityError);
    EXPECT_THROW(pvi_rhs(cx(0.3), cx(1.0), cx(0.1), c), SingularityError);
    EXPECT_THROW(pvi_rhs(cx(0.0), cx(0.5), cx(0.1), c), SingularityError);
}

TEST(Chazy, SolvesPviNumerically) {
    // residual |y'' - pvi_rhs| at interior points, derivative oracles by FD
    PviCoefficients c = theta_to_coeffs({2.0, 0.0, 0.0, 1.0});
    cx nu = chazy_nu_from_rho0(cx(0.3));
    for (cx x : {cx(0.3, 0.1), cx(0.15), cx(0.45, -0.2)}) {
        double h = 1e-5;
        auto f = [&](cx z) { return chazy_solution(z, nu); };
        cx y = f(x);
        cx yp = chazy_solution_deriv(x, nu);
        cx yp_fd = fd_deriv(f, x, h);
        EXPECT_CNEAR(yp, yp_fd, 1e-7 * std::max(1.0, std::abs(yp)));
        cx ypp_fd = fd_deriv([&](cx z) { return chazy_solution_deriv(z, nu); }, x, h);
        cx rhs = pvi_rhs(x, y, yp, c);
        EXPECT_CNEAR(ypp_fd, rhs, 1e-8 * std::max(1.0, std::abs(rhs))) << "x = " << x;
    }
}

TEST(Chazy, SmallXMatchesNonGenericFamily) {
    // nu = 1/(4 ln 2 - 1 + rho0)
    cx rho0(0.3, 0.0);
    cx nu = chazy_nu_from_rho0(rho0);
    AsymptoticParams p;
    p.p = 1;
    p.rho0 = rho0;
    AsymptoticSolution sol(Family::NonGeneric, p);
    ThetaTuple t{2.0, 0.0, 0.0, 1.0};
    for (double xr : {1e-6, 1e-8}) {
        cx y_closed = chazy_solution(cx(xr), nu);
        cx y_asym = eval_asymptotic(sol, t, cx(xr));
        EXPECT_LT(std::abs(y_closed - y_asym) / std::abs(y_closed), 1e-4) << xr;
    }
}

TEST(Chazy, RegionConsistencyAcrossConnections) {
    cx nu = chazy_nu_from_rho0(cx(0.7));
    // 1-region vs infinity-region consistency where both converge
    cx x1(1.6, 0.4);
    cx v_inf_region = chazy_solution(x1, nu);  // |x| >= 4/3 picks the infinity path
    const cx h = 0.5;
    cx s = 1.0 - x1;
    cx F = hyp_f(h, h, 1.0, s), g = norlund_g(h, h, 1.0, s);
    cx Fp = hyp_f_dz({h, h, 1.0}, s), gp = norlund_g_dz(h, h, 1.0, s);
    cx w = -g / kPi + nu * (-kPi * F);
    cx wp = gp / kPi + nu * kPi * Fp;
    cx u = 2.0 * x1 * wp + w, v = 2.0 * (x1 - 1.0) * wp + w;
    cx d = 4.0 * x1 * (x1 - 1.0) * wp * wp + 4.0 * x1 * wp * w + w * w;
    cx y_one_region = 8.0 * x1 * w * wp * v * u / (d * d);
    EXPECT_CNEAR(v_inf_region, y_one_region, 1e-10 * std::max(1.0, std::abs(v_inf_region)));
}

TEST(RhoTransport, PrintedFormulaValues) {
    EXPECT_THROW(rho_transport(cx(1.0 - 4.0 * kL2)), SingularDenominator);
    // rho0 = pi + 1 - 4 ln 2 makes the rho1 denominator equal pi
    auto rt = rho_transport(cx(kPi + 1.0 - 4.0 * kL2));
    EXPECT_CNEAR(rt.rho1, cx(kPi - kL2 + 1.0), 1e-14);
}

TEST(RhoTransport, ChazyTransportBehaviorAtOne) {
    // Regression pin of the measured transport of the closed form: the fitted
    // coefficient at x->1 follows pi^2/u - 4 ln 2 + 1, u = 4 ln 2 - 1 + rho0.
    // (The printed formula has -ln2+1; the acceptance suite reports that
    // comparison separately.)
    for (double rho0 : {0.3, 1.1}) {
        cx u = 4.0 * kL2 - 1.0 + rho0;
        cx nu = 1.0 / u;
        auto fit_at = [&](double s) {
            double xv = 1.0 - s;
            double s_act = 1.0 - xv;  // the exact 1-x the evaluator sees
            cx y = chazy_solution(cx(xv), nu);
            cx sq = 1.0 / std::sqrt(1.0 - y);
            return std::pair<cx, cx>(sq - std::log(cx(s_act)), -sq - std::log(cx(s_act)));
        };
        auto [p1, m1] = fit_at(1e-10);
        auto [p2, m2] = fit_at(1e-12);
        cx fit = (std::abs(p1 - p2) < std::abs(m1 - m2)) ? p2 : m2;
        cx expected = kPi * kPi / u - 4.0 * kL2 + 1.0;
        EXPECT_CNEAR(fit, expected, 1e-6) << "rho0 = " << rho0;
    }
}

TEST(RhoTransport, ChazyTransportBehaviorAtInfinity) {
    // Same pin at x -> infinity: fitted constant equals 2 ln 2 - rho_transport().rhoinf.
    for (double rho0 : {0.3, -0.4}) {
        cx u = 4.0 * kL2 - 1.0 + rho0;
        cx nu = 1.0 / u;
        auto fit_at = [&](double X) {
            cx y = chazy_solution(cx(X), nu);
            cx sq = std::sqrt(1.0 - y);
            return std::pair<cx, cx>(sq - std::log(cx(X)), -sq - std::log(cx(X)));
        };
        auto [p1, m1] = fit_at(1e10);
        auto [p2, m2] = fit_at(1e12);
        cx fit = (std::abs(p1 - p2) < std::abs(m1 - m2)) ? p2 : m2;
        cx expected = 2.0 * kL2 - rho_transport(rho0).rhoinf;
        EXPECT_CNEAR(fit, expected, 1e-6) << "rho0 = " << rho0;
    }
}

TEST(EvalAsymptotic, LogSquaredCoefficientExtraction) {
    // coefficient of ln^2 x in y/x equals (thetax^2 - theta0^2)/4, by fitting a
    // quadratic in ln x through three evaluations
    ThetaTuple t{0.41, 0.73, 0.52, 0.275};
    AsymptoticParams p;
    p.r = cx(0.27);
    AsymptoticSolution sol(Family::LogSquared0, p);
    double xs[3] = {1e-4, 1e-5, 1e-6};
    cx v[3], L[3];
    for (int i = 0; i < 3; ++i) {
        v[i] = eval_asymptotic(sol, t, cx(xs[i])) / xs[i];
        L[i] = std::log(cx(xs[i]));
    }
    cx d01 = (v[0] - v[1]) / (L[0] - L[1]);
    cx d12 = (v[1] - v[2]) / (L[1] - L[2]);
    cx lead = (d01 - d12) / (L[0] - L[2]);
    EXPECT_CNEAR(lead, (t.thetax * t.thetax - t.theta0 * t.theta0) / 4.0, 1e-9);
}

TEST(EvalAsymptotic, NonGenericBracketVanishes) {
    AsymptoticParams p;
    p.p = 1;
    p.rho0 = cx(0.0);
    AsymptoticSolution sol(Family::NonGeneric, p);
    cx y = eval_asymptotic(sol, {2.0, 0.0, 0.0, 1.0}, cx(std::exp(-1.0)));
    EXPECT_LT(std::abs(y), 1e-15);
}

TEST(EvalAsymptotic, JimboPowerLaw) {
    AsymptoticParams p;
    p.a = cx(1.0);
    p.sigma = cx(0.5);
    AsymptoticSolution sol(Family::Jimbo0, p);
    cx y = eval_asymptotic(sol, {0.3, 0.4, 0.5, 0.6}, cx(1e-4));
    EXPECT_CNEAR(y, cx(1e-2), 1e-15);
}

TEST(EvalAsymptotic, FamilyConstraintErrors) {
    AsymptoticParams p;
    p.r = cx(0.2);
    EXPECT_THROW(
        eval_asymptotic(AsymptoticSolution(Family::LogLinear0, p), {0.41, 0.33, 0.5, 0.6}, cx(1e-3)),
        FamilyConstraintError);
    EXPECT_THROW(eval_asymptotic(AsymptoticSolution(Family::LogSquared0, p), {0.41, 0.41, 0.5, 0.6},
                                 cx(1e-3)),
                 FamilyConstraintError);
    p.p = 0;
    EXPECT_THROW(
        eval_asymptotic(AsymptoticSolution(Family::NonGeneric, p), {0.0, 0.0, 0.0, 1.0}, cx(1e-3)),
        FamilyConstraintError);
}

TEST(EvalAsymptotic, DerivativesMatchFiniteDifferences) {
    ThetaTuple t{0.41, 0.73, 0.52, 0.275};
    ThetaTuple tll{0.41, 0.41, 0.52, 0.275};
    ThetaTuple tng{2.0, 0.0, 0.0, 1.0};
    AsymptoticParams p;
    p.r = cx(0.27, 0.1);
    p.sigma = cx(0.5);
    p.a = cx(0.8, 0.2);
    p.p = 1;
    p.rho0 = cx(0.3);
    p.sign = 1;
    struct Case {
        Family f;
        ThetaTuple th;
        cx x;
    } cases[] = {
        {Family::Jimbo0, t, cx(1e-3, 2e-4)},
        {Family::LogSquared0, t, cx(1e-3, 2e-4)},
        {Family::LogLinear0, tll, cx(1e-3, 2e-4)},
        {Family::LogSquared1, {0.9, 0.41, 0.52, 0.275}, cx(1.0) + cx(1e-3, 2e-4)},
        {Family::LogSquaredInf, {0.41, 0.52, 0.73, 0.275}, cx(900.0, 120.0)},
        {Family::InvLogSq0, {0.41, 0.33, 0.52, 0.275}, cx(1e-3, 2e-4)},
        {Family::InvLogSqInf, {0.41, 0.33, 0.52, 0.275}, cx(900.0, 120.0)},
        {Family::InvLogSq1, {0.41, 0.33, 0.52, 0.275}, cx(1.0) + cx(1e-3, 2e-4)},
        {Family::LogLinear1, {0.9, 0.41, 0.41, 0.275}, cx(1.0) + cx(1e-3, 2e-4)},
        {Family::LogLinearInf, {0.41, 0.52, 0.41, 0.275}, cx(900.0, 120.0)},
        {Family::InvLogLin0, {0.41, 0.33, 0.7, 1.7}, cx(1e-3, 2e-4)},
        {Family::InvLogLinInf, {0.41, 0.7, 0.33, 1.7}, cx(900.0, 120.0)},
        {Family::InvLogLin1, {0.7, 0.33, 0.41, 1.7}, cx(1.0) + cx(1e-3, 2e-4)},
        {Family::NonGeneric, tng, cx(1e-3, 2e-4)},
        {Family::Taylor0, t, cx(1e-3, 2e-4)},
        {Family::Resonant0, {0.41, 0.33, 0.52, 0.275}, cx(1e-3, 2e-4)},
        {Family::SineLog0, t, cx(1e-3, 2e-4)},
    };
    for (const auto& cse : cases) {
        AsymptoticParams pp = p;
        if (cse.f == Family::Resonant0) pp.sigma = cse.th.theta0 + cse.th.thetax;
        if (cse.f == Family::SineLog0) {
            pp.sigma = cx(0.0, 0.5);
            pp.amp = sinelog_amplitude(cse.th, pp.sigma);
            pp.phi = cx(0.3, 0.1);
        }
        AsymptoticSolution sol(cse.f, pp);
        double h = 1e-6 * std::abs(cse.x);
        auto val = eval_asymptotic_full(sol, cse.th, cse.x);
        cx fd = fd_deriv([&](cx z) { return eval_asymptotic(sol, cse.th, z); }, cse.x, h);
        EXPECT_CNEAR(val.dy, fd, 1e-5 * std::max(1.0, std::abs(val.dy)))
            << "family " << family_name(cse.f);
    }
}

TEST(EvalAsymptotic, ResidualDecreasesTowardCriticalPoint) {
    // |y'' - pvi_rhs| for the truncated family shrinks as |x| halves
    ThetaTuple t{0.41, 0.73, 0.52, 0.275};
    PviCoefficients c = theta_to_coeffs(t);
    AsymptoticParams p;
    p.r = cx(0.27);
    AsymptoticSolution sol(Family::LogSquared0, p);
    auto residual = [&](double xr) {
        cx x(xr, 0.3 * xr);
        auto v = eval_asymptotic_full(sol, t, x);
        double h = 1e-4 * xr;
        cx ypp = fd_deriv([&](cx z) { return eval_asymptotic_full(sol, t, z).dy; }, x, h);
        cx rhs = pvi_rhs(x, v.y, v.dy, c);
        return std::abs(ypp - rhs) / std::abs(rhs);  // relative: absolute grows like ln^4 x
    };
    double r1 = residual(1e-5), r2 = residual(5e-6), r3 = residual(2.5e-6);
    EXPECT_LT(r2, r1);
    EXPECT_LT(r3, r2);
}

TEST(IntegratePath, TaylorFamilyStaysOnSlope) {
    // fivecases: y ~ theta0/(theta0+thetax) x stays on its slope
    ThetaTuple t{0.41, 0.33, 0.52, 0.275};
    PviCoefficients c = theta_to_coeffs(t);
    AsymptoticParams p;
    p.sign = 1;
    AsymptoticSolution sol(Family::Taylor0, p);
    cx x0(1e-6, 0.0);
    auto v = eval_asymptotic_full(sol, t, x0);
    auto traj = integrate_path(c, segment_path(x0, cx(1e-3), 1e-7), v.y, v.dy, 1e-12);
    cx slope = traj.back().y / traj.back().x;
    EXPECT_CNEAR(slope, t.theta0 / (t.theta0 + t.thetax), 1e-3);
}

TEST(IntegratePath, ReproducesChazyClosedForm) {
    PviCoefficients c = theta_to_coeffs({2.0, 0.0, 0.0, 1.0});
    cx nu = chazy_nu_from_rho0(cx(0.3));
    cx x0(0.01);
    // detour into the upper half plane: the real segment passes through a
    // movable zero of y where the equation degenerates
    ComplexPath path;
    path.waypoints = {x0, cx(0.15, 0.25), cx(0.5)};
    path.clearance = 5e-3;
    auto traj = integrate_path(c, path, chazy_solution(x0, nu), chazy_solution_deriv(x0, nu),
                               1e-12);
    cx y_end = traj.back().y;
    EXPECT_CNEAR(y_end, chazy_solution(cx(0.5), nu), 1e-8 * std::max(1.0, std::abs(y_end)));
}

TEST(IntegratePath, Reversibility) {
    PviCoefficients c = theta_to_coeffs({0.41, 0.33, 0.52, 0.275});
    cx x0(0.1, 0.05), y0(0.3, 0.1), yp0(0.2, -0.4);
    double tol = 1e-11;
    auto fwd = integrate_path(c, segment_path(x0, cx(0.4, 0.2)), y0, yp0, tol);
    auto back = integrate_path(c, segment_path(cx(0.4, 0.2), x0), fwd.back().y, fwd.back().yp, tol);
    EXPECT_CNEAR(back.back().y, y0, 10.0 * tol * std::max(1.0, std::abs(y0)));
    EXPECT_CNEAR(back.back().yp, yp0, 100.0 * tol * std::max(1.0, std::abs(yp0)));
}

TEST(IntegratePath, PathDeformationInvariance) {
    PviCoefficients c = theta_to_coeffs({0.41, 0.33, 0.52, 0.275});
    cx x0(0.1, 0.05), y0(0.3, 0.1), yp0(0.2, -0.4);
    double tol = 1e-11;
    ComplexPath p1 = segment_path(x0, cx(0.5, 0.3));
    ComplexPath p2;
    p2.waypoints = {x0, cx(0.2, 0.4), cx(0.45, 0.45), cx(0.5, 0.3)};
    p2.clearance = 0.02;
    auto t1 = integrate_path(c, p1, y0, yp0, tol);
    auto t2 = integrate_path(c, p2, y0, yp0, tol);
    EXPECT_CNEAR(t1.back().y, t2.back().y, 10.0 * tol * std::max(1.0, std::abs(t1.back().y)));
}

TEST(IntegratePath, PoleDetection) {
    // Chazy solutions develop movable poles; heading into one must be reported
    // with its location rather than silently diverging.
    PviCoefficients c = theta_to_coeffs({2.0, 0.0, 0.0, 1.0});
    cx nu = chazy_nu_from_rho0(cx(-2.0));
    bool hit = false;
    cx where;
    cx x0(0.02);
    try {
        integrate_path(c, segment_path(x0, cx(0.9), 1e-3), chazy_solution(x0, nu),
                       chazy_solution_deriv(x0, nu), 1e-10);
    } catch (const PoleEncountered& e) {
        hit = true;
        where = e.location;
    }
    EXPECT_TRUE(hit);
    if (hit) {
        EXPECT_GT(where.real(), 0.02);
        EXPECT_LT(where.real(), 0.9);
    }
}

TEST(IntegratePath, Guards) {
    PviCoefficients c = theta_to_coeffs({0.41, 0.33, 0.52, 0.275});
    EXPECT_THROW(integrate_path(c, segment_path(cx(0.1), cx(0.5)), cx(0.3), cx(0.1), -1.0),
                 DomainError);
    ComplexPath bad;
    bad.waypoints = {cx(0.1), cx(0.1)};
    EXPECT_THROW(integrate_path(c, bad, cx(0.3), cx(0.1), 1e-10), DomainError);
    ComplexPath through;
    through.waypoints = {cx(-0.5), cx(0.5)};  // passes through 0
    EXPECT_THROW(integrate_path(c, through, cx(0.3), cx(0.1), 1e-10), DomainError);
}
