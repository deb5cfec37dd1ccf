#pragma once

// The sixth Painleve equation: parameter dictionaries, the right-hand side,
// and high-precision integration along complex x-paths.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "pvi/errors.hpp"
#include "pvi/mat2.hpp"
#include "pvi/ode.hpp"

namespace pvi {

struct ThetaTuple {
    cx theta0, thetax, theta1, thetainf;
};

struct PviCoefficients {
    cx alpha, beta, gamma, delta;
};

inline PviCoefficients theta_to_coeffs(const ThetaTuple& t) {
    return {0.5 * (t.thetainf - 1.0) * (t.thetainf - 1.0), -0.5 * t.theta0 * t.theta0,
            0.5 * t.theta1 * t.theta1, 0.5 * (1.0 - t.thetax * t.thetax)};
}

struct ThetaSigns {
    int s0 = 1, sx = 1, s1 = 1, sinf = 1;
};

inline ThetaTuple coeffs_to_theta(const PviCoefficients& c, const ThetaSigns& s = {}) {
    return {static_cast<double>(s.s0) * std::sqrt(-2.0 * c.beta),
            static_cast<double>(s.sx) * std::sqrt(1.0 - 2.0 * c.delta),
            static_cast<double>(s.s1) * std::sqrt(2.0 * c.gamma),
            1.0 + static_cast<double>(s.sinf) * std::sqrt(2.0 * c.alpha)};
}

// Second derivative prescribed by (PVI).
inline cx pvi_rhs(cx x, cx y, cx yp, const PviCoefficients& c, double clearance = 1e-12) {
    if (std::abs(x) < clearance || std::abs(x - 1.0) < clearance)
        throw SingularityError("pvi_rhs: x at a critical point");
    if (std::abs(y) < clearance || std::abs(y - 1.0) < clearance || std::abs(y - x) < clearance)
        throw SingularityError("pvi_rhs: y on the singular locus {0,1,x}");
    cx first = 0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - x)) * yp * yp;
    cx second = (1.0 / x + 1.0 / (x - 1.0) + 1.0 / (y - x)) * yp;
    cx rat = y * (y - 1.0) * (y - x) / (x * x * (x - 1.0) * (x - 1.0));
    cx bracket = c.alpha + c.beta * x / (y * y) + c.gamma * (x - 1.0) / ((y - 1.0) * (y - 1.0)) +
                 c.delta * x * (x - 1.0) / ((y - x) * (y - x));
    return first - second + rat * bracket;
}

struct ComplexPath {
    std::vector<cx> waypoints;
    double clearance = 0.02;  // required distance of each segment from {0, 1}

    void validate() const {
        if (waypoints.size() < 2) throw DomainError("ComplexPath: need at least two waypoints");
        if (clearance <= 0.0) throw DomainError("ComplexPath: clearance must be positive");
        for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
            if (std::abs(waypoints[i + 1] - waypoints[i]) == 0.0)
                throw DomainError("ComplexPath: consecutive waypoints coincide");
            for (cx s : {cx(0.0), cx(1.0)}) {
                if (segment_distance(waypoints[i], waypoints[i + 1], s) < clearance)
                    throw DomainError("ComplexPath: segment violates clearance around {0,1}");
            }
        }
    }

    static double segment_distance(cx a, cx b, cx p) {
        cx d = b - a;
        double L2 = std::norm(d);
        double t = std::clamp(((p - a) * std::conj(d)).real() / L2, 0.0, 1.0);
        return std::abs(a + t * d - p);
    }
};

struct TrajectoryPoint {
    cx x, y, yp;
};

using Trajectory = std::vector<TrajectoryPoint>;

// Adaptive continuation of (y, y') along the polyline. Aborts with
// PoleEncountered when |y| or 1/|y - x| exceeds the blow-up guard.
inline Trajectory integrate_path(const PviCoefficients& c, const ComplexPath& path, cx y0, cx yp0,
                                 double tol = 1e-12) {
    if (tol <= 0.0) throw DomainError("integrate_path: tol must be positive");
    path.validate();
    constexpr double kBlowup = 1e8;
    Trajectory traj;
    State<2> state{y0, yp0};
    for (std::size_t seg = 0; seg + 1 < path.waypoints.size(); ++seg) {
        cx a = path.waypoints[seg], b = path.waypoints[seg + 1];
        auto rhs = [&](double t, const State<2>& s) -> State<2> {
            cx x = a + t * (b - a);
            if (std::abs(s[0]) > kBlowup || std::abs(s[0] - x) < 1.0 / kBlowup)
                throw PoleEncountered("integrate_path: solution blow-up", x);
            cx ypp = pvi_rhs(x, s[0], s[1], c, 1.0 / kBlowup);
            return {(b - a) * s[1], (b - a) * ypp};
        };
        OdeOptions opt;
        opt.rtol = tol;
        opt.atol = tol * 1e-2;
        auto observe = [&](double t, const State<2>& s) {
            if (seg == 0 || t > 0.0) traj.push_back({a + t * (b - a), s[0], s[1] });
        };
        state = integrate_dp5<2>(rhs, state, opt, observe);
    }
    return traj;
}

// Straight two-point path helper.
inline ComplexPath segment_path(cx from, cx to, double clearance = 0.02) {
    ComplexPath p;
    p.waypoints = {from, to};
    p.clearance = clearance;
    return p;
}

}  // namespace pvi
