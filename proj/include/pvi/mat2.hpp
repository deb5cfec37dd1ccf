#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "pvi/errors.hpp"

namespace pvi {

using cx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// 2x2 complex matrix, row major. Value semantics throughout.
struct Mat2 {
    cx a{1.0}, b{0.0}, c{0.0}, d{1.0};  // [[a, b], [c, d]]

    static Mat2 identity() { return {}; }
    static Mat2 diag(cx p, cx q) { return {p, 0.0, 0.0, q}; }

    cx trace() const { return a + d; }
    cx det() const { return a * d - b * c; }

    Mat2 inverse() const {
        cx dt = det();
        if (std::abs(dt) == 0.0) throw SingularMatrix("Mat2::inverse: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(cx s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
};

inline Mat2 conjugate_by(const Mat2& g, const Mat2& m) { return g * m * g.inverse(); }

// exp(i pi t sigma3) = diag(e^{i pi t}, e^{-i pi t})
inline Mat2 exp_i_pi_sigma3(cx t) {
    cx e = std::exp(cx(0.0, kPi) * t);
    return Mat2::diag(e, 1.0 / e);
}

// Eigenvalues of a 2x2 matrix (pair, unordered).
inline std::pair<cx, cx> eigenvalues(const Mat2& m) {
    cx tr = m.trace(), dt = m.det();
    cx disc = std::sqrt(tr * tr - 4.0 * dt);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

inline double rel_diff(const Mat2& x, const Mat2& y) {
    double n = std::max(x.max_abs(), y.max_abs());
    if (n == 0.0) return 0.0;
    return (x - y).max_abs() / n;
}

}  // namespace pvi
