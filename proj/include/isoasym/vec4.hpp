#pragma once

#include <cmath>

#include "isoasym/errors.hpp"

namespace isoasym {

/// Norm threshold below which a vector counts as degenerate (zero).
inline constexpr double kEpsDegenerate = 1e-12;

/// Point/vector in R^4.
struct Vec4 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;

    double operator[](int i) const {
        switch (i) {
            case 0: return x1;
            case 1: return x2;
            case 2: return x3;
            default: return x4;
        }
    }
};

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
}

inline Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
}

inline Vec4 operator-(const Vec4& a) {
    return {-a.x1, -a.x2, -a.x3, -a.x4};
}

inline Vec4 operator*(double c, const Vec4& a) {
    return {c * a.x1, c * a.x2, c * a.x3, c * a.x4};
}

inline Vec4 operator*(const Vec4& a, double c) {
    return c * a;
}

inline Vec4 operator/(const Vec4& a, double c) {
    return {a.x1 / c, a.x2 / c, a.x3 / c, a.x4 / c};
}

inline double dot(const Vec4& u, const Vec4& v) {
    return u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3 + u.x4 * v.x4;
}

inline double norm(const Vec4& u) {
    return std::sqrt(dot(u, u));
}

inline bool is_finite(const Vec4& u) {
    return std::isfinite(u.x1) && std::isfinite(u.x2) && std::isfinite(u.x3) &&
           std::isfinite(u.x4);
}

/// Throws DegenerateVector on (near-)zero input.
inline Vec4 normalize(const Vec4& u) {
    const double n = norm(u);
    if (n <= kEpsDegenerate)
        throw DegenerateVector("cannot normalize a near-zero vector");
    return u / n;
}

/// det of a 3x3 matrix given row by row.
inline double det3(double a, double b, double c,  //
                   double d, double e, double f,  //
                   double g, double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

/// Three-argument vector product in R^4: the formal determinant with the
/// standard basis in the first row and u, v, w below, expanded along the
/// basis row. Orthogonal to all three inputs; zero when they are dependent.
/// Sign convention: e1 x e2 x e3 = -e4.
inline Vec4 ternary_cross(const Vec4& u, const Vec4& v, const Vec4& w) {
    const double c1 = det3(u.x2, u.x3, u.x4, v.x2, v.x3, v.x4, w.x2, w.x3, w.x4);
    const double c2 = det3(u.x1, u.x3, u.x4, v.x1, v.x3, v.x4, w.x1, w.x3, w.x4);
    const double c3 = det3(u.x1, u.x2, u.x4, v.x1, v.x2, v.x4, w.x1, w.x2, w.x4);
    const double c4 = det3(u.x1, u.x2, u.x3, v.x1, v.x2, v.x3, w.x1, w.x2, w.x3);
    return {c1, -c2, c3, -c4};
}

} // namespace isoasym
