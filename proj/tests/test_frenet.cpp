#include <cmath>
#include <random>

#include <doctest.h>

#include "isoasym/errors.hpp"
#include "isoasym/frenet.hpp"

using namespace isoasym;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

CurveSpec helix_curve() {
    return CurveSpec({parse("(1/2)*cos(s)"), parse("(1/2)*sin(s)"),
                      parse("(1/2)*s"), parse("(sqrt(2)/2)*s")},
                     0.0, 2.0 * M_PI);
}

CurveSpec flat_helix_curve() {
    return CurveSpec({parse("(1/2)*sin(s)"), parse("(1/2)*cos(s)"), parse("0"),
                      parse("(sqrt(3)/2)*s")},
                     0.0, 3.0);
}

// Closed-form frames the computation must reproduce.
FrenetData helix_expected(double s) {
    FrenetData f;
    f.s = s;
    f.T = {-0.5 * std::sin(s), 0.5 * std::cos(s), 0.5, kSqrt2 / 2.0};
    f.N = {-std::cos(s), -std::sin(s), 0.0, 0.0};
    f.B1 = {-kSqrt3 / 2.0 * std::sin(s), kSqrt3 / 2.0 * std::cos(s),
            -kSqrt3 / 6.0, -kSqrt6 / 6.0};
    f.B2 = {0.0, 0.0, kSqrt6 / 3.0, -kSqrt3 / 3.0};
    f.kappa1 = 0.5;
    f.kappa2 = -kSqrt3 / 2.0;
    f.kappa3 = 0.0;
    return f;
}

FrenetData flat_helix_expected(double s) {
    FrenetData f;
    f.s = s;
    f.T = {0.5 * std::cos(s), -0.5 * std::sin(s), 0.0, kSqrt3 / 2.0};
    f.N = {-std::sin(s), -std::cos(s), 0.0, 0.0};
    f.B1 = {kSqrt3 / 2.0 * std::cos(s), -kSqrt3 / 2.0 * std::sin(s), 0.0, -0.5};
    f.B2 = {0.0, 0.0, -1.0, 0.0};
    f.kappa1 = 0.5;
    f.kappa2 = -kSqrt3 / 2.0;
    f.kappa3 = 0.0;
    return f;
}

bool close(const Vec4& a, const Vec4& b, double tol) {
    return norm(a - b) <= tol;
}

void check_frame(const FrenetData& got, const FrenetData& want) {
    CHECK(close(got.T, want.T, 1e-12));
    CHECK(close(got.N, want.N, 1e-12));
    CHECK(close(got.B1, want.B1, 1e-12));
    CHECK(close(got.B2, want.B2, 1e-12));
    CHECK(std::abs(got.kappa1 - want.kappa1) <= 1e-12);
    CHECK(std::abs(got.kappa2 - want.kappa2) <= 1e-12);
    CHECK(std::abs(got.kappa3 - want.kappa3) <= 1e-12);
}

} // namespace

TEST_CASE("unnormalized second binormal direction (hand value)") {
    // r' x r'' x r''' for the helix curve is the constant (0, 0, sqrt2/8, -1/8).
    const CurveSpec c = helix_curve();
    for (double s : {0.0, 0.9, 3.3, 6.0}) {
        const auto d = c.derivatives(s, 3);
        const Vec4 cross = ternary_cross(d[1], d[2], d[3]);
        CHECK(close(cross, {0.0, 0.0, kSqrt2 / 8.0, -1.0 / 8.0}, 1e-15));
        CHECK(norm(cross) == doctest::Approx(kSqrt3 / 8.0).epsilon(1e-14));
    }
}

TEST_CASE("frames match the closed forms") {
    const CurveSpec helix = helix_curve();
    const CurveSpec flat = flat_helix_curve();
    for (int i = 0; i <= 20; ++i) {
        const double s1 = 2.0 * M_PI * i / 20.0;
        check_frame(frenet_apparatus(helix, s1), helix_expected(s1));
        const double s2 = 3.0 * i / 20.0;
        check_frame(frenet_apparatus(flat, s2), flat_helix_expected(s2));
    }
}

TEST_CASE("frame is orthonormal and positively oriented (100 random s)") {
    std::mt19937 rng(88123);
    for (const CurveSpec& c : {helix_curve(), flat_helix_curve()}) {
        std::uniform_real_distribution<double> dist(c.s_min(), c.s_max());
        for (int i = 0; i < 100; ++i) {
            const FrenetData f = frenet_apparatus(c, dist(rng));
            const Vec4 basis[4] = {f.T, f.N, f.B1, f.B2};
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    CHECK(std::abs(dot(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)) <=
                          1e-9);
            // positive orientation: dot(N x B1 x B2, T) = det[T;N;B1;B2] = +1
            CHECK(dot(ternary_cross(f.N, f.B1, f.B2), f.T) ==
                  doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("Frenet ODE residuals with h=1e-4 stay below 1e-6") {
    const double h = 1e-4;
    for (const CurveSpec& c : {helix_curve(), flat_helix_curve()}) {
        const double lo = c.s_min() + h, hi = c.s_max() - h;
        for (int i = 0; i <= 16; ++i) {
            const double s = lo + (hi - lo) * i / 16.0;
            const FrenetOdeResiduals r = verify_frenet_odes(c, s, h);
            CHECK(r.tangent <= 1e-6);
            CHECK(r.normal <= 1e-6);
            CHECK(r.binormal1 <= 1e-6);
            CHECK(r.binormal2 <= 1e-6);
            CHECK(r.max() <= 1e-6);
        }
    }
}

TEST_CASE("verify_frenet_odes rejects steps leaving the interval") {
    const CurveSpec c = helix_curve();
    CHECK_THROWS_AS(verify_frenet_odes(c, 0.0, 1e-4), SpecError);
    CHECK_THROWS_AS(verify_frenet_odes(c, 1.0, -1.0), SpecError);
}

TEST_CASE("degenerate curves are reported") {
    // straight line: r'' = 0
    const CurveSpec line({parse("s"), parse("0"), parse("0"), parse("0")}, 0.0,
                         1.0);
    CHECK_THROWS_AS(frenet_apparatus(line, 0.5), DegenerateFrame);

    // planar circle: r''' is parallel to r', so the cross product vanishes
    const CurveSpec circle({parse("cos(s)"), parse("sin(s)"), parse("0"),
                            parse("0")},
                           0.0, 6.0);
    CHECK_THROWS_AS(frenet_apparatus(circle, 1.0), DegenerateFrame);
}
