#include <array>
#include <cmath>

#include <doctest.h>

#include "isoasym/curve.hpp"
#include "isoasym/errors.hpp"

using namespace isoasym;

namespace {

CurveSpec helix_curve() { // first builtin curve
    return CurveSpec({parse("(1/2)*cos(s)"), parse("(1/2)*sin(s)"),
                      parse("(1/2)*s"), parse("(sqrt(2)/2)*s")},
                     0.0, 2.0 * M_PI);
}

CurveSpec flat_helix_curve() { // second builtin curve
    return CurveSpec({parse("(1/2)*sin(s)"), parse("(1/2)*cos(s)"), parse("0"),
                      parse("(sqrt(3)/2)*s")},
                     0.0, 3.0);
}

bool close(const Vec4& a, const Vec4& b, double tol) {
    return norm(a - b) <= tol;
}

} // namespace

TEST_CASE("construction rejects bad specs") {
    CHECK_THROWS_AS(CurveSpec({parse("t"), parse("0"), parse("0"), parse("s")},
                              0.0, 1.0),
                    SpecError);
    CHECK_THROWS_AS(CurveSpec({parse("s"), parse("q+s"), parse("0"), parse("0")},
                              0.0, 1.0),
                    SpecError);
    CHECK_THROWS_AS(CurveSpec({parse("s"), parse("0"), parse("0"), parse("0")},
                              1.0, 1.0),
                    SpecError);
    CHECK_THROWS_AS(CurveSpec({parse("s"), parse("0"), parse("0"), parse("0")},
                              2.0, 1.0),
                    SpecError);
}

TEST_CASE("derivatives: hand values for the helix curve") {
    const CurveSpec c = helix_curve();
    const double r2 = std::sqrt(2.0);

    const auto d0 = c.derivatives(0.0, 4);
    REQUIRE(d0.size() == 5);
    CHECK(close(d0[0], {0.5, 0.0, 0.0, 0.0}, 1e-15));
    CHECK(close(d0[1], {0.0, 0.5, 0.5, r2 / 2.0}, 1e-15));
    CHECK(close(d0[2], {-0.5, 0.0, 0.0, 0.0}, 1e-15));
    CHECK(close(d0[3], {0.0, -0.5, 0.0, 0.0}, 1e-15));
    CHECK(close(d0[4], {0.5, 0.0, 0.0, 0.0}, 1e-15));

    const double s = 1.2;
    CHECK(close(c.derivative(s, 1),
                {-0.5 * std::sin(s), 0.5 * std::cos(s), 0.5, r2 / 2.0}, 1e-15));
    CHECK(close(c.derivative(s, 2),
                {-0.5 * std::cos(s), -0.5 * std::sin(s), 0.0, 0.0}, 1e-15));
    CHECK(close(c.derivative(s, 0), c.derivatives(s, 0)[0], 0.0));
}

TEST_CASE("derivatives: domain checks") {
    const CurveSpec c = helix_curve();
    CHECK_THROWS_AS(c.derivatives(-0.1, 2), SpecError);
    CHECK_THROWS_AS(c.derivatives(7.0, 2), SpecError);
    CHECK_THROWS_AS(c.derivatives(1.0, 5), SpecError);
    CHECK_THROWS_AS(c.derivatives(1.0, -1), SpecError);
    CHECK_NOTHROW(c.derivatives(0.0, 4));
    CHECK_NOTHROW(c.derivatives(2.0 * M_PI, 4));
}

TEST_CASE("validate: builtin curves pass with tiny deviations") {
    SUBCASE("helix") {
        const CurveValidation v = helix_curve().validate();
        CHECK(v.passed());
        CHECK(v.unit_speed_ok);
        CHECK(v.normal_ok);
        CHECK(v.max_unit_speed_dev <= 1e-12);
        CHECK(v.min_second_deriv_norm == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(v.n_samples == 257);
    }
    SUBCASE("flat helix") {
        const CurveValidation v = flat_helix_curve().validate();
        CHECK(v.passed());
        CHECK(v.max_unit_speed_dev <= 1e-12);
        CHECK(v.min_second_deriv_norm == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("validate: diagonal line fails unit speed") {
    const CurveSpec c({parse("s"), parse("s"), parse("0"), parse("0")}, 0.0, 1.0);
    const CurveValidation v = c.validate();
    CHECK_FALSE(v.passed());
    CHECK_FALSE(v.unit_speed_ok);
    CHECK(v.max_unit_speed_dev ==
          doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("validate: straight line has no principal normal") {
    const CurveSpec c({parse("s"), parse("0"), parse("0"), parse("0")}, 0.0, 1.0);
    const CurveValidation v = c.validate();
    CHECK(v.unit_speed_ok);
    CHECK_FALSE(v.normal_ok);
    CHECK(v.min_second_deriv_norm == 0.0);
}

TEST_CASE("symbolic derivatives vs central differences") {
    const double h = 1e-5;
    for (const CurveSpec& c : {helix_curve(), flat_helix_curve()}) {
        const double lo = c.s_min() + 0.05, hi = c.s_max() - 0.05;
        for (int order = 1; order <= 4; ++order) {
            for (int i = 0; i <= 8; ++i) {
                const double s = lo + (hi - lo) * i / 8.0;
                const Vec4 sym = c.derivative(s, order);
                const Vec4 num = (c.derivative(s + h, order - 1) -
                                  c.derivative(s - h, order - 1)) /
                                 (2.0 * h);
                CHECK(norm(sym - num) <= 1e-6);
            }
        }
    }
}
