#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "isoasym/mesh.hpp"
#include "isoasym/errors.hpp"

using namespace isoasym;

namespace {

constexpr double kPi = 3.14159265358979323846;

FamilySpec ex1_family() {
    CurveSpec curve({parse("(1/2)*cos(s)"), parse("(1/2)*sin(s)"),
                     parse("(1/2)*s"), parse("(sqrt(2)/2)*s")},
                    0.0, 2.0 * kPi);
    return FamilySpec(curve,
                      MarchingScale(parse("(t-1/2)*(q-0)"), parse("t-1/2"),
                                    parse("0"), parse("q-0"), 0.5, 0.0,
                                    {0.0, 1.0}, {0.0, 1.0}));
}

FamilySpec ex2a_family() {
    CurveSpec curve({parse("(1/2)*sin(s)"), parse("(1/2)*cos(s)"), parse("0"),
                     parse("(sqrt(3)/2)*s")},
                    0.0, 3.0);
    return FamilySpec(curve,
                      MarchingScale(parse("t-1/2"), parse("(s+t+1)*(q-0)"),
                                    parse("0"), parse("(s+1)*(t-1/2)"), 0.5,
                                    0.0, {0.0, 1.0}, {0.0, 1.0}));
}

FamilySpec ex2b_family() {
    CurveSpec curve({parse("(1/2)*sin(s)"), parse("(1/2)*cos(s)"), parse("0"),
                     parse("(sqrt(3)/2)*s")},
                    kPi / 64.0, kPi / 2.0);
    return FamilySpec(curve,
                      MarchingScale(parse("0"), parse("sin(s*(q-1/2))"),
                                    parse("0"), parse("s*q^2*(t-1)"), 1.0, 0.5,
                                    {0.0, 1.0}, {0.0, 1.0}));
}

double max_abs_diff(const std::array<double, 3>& a,
                    const std::array<double, 3>& b) {
    double m = 0.0;
    for (int k = 0; k < 3; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// Pull every "v x y z" line back out of OBJ text.
std::vector<std::array<double, 3>> parse_obj_vertices(const std::string& text) {
    std::vector<std::array<double, 3>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) != 0) continue;
        std::array<double, 3> p{};
        const char* c = line.c_str() + 2;
        char* end = nullptr;
        for (int k = 0; k < 3; ++k) {
            p[k] = std::strtod(c, &end);
            c = end;
        }
        out.push_back(p);
    }
    return out;
}

} // namespace

TEST_CASE("projection drops the requested coordinate") {
    const Vec4 p{1.0, 2.0, 3.0, 4.0};
    CHECK(make_projection(1).apply(p) == std::array<double, 3>{2.0, 3.0, 4.0});
    CHECK(make_projection(2).apply(p) == std::array<double, 3>{1.0, 3.0, 4.0});
    CHECK(make_projection(3).apply(p) == std::array<double, 3>{1.0, 2.0, 4.0});
    CHECK(make_projection(4).apply(p) == std::array<double, 3>{1.0, 2.0, 3.0});
    CHECK_THROWS_AS(make_projection(0), SpecError);
    CHECK_THROWS_AS(make_projection(5), SpecError);
    CHECK_THROWS_AS(Projection{7}.apply(p), SpecError);
}

TEST_CASE("fixed-q slice of the first pencil matches its closed form") {
    const FamilySpec family = ex1_family();
    const Mesh mesh =
        slice_surface(family, Param::Q, 0.0, 25, 25, make_projection(4));

    REQUIRE(mesh.vertices.size() == 625);
    REQUIRE(mesh.params.size() == 625);
    REQUIRE(mesh.quads.size() == 576);
    REQUIRE(mesh.polylines.size() == 1);
    REQUIRE(mesh.polylines[0].size() == 25);

    // with q = 0 and the last coordinate dropped the sheet collapses to
    // ((1-t) cos s, (1-t) sin s, s/2)
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double s = 2.0 * kPi * (static_cast<double>(i) / 24.0);
        for (int j = 0; j < 25; ++j) {
            const double t = static_cast<double>(j) / 24.0;
            const std::array<double, 3> expect{(1.0 - t) * std::cos(s),
                                               (1.0 - t) * std::sin(s),
                                               0.5 * s};
            worst = std::max(worst,
                             max_abs_diff(mesh.vertices[i * 25 + j], expect));
            CHECK(mesh.params[i * 25 + j][0] == doctest::Approx(s).epsilon(1e-15));
            CHECK(mesh.params[i * 25 + j][1] == doctest::Approx(t).epsilon(1e-15));
        }
    }
    CHECK(worst <= 1e-9);

    // row-major quad connectivity
    CHECK(mesh.quads[0] == std::array<int, 4>{0, 25, 26, 1});
    CHECK(mesh.quads[24] == std::array<int, 4>{25, 50, 51, 26}); // cell (1,0)
    CHECK(mesh.quads[575] == std::array<int, 4>{598, 623, 624, 599});

    // the curve overlay coincides with the grid column at t = t0 = 1/2 (j=12)
    for (int i = 0; i < 25; ++i)
        CHECK(max_abs_diff(mesh.polylines[0][i], mesh.vertices[i * 25 + 12]) <=
              1e-12);
}

TEST_CASE("fixed-q slice of the second pencil matches its closed form") {
    const Mesh mesh =
        slice_surface(ex2a_family(), Param::Q, 0.0, 25, 25, make_projection(4));
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double s = 3.0 * (static_cast<double>(i) / 24.0);
        for (int j = 0; j < 25; ++j) {
            const double t = static_cast<double>(j) / 24.0;
            const std::array<double, 3> expect{
                0.5 * std::sin(s) + 0.5 * (t - 0.5) * std::cos(s),
                0.5 * std::cos(s) - 0.5 * (t - 0.5) * std::sin(s),
                -(s + 1.0) * (t - 0.5)};
            worst = std::max(worst,
                             max_abs_diff(mesh.vertices[i * 25 + j], expect));
        }
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("fixed-t slice of the third pencil matches its closed form") {
    const Mesh mesh =
        slice_surface(ex2b_family(), Param::T, 1.0, 25, 25, make_projection(3));
    const double s_min = kPi / 64.0, s_max = kPi / 2.0;
    const double r3 = std::sqrt(3.0);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double s = s_min + (s_max - s_min) * (static_cast<double>(i) / 24.0);
        for (int j = 0; j < 25; ++j) {
            const double q = static_cast<double>(j) / 24.0;
            const double v = std::sin(s * (q - 0.5));
            const std::array<double, 3> expect{std::sin(s) * (0.5 - v),
                                               std::cos(s) * (0.5 - v),
                                               (r3 / 2.0) * s};
            worst = std::max(worst,
                             max_abs_diff(mesh.vertices[i * 25 + j], expect));
        }
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("fixed-s slice evaluates the cross section over (t, q)") {
    const FamilySpec family = ex1_family();
    const Projection proj = make_projection(4);
    const Mesh mesh = slice_surface(family, Param::S, 1.0, 5, 7, proj);

    REQUIRE(mesh.vertices.size() == 35);
    REQUIRE(mesh.quads.size() == 24);
    for (int i = 0; i < 5; ++i) {
        const double t = static_cast<double>(i) / 4.0;
        for (int j = 0; j < 7; ++j) {
            const double q = static_cast<double>(j) / 6.0;
            const auto direct = proj.apply(family.eval_surface(1.0, t, q));
            CHECK(max_abs_diff(mesh.vertices[i * 7 + j], direct) == 0.0);
            CHECK(mesh.params[i * 7 + j][0] == t);
            CHECK(mesh.params[i * 7 + j][1] == q);
        }
    }

    // the overlay still traces the full curve, 5 samples here
    REQUIRE(mesh.polylines.size() == 1);
    REQUIRE(mesh.polylines[0].size() == 5);
    const auto r0 = proj.apply(family.curve().derivative(0.0, 0));
    const auto r1 = proj.apply(family.curve().derivative(2.0 * kPi, 0));
    CHECK(max_abs_diff(mesh.polylines[0][0], r0) <= 1e-12);
    CHECK(max_abs_diff(mesh.polylines[0][4], r1) <= 1e-12);
}

TEST_CASE("slice rejects bad grids, out-of-box values, and bad projections") {
    const FamilySpec family = ex1_family();
    const Projection proj = make_projection(4);
    CHECK_THROWS_AS(slice_surface(family, Param::Q, 0.0, 1, 25, proj), SpecError);
    CHECK_THROWS_AS(slice_surface(family, Param::Q, 0.0, 25, 0, proj), SpecError);
    CHECK_THROWS_AS(slice_surface(family, Param::Q, 2.0, 5, 5, proj), SpecError);
    CHECK_THROWS_AS(slice_surface(family, Param::T, 1.5, 5, 5, proj), SpecError);
    CHECK_THROWS_AS(slice_surface(family, Param::S, -1.0, 5, 5, proj), SpecError);
    CHECK_THROWS_AS(slice_surface(family, Param::Q, 0.0, 5, 5, Projection{9}),
                    SpecError);
}

TEST_CASE("obj output: layout, 1-based indexing, and 9-digit formatting") {
    Mesh mesh;
    mesh.vertices = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 0, 1}};
    mesh.params = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    mesh.quads = {{0, 2, 3, 1}}; // the winding a 2x2 slice produces
    mesh.polylines = {{{0.5, 0.5, 0.0}, {0.25, 0.0, 1e-10}}};

    std::ostringstream out;
    write_obj(mesh, out);
    CHECK(out.str() == "v 0 0 0\n"
                       "v 0 0 1\n"
                       "v 1 0 0\n"
                       "v 1 0 1\n"
                       "f 1 3 4 2\n"
                       "v 0.5 0.5 0\n"
                       "v 0.25 0 1e-10\n"
                       "l 5 6\n");
}

TEST_CASE("obj output skips degenerate polylines") {
    Mesh mesh;
    mesh.vertices = {{0, 0, 0}};
    mesh.params = {{0, 0}};
    mesh.polylines = {{{1, 1, 1}}}; // a single point is not a line
    std::ostringstream out;
    write_obj(mesh, out);
    CHECK(out.str() == "v 0 0 0\n");
}

TEST_CASE("obj output rejects non-finite vertices and bad face indices") {
    Mesh bad_vertex;
    bad_vertex.vertices = {{0.0, std::nan(""), 0.0}};
    bad_vertex.params = {{0, 0}};
    std::ostringstream sink;
    CHECK_THROWS_AS(write_obj(bad_vertex, sink), SpecError);

    Mesh bad_face;
    bad_face.vertices = {{0, 0, 0}, {1, 0, 0}};
    bad_face.params = {{0, 0}, {0, 1}};
    bad_face.quads = {{0, 1, 2, 3}};
    CHECK_THROWS_AS(write_obj(bad_face, sink), SpecError);
}

TEST_CASE("obj vertices round-trip through the text format") {
    const FamilySpec family = ex1_family();
    const Mesh mesh =
        slice_surface(family, Param::Q, 0.0, 9, 9, make_projection(4));
    std::ostringstream out;
    write_obj(mesh, out);

    const auto parsed = parse_obj_vertices(out.str());
    REQUIRE(parsed.size() == mesh.vertices.size() + mesh.polylines[0].size());
    for (std::size_t k = 0; k < mesh.vertices.size(); ++k)
        for (int c = 0; c < 3; ++c)
            CHECK(parsed[k][c] ==
                  doctest::Approx(mesh.vertices[k][c]).epsilon(1e-8).scale(1.0));
    for (std::size_t k = 0; k < mesh.polylines[0].size(); ++k)
        for (int c = 0; c < 3; ++c)
            CHECK(parsed[mesh.vertices.size() + k][c] ==
                  doctest::Approx(mesh.polylines[0][k][c]).epsilon(1e-8).scale(1.0));
}

TEST_CASE("csv output lists the two free parameters before the coordinates") {
    Mesh mesh;
    mesh.vertices = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 0, 1}};
    mesh.params = {{0, 0}, {0, 0.25}, {2.5, 0}, {2.5, 0.25}};

    std::ostringstream out;
    write_csv(mesh, out);
    CHECK(out.str() == "s,t_or_q,x,y,z\n"
                       "0,0,0,0,0\n"
                       "0,0.25,0,0,1\n"
                       "2.5,0,1,0,0\n"
                       "2.5,0.25,1,0,1\n");
}

TEST_CASE("file writers report unopenable paths") {
    Mesh mesh;
    mesh.vertices = {{0, 0, 0}};
    mesh.params = {{0, 0}};
    CHECK_THROWS_AS(write_obj(mesh, "/no-such-dir-for-tests/out.obj"), IoError);
    CHECK_THROWS_AS(write_csv(mesh, "/no-such-dir-for-tests/out.csv"), IoError);
}
