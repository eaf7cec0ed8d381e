#include "isoasym/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "isoasym/errors.hpp"

namespace isoasym {

std::array<double, 3> Projection::apply(const Vec4& p) const {
    switch (drop_axis) {
    case 1: return {p.x2, p.x3, p.x4};
    case 2: return {p.x1, p.x3, p.x4};
    case 3: return {p.x1, p.x2, p.x4};
    case 4: return {p.x1, p.x2, p.x3};
    default:
        throw SpecError("projection axis must be 1..4, got " +
                        std::to_string(drop_axis));
    }
}

Projection make_projection(int drop_axis) {
    if (drop_axis < 1 || drop_axis > 4)
        throw SpecError("projection axis must be 1..4, got " +
                        std::to_string(drop_axis));
    return Projection{drop_axis};
}

namespace {

double lerp_grid(double lo, double hi, int i, int n) {
    if (i == 0) return lo;
    if (i == n - 1) return hi; // rounding must not leave [lo, hi]
    return lo + (hi - lo) * (static_cast<double>(i) / (n - 1));
}

} // namespace

Mesh slice_surface(const FamilySpec& family, Param fixed, double value, int n_a,
                   int n_b, const Projection& proj) {
    if (n_a < 2 || n_b < 2)
        throw SpecError("mesh grid dimensions must be >= 2, got " +
                        std::to_string(n_a) + "x" + std::to_string(n_b));
    make_projection(proj.drop_axis);

    const CurveSpec& curve = family.curve();
    const MarchingScale& ms = family.ms();
    const double s_min = curve.s_min(), s_max = curve.s_max();

    // Ranges of the two free parameters, kept in canonical (s, t, q) order.
    double a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
    switch (fixed) {
    case Param::S:
        if (value < s_min || value > s_max)
            throw SpecError("fixed s outside the curve interval");
        a_lo = ms.t_box()[0]; a_hi = ms.t_box()[1];
        b_lo = ms.q_box()[0]; b_hi = ms.q_box()[1];
        break;
    case Param::T:
        if (value < ms.t_box()[0] || value > ms.t_box()[1])
            throw SpecError("fixed t outside the t box");
        a_lo = s_min; a_hi = s_max;
        b_lo = ms.q_box()[0]; b_hi = ms.q_box()[1];
        break;
    case Param::Q:
        if (value < ms.q_box()[0] || value > ms.q_box()[1])
            throw SpecError("fixed q outside the q box");
        a_lo = s_min; a_hi = s_max;
        b_lo = ms.t_box()[0]; b_hi = ms.t_box()[1];
        break;
    }

    Mesh mesh;
    mesh.vertices.reserve(static_cast<std::size_t>(n_a) * n_b);
    mesh.params.reserve(static_cast<std::size_t>(n_a) * n_b);
    for (int i = 0; i < n_a; ++i) {
        const double a = lerp_grid(a_lo, a_hi, i, n_a);
        for (int j = 0; j < n_b; ++j) {
            const double b = lerp_grid(b_lo, b_hi, j, n_b);
            double s, t, q;
            switch (fixed) {
            case Param::S: s = value; t = a; q = b; break;
            case Param::T: s = a; t = value; q = b; break;
            default:       s = a; t = b; q = value; break;
            }
            mesh.vertices.push_back(proj.apply(family.eval_surface(s, t, q)));
            mesh.params.push_back({a, b});
        }
    }

    mesh.quads.reserve(static_cast<std::size_t>(n_a - 1) * (n_b - 1));
    for (int i = 0; i + 1 < n_a; ++i)
        for (int j = 0; j + 1 < n_b; ++j)
            mesh.quads.push_back({i * n_b + j, (i + 1) * n_b + j,
                                  (i + 1) * n_b + j + 1, i * n_b + j + 1});

    // Curve overlay: proj(r(s)) sampled like the mesh's s direction (for a
    // fixed-s slice the full interval is still traced so the overlay shows
    // where the curve passes).
    std::vector<std::array<double, 3>> curve_line;
    curve_line.reserve(n_a);
    for (int i = 0; i < n_a; ++i) {
        const double s = lerp_grid(s_min, s_max, i, n_a);
        curve_line.push_back(proj.apply(curve.derivative(s, 0)));
    }
    mesh.polylines.push_back(std::move(curve_line));
    return mesh;
}

namespace {

void put_coord(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    out << buf;
}

void put_vertex(std::ostream& out, const std::array<double, 3>& p) {
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || !std::isfinite(p[2]))
        throw SpecError("mesh contains a non-finite vertex");
    out << "v ";
    put_coord(out, p[0]);
    out << ' ';
    put_coord(out, p[1]);
    out << ' ';
    put_coord(out, p[2]);
    out << '\n';
}

} // namespace

void write_obj(const Mesh& mesh, std::ostream& out) {
    const int n_grid = static_cast<int>(mesh.vertices.size());
    for (const auto& p : mesh.vertices)
        put_vertex(out, p);
    for (const auto& f : mesh.quads) {
        for (int k : f)
            if (k < 0 || k >= n_grid)
                throw SpecError("mesh face index out of range");
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' '
            << f[3] + 1 << '\n';
    }
    int next = n_grid + 1; // OBJ indices are 1-based
    for (const auto& line : mesh.polylines) {
        if (line.size() < 2)
            continue;
        for (const auto& p : line)
            put_vertex(out, p);
        out << 'l';
        for (std::size_t k = 0; k < line.size(); ++k)
            out << ' ' << next + static_cast<int>(k);
        out << '\n';
        next += static_cast<int>(line.size());
    }
}

void write_obj(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    write_obj(mesh, out);
    out.flush();
    if (!out)
        throw IoError("write failed: " + path);
}

void write_csv(const Mesh& mesh, std::ostream& out) {
    out << "s,t_or_q,x,y,z\n";
    for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
        const auto& pr = mesh.params[k];
        const auto& p = mesh.vertices[k];
        put_coord(out, pr[0]);
        out << ',';
        put_coord(out, pr[1]);
        for (double c : p) {
            out << ',';
            put_coord(out, c);
        }
        out << '\n';
    }
}

void write_csv(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    write_csv(mesh, out);
    out.flush();
    if (!out)
        throw IoError("write failed: " + path);
}

} // namespace isoasym
