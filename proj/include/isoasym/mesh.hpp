#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "isoasym/family.hpp"

namespace isoasym {

/// Parallel projection R^4 -> R^3 that deletes one coordinate (1-based axis).
struct Projection {
    int drop_axis = 4;

    std::array<double, 3> apply(const Vec4& p) const;
};

Projection make_projection(int drop_axis); // throws SpecError unless 1..4

enum class Param { S, T, Q };

/// Tessellated slice of the pencil: a quad grid of projected surface points
/// plus polylines (the projected curve overlay). `params` carries the two
/// free parameter values per vertex, in canonical (s,t,q) order.
struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 4>> quads; // row-major grid connectivity
    std::vector<std::vector<std::array<double, 3>>> polylines;
    std::vector<std::array<double, 2>> params;
};

/// Fixes one of s, t, q at `value` and evaluates the surface over an
/// n_a x n_b uniform grid of the two remaining parameters (in canonical
/// order). The curve polyline samples proj(r(s)) at n_a points. The fixed
/// value must lie inside its box; grid dims must be >= 2.
Mesh slice_surface(const FamilySpec& family, Param fixed, double value, int n_a,
                   int n_b, const Projection& proj);

/// Wavefront OBJ: one `v` line per vertex (9 significant digits), `f` quad
/// lines, and one `l` chain per polyline (polyline points are appended after
/// the grid vertices). Throws SpecError on non-finite vertices, IoError on
/// write failure.
void write_obj(const Mesh& mesh, std::ostream& out);
void write_obj(const Mesh& mesh, const std::string& path);

/// CSV vertex dump: header `s,t_or_q,x,y,z`, one row per grid vertex.
void write_csv(const Mesh& mesh, std::ostream& out);
void write_csv(const Mesh& mesh, const std::string& path);

} // namespace isoasym
