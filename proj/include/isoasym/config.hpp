#pragma once

#include <array>
#include <string>
#include <vector>

#include "isoasym/family.hpp"
#include "isoasym/mesh.hpp"

namespace isoasym {

struct GridConfig {
    int n_s = 257;
    int n_t = 25;
    int n_q = 25;
};

struct ToleranceConfig {
    double tol_unit = CurveSpec::kDefaultUnitSpeedTol;
    double tol = kDefaultCheckTol;
    double tol_nondeg = kDefaultNondegTol;
};

struct SliceConfig {
    Param fix = Param::Q;
    double value = 0.0;
    int project_axis = 4;
};

/// Parsed configuration. Expression fields keep their source text (so a
/// config can be re-emitted) alongside the parsed trees.
struct Config {
    std::array<std::string, 4> curve_components;
    std::array<Expr, 4> curve_exprs;
    double s_min = 0.0;
    double s_max = 0.0;

    std::array<std::string, 4> ms_fields; // u, v, w, x
    std::array<Expr, 4> ms_exprs;
    double t0 = 0.0;
    double q0 = 0.0;
    std::array<double, 2> t_box{0.0, 1.0};
    std::array<double, 2> q_box{0.0, 1.0};

    GridConfig grid;
    ToleranceConfig tolerances;
    bool has_slice = false;
    SliceConfig slice;

    /// Builds the pencil, re-validating the curve with the configured
    /// sampling. Throws SpecError when the curve fails validation.
    FamilySpec make_family() const;
};

/// Strict parse of the documented JSON schema: unknown keys, missing keys,
/// wrong types, unparseable expressions, and out-of-box anchors are all
/// collected and reported in one ConfigError (field paths are dotted, e.g.
/// "marching_scale.t0"). Scalar fields accepting "number or string" evaluate
/// the string as a constant expression ("2*pi").
Config parse_config(const std::string& json_text);

/// parse_config over a file's contents. Throws IoError if unreadable.
Config load_config(const std::string& path);

/// Deterministic JSON rendering of a verification report: fixed key order,
/// shortest-round-trip numbers, two-space indent. Identical reports yield
/// identical bytes.
std::string report_json(const VerificationReport& report);

/// Builtin example names in emission order: ex1, ex2a, ex2b.
const std::vector<std::string>& example_names();

/// Canonical JSON for a builtin example, byte-stable across runs.
/// Throws ConfigError for an unknown name.
const std::string& example_config(const std::string& name);

} // namespace isoasym
