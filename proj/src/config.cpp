#include "isoasym/config.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "isoasym/errors.hpp"

namespace isoasym {

using nlohmann::json;

namespace {

/// Collects every offending field so a bad config is reported in one shot.
struct Issues {
    std::vector<std::pair<std::string, std::string>> items;

    void add(std::string path, std::string reason) {
        items.emplace_back(std::move(path), std::move(reason));
    }

    void raise_if_any() const {
        if (items.empty())
            return;
        std::string fields, detail;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) {
                fields += ", ";
                detail += "; ";
            }
            fields += items[i].first;
            if (items.size() > 1)
                detail += items[i].first + ": " + items[i].second;
            else
                detail += items[i].second;
        }
        throw ConfigError(fields, detail);
    }
};

std::string join_path(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
}

void check_unknown(const json& obj, const std::string& base,
                   std::initializer_list<const char*> allowed, Issues& issues) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known)
            issues.add(join_path(base, item.key()), "unknown key");
    }
}

const json* require_object(const json& parent, const std::string& base,
                           const std::string& key, Issues& issues) {
    const std::string path = join_path(base, key);
    if (!parent.contains(key)) {
        issues.add(path, "missing");
        return nullptr;
    }
    if (!parent[key].is_object()) {
        issues.add(path, "must be an object");
        return nullptr;
    }
    return &parent[key];
}

/// Scalar field: a JSON number, or a string evaluated as a constant
/// expression (e.g. "2*pi").
std::optional<double> read_scalar(const json& j, const std::string& path,
                                  Issues& issues) {
    if (j.is_number())
        return j.get<double>();
    if (j.is_string()) {
        try {
            Expr e = parse(j.get<std::string>());
            if (!e.is_constant()) {
                issues.add(path, "expression must be constant");
                return std::nullopt;
            }
            const double v = e.eval(0.0, 0.0, 0.0);
            if (!std::isfinite(v)) {
                issues.add(path, "expression is not finite");
                return std::nullopt;
            }
            return v;
        } catch (const Error& e) {
            issues.add(path, e.what());
            return std::nullopt;
        }
    }
    issues.add(path, "must be a number or constant-expression string");
    return std::nullopt;
}

std::optional<Expr> read_expr(const json& j, const std::string& path,
                              Issues& issues) {
    if (!j.is_string()) {
        issues.add(path, "must be an expression string");
        return std::nullopt;
    }
    try {
        return parse(j.get<std::string>());
    } catch (const Error& e) {
        issues.add(path, e.what());
        return std::nullopt;
    }
}

std::optional<int> read_int(const json& j, const std::string& path, int min_value,
                            Issues& issues) {
    if (!j.is_number_integer()) {
        issues.add(path, "must be an integer");
        return std::nullopt;
    }
    const int v = j.get<int>();
    if (v < min_value) {
        issues.add(path, "must be >= " + std::to_string(min_value));
        return std::nullopt;
    }
    return v;
}

/// [lo, hi] pair where each bound is a scalar field; enforces lo < hi.
bool read_interval(const json& j, const std::string& path, double& lo, double& hi,
                   Issues& issues) {
    if (!j.is_array() || j.size() != 2) {
        issues.add(path, "must be an array of two scalars");
        return false;
    }
    auto a = read_scalar(j[0], path + "[0]", issues);
    auto b = read_scalar(j[1], path + "[1]", issues);
    if (!a || !b)
        return false;
    if (!(*a < *b)) {
        issues.add(path, "bounds must satisfy lo < hi");
        return false;
    }
    lo = *a;
    hi = *b;
    return true;
}

std::string scalar_text(const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void parse_curve(const json& obj, Config& cfg, Issues& issues) {
    check_unknown(obj, "curve", {"components", "s_interval"}, issues);

    if (!obj.contains("components")) {
        issues.add("curve.components", "missing");
    } else if (!obj["components"].is_array()) {
        issues.add("curve.components", "must be an array of 4 expression strings");
    } else {
        const json& comps = obj["components"];
        if (comps.size() > 4)
            issues.add("curve.components", "expected exactly 4 entries, got " +
                                               std::to_string(comps.size()));
        for (std::size_t i = 0; i < 4; ++i) {
            const std::string path = "curve.components[" + std::to_string(i) + "]";
            if (i >= comps.size()) {
                issues.add(path, "missing");
                continue;
            }
            auto e = read_expr(comps[i], path, issues);
            if (!e)
                continue;
            if (e->uses(Var::T) || e->uses(Var::Q)) {
                issues.add(path, "curve components may only use s");
                continue;
            }
            cfg.curve_components[i] = comps[i].get<std::string>();
            cfg.curve_exprs[i] = *e;
        }
    }

    if (!obj.contains("s_interval"))
        issues.add("curve.s_interval", "missing");
    else
        read_interval(obj["s_interval"], "curve.s_interval", cfg.s_min, cfg.s_max,
                      issues);
}

void parse_marching_scale(const json& obj, Config& cfg, Issues& issues) {
    check_unknown(obj, "marching_scale",
                  {"u", "v", "w", "x", "t0", "q0", "t_box", "q_box"}, issues);

    const char* names[4] = {"u", "v", "w", "x"};
    for (int i = 0; i < 4; ++i) {
        const std::string path = join_path("marching_scale", names[i]);
        if (!obj.contains(names[i])) {
            issues.add(path, "missing");
            continue;
        }
        auto e = read_expr(obj[names[i]], path, issues);
        if (!e)
            continue;
        cfg.ms_fields[i] = obj[names[i]].get<std::string>();
        cfg.ms_exprs[i] = *e;
    }

    std::optional<double> t0, q0;
    if (!obj.contains("t0"))
        issues.add("marching_scale.t0", "missing");
    else
        t0 = read_scalar(obj["t0"], "marching_scale.t0", issues);
    if (!obj.contains("q0"))
        issues.add("marching_scale.q0", "missing");
    else
        q0 = read_scalar(obj["q0"], "marching_scale.q0", issues);

    bool t_box_ok = false, q_box_ok = false;
    if (!obj.contains("t_box"))
        issues.add("marching_scale.t_box", "missing");
    else
        t_box_ok = read_interval(obj["t_box"], "marching_scale.t_box",
                                 cfg.t_box[0], cfg.t_box[1], issues);
    if (!obj.contains("q_box"))
        issues.add("marching_scale.q_box", "missing");
    else
        q_box_ok = read_interval(obj["q_box"], "marching_scale.q_box",
                                 cfg.q_box[0], cfg.q_box[1], issues);

    if (t0) {
        cfg.t0 = *t0;
        if (t_box_ok && (*t0 < cfg.t_box[0] || *t0 > cfg.t_box[1]))
            issues.add("marching_scale.t0",
                       "value " + scalar_text(obj["t0"]) + " outside t_box");
    }
    if (q0) {
        cfg.q0 = *q0;
        if (q_box_ok && (*q0 < cfg.q_box[0] || *q0 > cfg.q_box[1]))
            issues.add("marching_scale.q0",
                       "value " + scalar_text(obj["q0"]) + " outside q_box");
    }
}

void parse_grid(const json& obj, Config& cfg, Issues& issues) {
    check_unknown(obj, "grid", {"n_s", "n_t", "n_q"}, issues);
    if (obj.contains("n_s"))
        if (auto v = read_int(obj["n_s"], "grid.n_s", 2, issues))
            cfg.grid.n_s = *v;
    if (obj.contains("n_t"))
        if (auto v = read_int(obj["n_t"], "grid.n_t", 2, issues))
            cfg.grid.n_t = *v;
    if (obj.contains("n_q"))
        if (auto v = read_int(obj["n_q"], "grid.n_q", 2, issues))
            cfg.grid.n_q = *v;
}

void parse_tolerances(const json& obj, Config& cfg, Issues& issues) {
    check_unknown(obj, "tolerances", {"tol_unit", "tol", "tol_nondeg"}, issues);
    struct Entry {
        const char* key;
        double* slot;
    } entries[] = {{"tol_unit", &cfg.tolerances.tol_unit},
                   {"tol", &cfg.tolerances.tol},
                   {"tol_nondeg", &cfg.tolerances.tol_nondeg}};
    for (const auto& entry : entries) {
        if (!obj.contains(entry.key))
            continue;
        const std::string path = join_path("tolerances", entry.key);
        if (auto v = read_scalar(obj[entry.key], path, issues)) {
            if (*v <= 0.0)
                issues.add(path, "must be positive");
            else
                *entry.slot = *v;
        }
    }
}

void parse_slice(const json& obj, Config& cfg, Issues& issues) {
    check_unknown(obj, "slice", {"fix", "value", "project_axis"}, issues);
    cfg.has_slice = true;

    if (!obj.contains("fix")) {
        issues.add("slice.fix", "missing");
    } else if (!obj["fix"].is_string()) {
        issues.add("slice.fix", "must be \"s\", \"t\" or \"q\"");
    } else {
        const std::string fix = obj["fix"].get<std::string>();
        if (fix == "s")
            cfg.slice.fix = Param::S;
        else if (fix == "t")
            cfg.slice.fix = Param::T;
        else if (fix == "q")
            cfg.slice.fix = Param::Q;
        else
            issues.add("slice.fix", "must be \"s\", \"t\" or \"q\", got \"" + fix + "\"");
    }

    if (!obj.contains("value"))
        issues.add("slice.value", "missing");
    else if (auto v = read_scalar(obj["value"], "slice.value", issues))
        cfg.slice.value = *v;

    if (!obj.contains("project_axis")) {
        issues.add("slice.project_axis", "missing");
    } else if (auto v = read_int(obj["project_axis"], "slice.project_axis", 1, issues)) {
        if (*v > 4)
            issues.add("slice.project_axis", "must be 1..4");
        else
            cfg.slice.project_axis = *v;
    }
}

} // namespace

Config parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("(root)", std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ConfigError("(root)", "top level must be an object");

    Issues issues;
    Config cfg;
    check_unknown(root, "", {"curve", "marching_scale", "grid", "tolerances", "slice"},
                  issues);

    if (const json* curve = require_object(root, "", "curve", issues))
        parse_curve(*curve, cfg, issues);
    if (const json* ms = require_object(root, "", "marching_scale", issues))
        parse_marching_scale(*ms, cfg, issues);
    if (root.contains("grid")) {
        if (!root["grid"].is_object())
            issues.add("grid", "must be an object");
        else
            parse_grid(root["grid"], cfg, issues);
    }
    if (root.contains("tolerances")) {
        if (!root["tolerances"].is_object())
            issues.add("tolerances", "must be an object");
        else
            parse_tolerances(root["tolerances"], cfg, issues);
    }
    if (root.contains("slice")) {
        if (!root["slice"].is_object())
            issues.add("slice", "must be an object");
        else
            parse_slice(root["slice"], cfg, issues);
    }

    issues.raise_if_any();
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read config file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["isoparametric_pass"] = r.isoparametric_pass;
    j["max_abs_uvwx_on_curve"] = r.max_abs_uvwx_on_curve;
    j["max_abs_s_partials_on_curve"] = r.max_abs_s_partials_on_curve;
    j["asymptotic_checked"] = r.asymptotic_checked;
    j["asymptotic_pass"] = r.asymptotic_pass;
    j["max_abs_phi1"] = r.max_abs_phi1;
    j["max_abs_phi2"] = r.max_abs_phi2;
    j["min_phi3sq_plus_phi4sq"] = r.min_phi3sq_plus_phi4sq;
    j["max_abs_normal_dot_N"] = r.max_abs_normal_dot_N;
    j["normal_singular_points"] = r.normal_singular_points;
    j["grid"] = {{"n_s", r.grid.n_s},
                 {"s_min", r.grid.s_min},
                 {"s_max", r.grid.s_max},
                 {"t0", r.grid.t0},
                 {"q0", r.grid.q0},
                 {"tol", r.grid.tol},
                 {"tol_nondeg", r.grid.tol_nondeg}};
    j["passed"] = r.passed();
    return j.dump(2);
}

FamilySpec Config::make_family() const {
    CurveSpec curve(curve_exprs, s_min, s_max);
    MarchingScale ms(ms_exprs[0], ms_exprs[1], ms_exprs[2], ms_exprs[3], t0, q0,
                     t_box, q_box);
    return FamilySpec(std::move(curve), std::move(ms), grid.n_s,
                      tolerances.tol_unit);
}

} // namespace isoasym
