#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "isoasym/config.hpp"
#include "isoasym/errors.hpp"
#include "isoasym/frenet.hpp"
#include "isoasym/mesh.hpp"

namespace {

using namespace isoasym;

Config resolve_config(const std::string& path, const std::string& name) {
    if (!path.empty() && !name.empty())
        throw ConfigError("--config/--name", "give exactly one, not both");
    if (!path.empty())
        return load_config(path);
    if (!name.empty())
        return parse_config(example_config(name));
    throw ConfigError("--config/--name", "one of --config or --name is required");
}

CurveSpec make_curve(const Config& cfg) {
    return CurveSpec({cfg.curve_exprs[0], cfg.curve_exprs[1], cfg.curve_exprs[2],
                      cfg.curve_exprs[3]},
                     cfg.s_min, cfg.s_max);
}

void parse_fix(const std::string& text, Param& fix, double& value) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--fix", "expected (s|t|q)=VALUE, got \"" + text + "\"");
    const std::string var = text.substr(0, eq);
    if (var == "s")
        fix = Param::S;
    else if (var == "t")
        fix = Param::T;
    else if (var == "q")
        fix = Param::Q;
    else
        throw ConfigError("--fix", "parameter must be s, t or q, got \"" + var + "\"");
    const Expr e = parse(text.substr(eq + 1));
    if (!e.is_constant())
        throw ConfigError("--fix", "value must be a constant expression");
    value = e.eval(0.0, 0.0, 0.0);
}

int parse_project(const std::string& text) {
    const std::string prefix = "drop:";
    if (text.rfind(prefix, 0) != 0)
        throw ConfigError("--project", "expected drop:AXIS, got \"" + text + "\"");
    int axis = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, axis);
    if (ec != std::errc{} || ptr != last || axis < 1 || axis > 4)
        throw ConfigError("--project", "axis must be 1..4, got \"" + text + "\"");
    return axis;
}

int cmd_frenet(const Config& cfg, int samples) {
    if (samples < 1)
        throw ConfigError("--samples", "must be >= 1");
    const CurveSpec curve = make_curve(cfg);
    const CurveValidation val =
        curve.validate(cfg.grid.n_s, cfg.tolerances.tol_unit);
    if (!val.passed())
        throw SpecError(
            "curve fails validation: max | ||r'|| - 1 | = " +
            std::to_string(val.max_unit_speed_dev) +
            ", min ||r''|| = " + std::to_string(val.min_second_deriv_norm));

    std::printf("%12s %11s %11s %11s", "s", "kappa1", "kappa2", "kappa3");
    const char* frames[4] = {"T", "N", "B1", "B2"};
    for (const char* f : frames)
        for (int i = 1; i <= 4; ++i)
            std::printf(" %10s.%d", f, i);
    std::printf("\n");

    for (int k = 0; k < samples; ++k) {
        const double s =
            samples == 1
                ? curve.s_min()
                : curve.s_min() + (curve.s_max() - curve.s_min()) * k / (samples - 1);
        const FrenetData fd = frenet_apparatus(curve, s);
        std::printf("%12.7f %11.7f %11.7f %11.7f", fd.s, fd.kappa1, fd.kappa2,
                    fd.kappa3);
        for (const Vec4* vec : {&fd.T, &fd.N, &fd.B1, &fd.B2})
            for (int i = 0; i < 4; ++i)
                std::printf(" %12.7f", (*vec)[i]);
        std::printf("\n");
    }
    return 0;
}

int cmd_verify(const Config& cfg) {
    const FamilySpec family = cfg.make_family();
    const VerificationReport report = check_asymptotic(
        family, cfg.grid.n_s, cfg.tolerances.tol, cfg.tolerances.tol_nondeg);
    std::cout << report_json(report) << "\n";
    return report.passed() ? 0 : 1;
}

int cmd_mesh(const Config& cfg, const std::string& fix_text,
             const std::string& project_text, const std::string& out_path,
             int s_samples) {
    SliceConfig slice = cfg.slice;
    if (!cfg.has_slice && (fix_text.empty() || project_text.empty()))
        throw ConfigError("slice",
                          "config has no slice section; pass --fix and --project");
    if (!fix_text.empty())
        parse_fix(fix_text, slice.fix, slice.value);
    if (!project_text.empty())
        slice.project_axis = parse_project(project_text);

    const FamilySpec family = cfg.make_family();
    int n_a, n_b;
    switch (slice.fix) {
    case Param::S: n_a = cfg.grid.n_t; n_b = cfg.grid.n_q; break;
    case Param::T: n_a = s_samples;    n_b = cfg.grid.n_q; break;
    default:       n_a = s_samples;    n_b = cfg.grid.n_t; break;
    }
    const Mesh mesh = slice_surface(family, slice.fix, slice.value, n_a, n_b,
                                    make_projection(slice.project_axis));
    write_obj(mesh, out_path);
    std::cout << "wrote " << out_path << " (" << mesh.vertices.size()
              << " vertices, " << mesh.quads.size() << " quads)\n";
    return 0;
}

int cmd_example(const std::string& name, const std::string& out_path) {
    if (name.empty()) {
        for (const auto& n : example_names())
            std::cout << n << "\n";
        return 0;
    }
    const std::string& text = example_config(name);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out)
        throw IoError("cannot open for writing: " + out_path);
    out << text;
    out.flush();
    if (!out)
        throw IoError("write failed: " + out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Families of hypersurfaces in R^4 sharing a curve as a common "
                 "isoasymptotic: frame computation, verification, mesh export"};
    app.require_subcommand(1);

    std::string config_path, name, fix_text, project_text;
    std::string mesh_out = "mesh.obj";
    std::string example_out;
    int samples_frenet = 9;
    int samples_mesh = 25;

    auto* fr = app.add_subcommand(
        "frenet", "Print curvatures and the moving frame along the curve");
    fr->add_option("--config", config_path, "JSON config path");
    fr->add_option("--name", name, "builtin example: ex1, ex2a, ex2b");
    fr->add_option("--samples", samples_frenet, "number of sample rows");

    auto* ve = app.add_subcommand(
        "verify", "Check the common-isoasymptotic conditions, report as JSON");
    ve->add_option("--config", config_path, "JSON config path");
    ve->add_option("--name", name, "builtin example: ex1, ex2a, ex2b");

    auto* me = app.add_subcommand(
        "mesh", "Export a projected parameter slice as a Wavefront OBJ");
    me->add_option("--config", config_path, "JSON config path");
    me->add_option("--name", name, "builtin example: ex1, ex2a, ex2b");
    me->add_option("--fix", fix_text, "fixed parameter, e.g. q=0");
    me->add_option("--project", project_text, "projection, e.g. drop:4");
    me->add_option("--out", mesh_out, "output OBJ path");
    me->add_option("--samples", samples_mesh, "mesh samples along s");

    auto* ex = app.add_subcommand("example",
                                  "Emit a builtin example config (JSON)");
    ex->add_option("--name", name, "builtin example: ex1, ex2a, ex2b");
    ex->add_option("--out", example_out, "output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*fr)
            return cmd_frenet(resolve_config(config_path, name), samples_frenet);
        if (*ve)
            return cmd_verify(resolve_config(config_path, name));
        if (*me)
            return cmd_mesh(resolve_config(config_path, name), fix_text,
                            project_text, mesh_out, samples_mesh);
        if (*ex)
            return cmd_example(name, example_out);
    } catch (const isoasym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
